#include "coarsekit/scalar.hpp"

#include <charconv>

namespace coarsekit {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw PreconditionError("malformed number \"" + std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

Scale parse_scale(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Scale(parse_integer(text, text));
  }
  auto num = parse_integer(text.substr(0, slash), text);
  auto den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw PreconditionError("zero denominator in \"" + std::string(text) + "\"");
  }
  return Scale(num, den);
}

std::string to_string(const Scale& value) {
  if (value.denominator() == 1) {
    return std::to_string(value.numerator());
  }
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

std::int64_t floor_of(const Scale& value) {
  return floor_div(value.numerator(), value.denominator());
}

}  // namespace coarsekit
