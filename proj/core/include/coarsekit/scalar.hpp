#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74 rational compared to a bare integer with == or != recurses under
// C++20 rewritten comparisons. These overloads turn such uses into compile
// errors; compare against Scale(n) instead.
namespace boost {
#define COARSEKIT_NO_MIXED_EQ(I)                                    \
  bool operator==(const rational<std::int64_t>&, I) = delete;       \
  bool operator==(I, const rational<std::int64_t>&) = delete;       \
  bool operator!=(const rational<std::int64_t>&, I) = delete;       \
  bool operator!=(I, const rational<std::int64_t>&) = delete;
COARSEKIT_NO_MIXED_EQ(int)
COARSEKIT_NO_MIXED_EQ(long)
COARSEKIT_NO_MIXED_EQ(long long)
COARSEKIT_NO_MIXED_EQ(unsigned)
COARSEKIT_NO_MIXED_EQ(unsigned long)
#undef COARSEKIT_NO_MIXED_EQ
}  // namespace boost

namespace coarsekit {

// Every supported metric is integer valued. Radii, scales, and control
// coefficients may be rational ("r = 1/2" separates integer points).
using Distance = std::int64_t;
using Scale = boost::rational<std::int64_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ModelMismatch : public Error {
 public:
  using Error::Error;
};

[[nodiscard]] inline bool within(Distance d, const Scale& r) { return Scale(d) <= r; }
[[nodiscard]] inline bool beyond(Distance d, const Scale& r) { return Scale(d) > r; }

/// Parses "7", "-3", or "p/q"; throws PreconditionError on malformed text.
[[nodiscard]] Scale parse_scale(std::string_view text);
[[nodiscard]] std::string to_string(const Scale& value);

[[nodiscard]] std::int64_t floor_of(const Scale& value);
[[nodiscard]] std::int64_t floor_div(std::int64_t a, std::int64_t b);

}  // namespace coarsekit
