#include "coarsekit/point.hpp"

#include <algorithm>

namespace coarsekit {

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                b.coords_.begin(), b.coords_.end());
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  // splitmix-style mixing; payloads are short
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ p.size();
  for (auto c : p.coords()) {
    std::uint64_t x = static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    h ^= x;
  }
  return static_cast<std::size_t>(h);
}

std::string debug_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) {
      out += ",";
    }
    out += std::to_string(p[i]);
  }
  out += ")";
  return out;
}

}  // namespace coarsekit
