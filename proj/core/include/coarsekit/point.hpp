#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>

#include <boost/container/small_vector.hpp>

namespace coarsekit {

/// A point of a supported universe, stored as its canonical integer payload.
///
/// Lattice points are coordinate tuples, table points are a single index, and
/// group elements carry their model's normal-form encoding. Payload order is
/// lexicographic, which makes sorted containers of points reproducible.
class Point {
 public:
  using Storage = boost::container::small_vector<std::int64_t, 4>;

  Point() = default;
  Point(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit Point(Storage coords) : coords_(std::move(coords)) {}

  [[nodiscard]] const Storage& coords() const { return coords_; }
  [[nodiscard]] std::size_t size() const { return coords_.size(); }
  [[nodiscard]] std::int64_t operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

 private:
  Storage coords_;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

/// Group elements share the point representation so that Cayley spaces,
/// orbit maps, and quasi-stabilizers need no conversions.
using GroupElement = Point;

[[nodiscard]] std::string debug_string(const Point& p);

}  // namespace coarsekit
