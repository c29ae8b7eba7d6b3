#include "coarsekit/metric.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace coarsekit {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::IntegerLine:
      return "integer-line";
    case SpaceKind::IntegerGrid:
      return "integer-grid";
    case SpaceKind::Cayley:
      return "cayley";
    case SpaceKind::Table:
      return "table";
  }
  return "unknown";
}

struct MetricSpace::Impl {
  Definition def;
  std::vector<Point> window;
  std::unordered_map<Point, std::size_t, PointHash> index;
  std::string window_id;
  std::optional<WindowBall> ball;
};

MetricSpace::MetricSpace(Definition definition, std::vector<Point> window, std::string window_id,
                         std::optional<WindowBall> ball) {
  if (!definition.distance || !definition.contains) {
    throw PreconditionError("metric space needs a distance and a membership test");
  }
  auto impl = std::make_shared<Impl>();
  std::sort(window.begin(), window.end());
  if (std::adjacent_find(window.begin(), window.end()) != window.end()) {
    throw PreconditionError("window lists a point twice");
  }
  for (const auto& p : window) {
    if (!definition.contains(p)) {
      throw PreconditionError("window point " + debug_string(p) + " is not in " +
                              definition.universe_id);
    }
  }
  impl->index.reserve(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) {
    impl->index.emplace(window[i], i);
  }
  impl->def = std::move(definition);
  impl->window = std::move(window);
  impl->window_id = std::move(window_id);
  impl->ball = std::move(ball);
  impl_ = std::move(impl);
}

namespace {

Distance l1(const Point& a, const Point& b) {
  Distance total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += std::abs(a[i] - b[i]);
  }
  return total;
}

MetricSpace::Definition lattice_definition(int dimension) {
  MetricSpace::Definition def;
  def.kind = dimension == 1 ? SpaceKind::IntegerLine : SpaceKind::IntegerGrid;
  def.universe_id = dimension == 1 ? "Z" : "Z^" + std::to_string(dimension);
  def.dimension = dimension;
  def.distance = [](const Point& a, const Point& b) { return l1(a, b); };
  def.contains = [dimension](const Point& p) {
    return p.size() == static_cast<std::size_t>(dimension);
  };
  return def;
}

void enumerate_ball(int dimension, Distance radius, Point::Storage& prefix, Distance used,
                    std::vector<Point>& out) {
  if (static_cast<int>(prefix.size()) == dimension) {
    out.emplace_back(prefix);
    return;
  }
  Distance left = radius - used;
  for (Distance c = -left; c <= left; ++c) {
    prefix.push_back(c);
    enumerate_ball(dimension, radius, prefix, used + std::abs(c), out);
    prefix.pop_back();
  }
}

void enumerate_box(int dimension, std::int64_t lo, std::int64_t hi, Point::Storage& prefix,
                   std::vector<Point>& out) {
  if (static_cast<int>(prefix.size()) == dimension) {
    out.emplace_back(prefix);
    return;
  }
  for (std::int64_t c = lo; c <= hi; ++c) {
    prefix.push_back(c);
    enumerate_box(dimension, lo, hi, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MetricSpace MetricSpace::integer_line(std::int64_t lo, std::int64_t hi) {
  std::vector<Point> window;
  if (hi >= lo) {
    window.reserve(static_cast<std::size_t>(hi - lo + 1));
  }
  for (std::int64_t x = lo; x <= hi; ++x) {
    window.push_back(Point{x});
  }
  std::optional<WindowBall> ball;
  if (hi >= lo && (lo + hi) % 2 == 0) {
    ball = WindowBall{Point{(lo + hi) / 2}, (hi - lo) / 2};
  }
  return MetricSpace(lattice_definition(1), std::move(window),
                     "[" + std::to_string(lo) + "," + std::to_string(hi) + "]", ball);
}

MetricSpace MetricSpace::integer_grid_ball(int dimension, Distance radius) {
  if (dimension < 1) {
    throw PreconditionError("lattice dimension must be positive");
  }
  std::vector<Point> window;
  Point::Storage prefix;
  if (radius >= 0) {
    enumerate_ball(dimension, radius, prefix, 0, window);
  }
  Point center{Point::Storage(static_cast<std::size_t>(dimension), 0)};
  return MetricSpace(lattice_definition(dimension), std::move(window),
                     "ball(" + std::to_string(radius) + ")", WindowBall{center, radius});
}

MetricSpace MetricSpace::integer_grid_box(int dimension, std::int64_t lo, std::int64_t hi) {
  if (dimension < 1) {
    throw PreconditionError("lattice dimension must be positive");
  }
  std::vector<Point> window;
  Point::Storage prefix;
  enumerate_box(dimension, lo, hi, prefix, window);
  return MetricSpace(lattice_definition(dimension), std::move(window),
                     "box[" + std::to_string(lo) + "," + std::to_string(hi) + "]^" +
                         std::to_string(dimension));
}

MetricSpace MetricSpace::table(std::vector<std::vector<Distance>> matrix) {
  const std::size_t n = matrix.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      throw PreconditionError("distance table is not square");
    }
    if (matrix[i][i] != 0) {
      throw PreconditionError("distance table has a nonzero diagonal entry at " +
                              std::to_string(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j] < 0 || matrix[i][j] != matrix[j][i]) {
        throw PreconditionError("distance table is negative or asymmetric at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (i != j && matrix[i][j] == 0) {
        throw PreconditionError("distinct table points at distance 0");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (matrix[i][k] > matrix[i][j] + matrix[j][k]) {
          throw PreconditionError("triangle inequality fails on (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  Definition def;
  def.kind = SpaceKind::Table;
  def.universe_id = "table(" + std::to_string(n) + ")";
  def.finite_universe = true;
  def.table = matrix;
  auto shared = std::make_shared<const std::vector<std::vector<Distance>>>(std::move(matrix));
  def.distance = [shared](const Point& a, const Point& b) {
    return (*shared)[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(b[0])];
  };
  def.contains = [n](const Point& p) {
    return p.size() == 1 && p[0] >= 0 && static_cast<std::size_t>(p[0]) < n;
  };
  std::vector<Point> window;
  window.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    window.push_back(Point{static_cast<std::int64_t>(i)});
  }
  return MetricSpace(std::move(def), std::move(window), "all");
}

SpaceKind MetricSpace::kind() const { return impl_->def.kind; }
const std::string& MetricSpace::universe_id() const { return impl_->def.universe_id; }
const std::string& MetricSpace::window_id() const { return impl_->window_id; }
int MetricSpace::dimension() const { return impl_->def.dimension; }
bool MetricSpace::finite_universe() const { return impl_->def.finite_universe; }
const std::shared_ptr<const GroupModel>& MetricSpace::group() const { return impl_->def.group; }
const std::vector<std::vector<Distance>>& MetricSpace::table_matrix() const {
  return impl_->def.table;
}

Distance MetricSpace::distance(const Point& a, const Point& b) const {
  return impl_->def.distance(a, b);
}

bool MetricSpace::in_universe(const Point& p) const { return impl_->def.contains(p); }

std::span<const Point> MetricSpace::window() const { return impl_->window; }

bool MetricSpace::in_window(const Point& p) const { return impl_->index.contains(p); }

std::optional<std::size_t> MetricSpace::window_index(const Point& p) const {
  auto it = impl_->index.find(p);
  if (it == impl_->index.end()) {
    return std::nullopt;
  }
  return it->second;
}

const std::optional<WindowBall>& MetricSpace::window_ball() const { return impl_->ball; }

MetricSpace MetricSpace::with_window(std::vector<Point> window, std::string window_id,
                                     std::optional<WindowBall> ball) const {
  return MetricSpace(impl_->def, std::move(window), std::move(window_id), std::move(ball));
}

std::vector<Point> MetricSpace::core_window(Distance shrink) const {
  if (!impl_->ball) {
    throw PreconditionError("core sub-window needs a ball-shaped window");
  }
  std::vector<Point> core;
  const auto& ball = *impl_->ball;
  for (const auto& p : impl_->window) {
    if (distance(ball.center, p) <= ball.radius - shrink) {
      core.push_back(p);
    }
  }
  return core;
}

bool MetricSpace::same_universe(const MetricSpace& other) const {
  return impl_ == other.impl_ || impl_->def.universe_id == other.impl_->def.universe_id;
}

Subset::Subset(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) {
    throw PreconditionError("subset lists point " + debug_string(*dup) + " twice");
  }
}

bool Subset::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool in_enlargement(const MetricSpace& space, const Subset& s, const Scale& b, const Point& y) {
  return std::any_of(s.points().begin(), s.points().end(),
                     [&](const Point& x) { return within(space.distance(x, y), b); });
}

Subset enlargement(const MetricSpace& space, const Subset& s, const Scale& b) {
  if (s.empty()) {
    throw PreconditionError("empty subset");
  }
  std::vector<Point> out;
  for (const auto& x : space.window()) {
    if (in_enlargement(space, s, b, x)) {
      out.push_back(x);
    }
  }
  return Subset(std::move(out));
}

Distance set_distance(const MetricSpace& space, const Subset& s, const Subset& t) {
  if (s.empty() || t.empty()) {
    throw PreconditionError("set distance of an empty subset");
  }
  Distance best = space.distance(s.front(), t.front());
  for (const auto& a : s.points()) {
    for (const auto& b : t.points()) {
      best = std::min(best, space.distance(a, b));
      if (best == 0) {
        return 0;
      }
    }
  }
  return best;
}

namespace {

struct Pivot {
  const Point* center = nullptr;
  Distance radius = 0;
};

Pivot make_pivot(const MetricSpace& space, const Subset& s) {
  Pivot p;
  if (s.empty()) {
    return p;
  }
  p.center = &s.front();
  for (const auto& x : s.points()) {
    p.radius = std::max(p.radius, space.distance(*p.center, x));
  }
  return p;
}

}  // namespace

namespace {

// The witness reports the closest pair of the offending members.
SeparationWitness closest_pair(const MetricSpace& space, std::span<const Subset> members,
                               std::size_t a, std::size_t b) {
  SeparationWitness best{a, b, members[a].front(), members[b].front(),
                         std::numeric_limits<Distance>::max()};
  for (const auto& x : members[a].points()) {
    for (const auto& y : members[b].points()) {
      Distance d = space.distance(x, y);
      if (d < best.distance) {
        best.point_a = x;
        best.point_b = y;
        best.distance = d;
      }
    }
  }
  return best;
}

}  // namespace

std::optional<SeparationWitness> find_separation_violation(const MetricSpace& space,
                                                           std::span<const Subset> members,
                                                           const Scale& r) {
  std::vector<Pivot> pivots;
  pivots.reserve(members.size());
  for (const auto& m : members) {
    pivots.push_back(make_pivot(space, m));
  }
  // y lies in S_a[r] iff some x in S_a has d(x,y) <= r. The triangle
  // inequality through each member's pivot discards far pairs and points
  // without changing the answer.
  for (std::size_t a = 0; a < members.size(); ++a) {
    if (members[a].empty()) {
      continue;
    }
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (members[b].empty()) {
        continue;
      }
      Distance pivot_gap = space.distance(*pivots[a].center, *pivots[b].center);
      if (beyond(pivot_gap - pivots[a].radius - pivots[b].radius, r)) {
        continue;
      }
      for (const auto& y : members[b].points()) {
        if (beyond(space.distance(*pivots[a].center, y) - pivots[a].radius, r)) {
          continue;
        }
        for (const auto& x : members[a].points()) {
          Distance d = space.distance(x, y);
          if (within(d, r)) {
            return closest_pair(space, members, a, b);
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_r_disjoint(const MetricSpace& space, const SubsetFamily& family, const Scale& r) {
  return !find_separation_violation(space, family.members, r).has_value();
}

bool is_r_disjoint_by_distance(const MetricSpace& space, const SubsetFamily& family,
                               const Scale& r) {
  const auto& m = family.members;
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (m[a].empty() || m[b].empty()) {
        continue;
      }
      if (!beyond(set_distance(space, m[a], m[b]), r)) {
        return false;
      }
    }
  }
  return true;
}

Distance subset_diameter(const MetricSpace& space, const Subset& s) {
  if (s.empty()) {
    throw PreconditionError("diameter of an empty member");
  }
  Distance best = 0;
  auto pts = s.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, space.distance(pts[i], pts[j]));
    }
  }
  return best;
}

FamilyDiameter family_diameter(const MetricSpace& space, const SubsetFamily& family) {
  FamilyDiameter out;
  out.window_relative = !space.finite_universe();
  for (const auto& m : family.members) {
    out.value = std::max(out.value, subset_diameter(space, m));
  }
  return out;
}

CoverCheck is_cover(std::span<const SubsetFamily> families, std::span<const Point> window) {
  std::unordered_set<Point, PointHash> covered;
  for (const auto& fam : families) {
    for (const auto& m : fam.members) {
      covered.insert(m.points().begin(), m.points().end());
    }
  }
  CoverCheck out;
  for (const auto& p : window) {
    if (!covered.contains(p)) {
      out.covered = false;
      out.uncovered.push_back(p);
    }
  }
  return out;
}

}  // namespace coarsekit
