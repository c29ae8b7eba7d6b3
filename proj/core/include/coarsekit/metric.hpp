#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coarsekit/point.hpp"
#include "coarsekit/scalar.hpp"

namespace coarsekit {

class GroupModel;

enum class SpaceKind { IntegerLine, IntegerGrid, Cayley, Table };

[[nodiscard]] std::string to_string(SpaceKind kind);

/// Center and radius of a ball-shaped window, kept so that core sub-windows
/// and window descriptors can be reconstructed.
struct WindowBall {
  Point center;
  Distance radius = 0;
};

/// A point universe with an exact distance and a finite designated window.
///
/// Lazy universes (Z, Z^d, Cayley graphs) evaluate distances on demand and
/// accept points outside the window; table universes are finite. Instances
/// are immutable and cheap to copy.
class MetricSpace {
 public:
  using DistanceFn = std::function<Distance(const Point&, const Point&)>;
  using MembershipFn = std::function<bool(const Point&)>;

  struct Definition {
    SpaceKind kind = SpaceKind::Table;
    std::string universe_id;
    DistanceFn distance;
    MembershipFn contains;
    bool finite_universe = false;
    int dimension = 0;
    std::shared_ptr<const GroupModel> group;
    std::vector<std::vector<Distance>> table;
  };

  MetricSpace(Definition definition, std::vector<Point> window, std::string window_id,
              std::optional<WindowBall> ball = std::nullopt);

  static MetricSpace integer_line(std::int64_t lo, std::int64_t hi);
  static MetricSpace integer_grid_ball(int dimension, Distance radius);
  static MetricSpace integer_grid_box(int dimension, std::int64_t lo, std::int64_t hi);
  /// Throws PreconditionError unless the matrix is a metric (square, zero
  /// diagonal, symmetric, nonnegative, triangle inequality on every triple).
  static MetricSpace table(std::vector<std::vector<Distance>> matrix);

  [[nodiscard]] SpaceKind kind() const;
  [[nodiscard]] const std::string& universe_id() const;
  [[nodiscard]] const std::string& window_id() const;
  [[nodiscard]] int dimension() const;
  [[nodiscard]] bool finite_universe() const;
  [[nodiscard]] const std::shared_ptr<const GroupModel>& group() const;
  [[nodiscard]] const std::vector<std::vector<Distance>>& table_matrix() const;

  [[nodiscard]] Distance distance(const Point& a, const Point& b) const;
  [[nodiscard]] bool in_universe(const Point& p) const;

  [[nodiscard]] std::span<const Point> window() const;
  [[nodiscard]] bool in_window(const Point& p) const;
  [[nodiscard]] std::optional<std::size_t> window_index(const Point& p) const;
  [[nodiscard]] const std::optional<WindowBall>& window_ball() const;

  /// Same universe, different window. Points must belong to the universe.
  [[nodiscard]] MetricSpace with_window(std::vector<Point> window, std::string window_id,
                                        std::optional<WindowBall> ball = std::nullopt) const;

  /// Window points at distance <= radius - shrink from the window center.
  /// Requires a ball-shaped window.
  [[nodiscard]] std::vector<Point> core_window(Distance shrink) const;

  [[nodiscard]] bool same_universe(const MetricSpace& other) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Ordered list of distinct points.
class Subset {
 public:
  Subset() = default;
  /// Sorts the points; throws PreconditionError on duplicates.
  explicit Subset(std::vector<Point> points);

  [[nodiscard]] std::span<const Point> points() const { return points_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] bool empty() const { return points_.empty(); }
  [[nodiscard]] bool contains(const Point& p) const;
  [[nodiscard]] const Point& front() const { return points_.front(); }

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::vector<Point> points_;
};

/// A finite family of subsets with claimed (unverified) metadata.
/// A missing claimed_bound means "unbounded".
struct SubsetFamily {
  std::vector<Subset> members;
  Scale claimed_disjointness{0};
  std::optional<Scale> claimed_bound;
};

/// S[b] restricted to the window. Throws PreconditionError for empty S.
[[nodiscard]] Subset enlargement(const MetricSpace& space, const Subset& s, const Scale& b);

/// Pointwise membership in S[b]; does not depend on the window.
[[nodiscard]] bool in_enlargement(const MetricSpace& space, const Subset& s, const Scale& b,
                                  const Point& y);

/// Minimum pairwise distance. Throws PreconditionError for empty inputs.
[[nodiscard]] Distance set_distance(const MetricSpace& space, const Subset& s, const Subset& t);

/// First pair of members that are not R-separated, found via S_a[R] ∩ S_b.
struct SeparationWitness {
  std::size_t member_a = 0;
  std::size_t member_b = 0;
  Point point_a;
  Point point_b;
  Distance distance = 0;
};

[[nodiscard]] std::optional<SeparationWitness> find_separation_violation(
    const MetricSpace& space, std::span<const Subset> members, const Scale& r);

/// R-disjointness: every S[R] misses all other members (pairwise distance > R).
[[nodiscard]] bool is_r_disjoint(const MetricSpace& space, const SubsetFamily& family,
                                 const Scale& r);
/// The same property through strict set_distance comparisons.
[[nodiscard]] bool is_r_disjoint_by_distance(const MetricSpace& space,
                                             const SubsetFamily& family, const Scale& r);

struct FamilyDiameter {
  Distance value = 0;
  /// True when the universe is infinite, so the value only describes the
  /// windowed members.
  bool window_relative = false;
};

[[nodiscard]] Distance subset_diameter(const MetricSpace& space, const Subset& s);
/// Max member diameter; 0 for an empty family. Throws for an empty member.
[[nodiscard]] FamilyDiameter family_diameter(const MetricSpace& space, const SubsetFamily& family);

struct CoverCheck {
  bool covered = true;
  std::vector<Point> uncovered;
};

[[nodiscard]] CoverCheck is_cover(std::span<const SubsetFamily> families,
                                  std::span<const Point> window);

}  // namespace coarsekit
