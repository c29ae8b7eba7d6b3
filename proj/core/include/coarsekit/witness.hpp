#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coarsekit/metric.hpp"

namespace coarsekit {

enum class WitnessProperty { Fad, Apc, Decomposition };

enum class ViolationKind { NotDisjoint, ExceedsBound, Uncovered, NotContained, OutsideUniverse };

[[nodiscard]] std::string to_string(WitnessProperty property);
[[nodiscard]] std::string to_string(ViolationKind kind);

/// One referee finding. `family` is the family index for cover witnesses and
/// the parent member index for decompositions.
struct Violation {
  ViolationKind kind = ViolationKind::NotDisjoint;
  std::size_t family = 0;
  std::optional<std::size_t> collection;
  std::optional<std::size_t> member_a;
  std::optional<std::size_t> member_b;
  std::vector<Point> points;
  std::optional<Distance> measured;
  std::string detail;
};

struct WitnessReport {
  WitnessProperty property = WitnessProperty::Fad;
  std::vector<Scale> scales;
  std::string window_id;
  std::size_t family_count = 0;
  /// count - 1 for FAD witnesses.
  std::optional<std::size_t> dimension_bound;
  Distance measured_bound = 0;
  bool window_relative = false;
  std::vector<Violation> violations;

  [[nodiscard]] bool pass() const { return violations.empty(); }
};

/// Uncovered points listed per violation before truncation.
inline constexpr std::size_t kMaxListedPoints = 64;

[[nodiscard]] WitnessReport verify_fad_witness(const MetricSpace& space,
                                               std::span<const SubsetFamily> families,
                                               const Scale& r);
[[nodiscard]] WitnessReport verify_fad_witness(const MetricSpace& space,
                                               std::span<const SubsetFamily> families,
                                               const Scale& r, std::span<const Point> window,
                                               std::string window_id);

/// Throws PreconditionError when r_seq is not nondecreasing and positive, or
/// shorter than the family count.
[[nodiscard]] WitnessReport verify_apc_witness(const MetricSpace& space,
                                               std::span<const SubsetFamily> families,
                                               std::span<const Scale> r_seq);
[[nodiscard]] WitnessReport verify_apc_witness(const MetricSpace& space,
                                               std::span<const SubsetFamily> families,
                                               std::span<const Scale> r_seq,
                                               std::span<const Point> window,
                                               std::string window_id);

/// For each parent member, two collections of child member indices.
using CollectionPair = std::array<std::vector<std::size_t>, 2>;
using DecompositionAssignment = std::vector<CollectionPair>;

/// Passes iff every parent member is exactly the union of its assigned child
/// members and each of its two collections is R-disjoint. Throws
/// PreconditionError on a dangling child index or a size mismatch.
[[nodiscard]] WitnessReport verify_decomposition(const MetricSpace& space,
                                                 const SubsetFamily& parent,
                                                 const SubsetFamily& child, const Scale& r,
                                                 const DecompositionAssignment& assignment);

/// The decomposition in which every parent member is its own single child.
[[nodiscard]] DecompositionAssignment trivial_assignment(std::size_t member_count);

}  // namespace coarsekit
