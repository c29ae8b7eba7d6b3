#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coarsekit/quasi_action.hpp"
#include "coarsekit/witness.hpp"

namespace coarsekit {

/// Raised when a construction input fails its referee check. `axiom` names the
/// failed requirement; `witness` carries the referee finding when there is one.
class ConstructionError : public Error {
 public:
  ConstructionError(std::string axiom, const std::string& detail,
                    std::optional<Violation> witness = std::nullopt);
  [[nodiscard]] const std::string& axiom() const { return axiom_; }
  [[nodiscard]] const std::optional<Violation>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::optional<Violation> witness_;
};

struct ExtensionInput {
  CoarseQuasiAction action;
  /// Cayley space of the acting group; its window is the G-window.
  MetricSpace group_space;
  /// Covers of the action space, one family per index i.
  std::vector<SubsetFamily> x_covers;
  /// Covers of the quasi-stabilizer, members given as group elements.
  std::vector<SubsetFamily> w_covers;
  Scale T;
  Scale K;
};

struct Section {
  std::size_t family = 0;
  std::size_t member = 0;
  GroupElement element;
};

struct CoverIndex {
  std::size_t i = 0;  // X family
  std::size_t j = 0;  // W family
  std::size_t k = 0;  // output family
};

struct ConstructedCover {
  std::string mode;  // "fad" or "apc"
  std::vector<SubsetFamily> families;
  std::vector<CoverIndex> index;
  std::vector<Section> sections;
  std::size_t claimed_dimension_bound = 0;
  Scale stabilizer_radius;
  Scale lipschitz;
  /// Coverage is asserted on the full G-window.
  Distance core_shrink = 0;
  std::vector<std::string> notices;
  WitnessReport report;
};

/// Member-wise preimages under π inside the window; empty preimages are
/// dropped. Throws PreconditionError unless π is stamped.
[[nodiscard]] SubsetFamily pullback_family(const CoarseMap& pi, const SubsetFamily& family,
                                           std::span<const Point> g_window);

/// Canonical minimum of π^-1(F) in the window. Throws PreconditionError("F not
/// hit in window") when the preimage is empty.
[[nodiscard]] GroupElement choose_section(const CoarseMap& pi, const Subset& F,
                                          std::span<const Point> g_window);

/// A + 2B + ℓ(T); throws PreconditionError for nonuniform actions.
[[nodiscard]] Scale stabilizer_radius(const CoarseQuasiAction& action, const Scale& T);

/// Orbit map stamped ℓ(λ)-Lipschitz on the edges of the Cayley window.
[[nodiscard]] CoarseMap stamped_orbit_map(const CoarseQuasiAction& action,
                                          const MetricSpace& cayley);

[[nodiscard]] ConstructedCover build_fad_cover(const ExtensionInput& input, const Scale& r);

/// Family i(n+1)+j comes from X family i and W family j, where n+1 is the
/// number of W families. Needs r_seq[(m+1)(n+1)] to exist.
[[nodiscard]] ConstructedCover build_apc_cover(const ExtensionInput& input,
                                               std::span<const Scale> r_seq);

// Cover generators.

/// Blocks [2jL+phase, 2jL+L-1+phase] and [(2j+1)L+phase, (2j+2)L-1+phase]
/// along `axis`, grouping the given points. Same-family blocks are L+1 apart
/// along the axis, so the claimed disjointness is L.
[[nodiscard]] std::array<SubsetFamily, 2> interval_cover(std::span<const Point> points,
                                                         std::int64_t L, std::int64_t phase = 0,
                                                         std::size_t axis = 0);
[[nodiscard]] std::array<SubsetFamily, 2> interval_cover_generator(const MetricSpace& space,
                                                                   std::int64_t L,
                                                                   std::int64_t phase = 0,
                                                                   std::size_t axis = 0);

/// Alternating blocks of lengths L0 (family 0) and L1 (family 1): family 0 is
/// L1-disjoint and family 1 is L0-disjoint.
[[nodiscard]] std::array<SubsetFamily, 2> two_scale_interval_cover(std::span<const Point> points,
                                                                   std::int64_t L0,
                                                                   std::int64_t L1,
                                                                   std::int64_t phase = 0,
                                                                   std::size_t axis = 0);

}  // namespace coarsekit
