#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coarsekit/control.hpp"
#include "coarsekit/metric.hpp"

namespace coarsekit {

/// A map between two universes with an optional claimed control. The claim is
/// trusted only once a bornologous check stamps it.
class CoarseMap {
 public:
  using Rule = std::function<Point(const Point&)>;

  CoarseMap(MetricSpace source, MetricSpace target, Rule rule,
            std::optional<ControlFunction> claimed = std::nullopt, std::string name = {});

  [[nodiscard]] const MetricSpace& source() const { return source_; }
  [[nodiscard]] const MetricSpace& target() const { return target_; }
  [[nodiscard]] const std::optional<ControlFunction>& claimed_control() const { return claimed_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] bool stamped() const { return stamped_; }

  [[nodiscard]] Point operator()(const Point& x) const { return rule_(x); }

 private:
  friend CoarseMap stamp_bornologous(const CoarseMap&, std::span<const Point>,
                                     std::span<const Scale>);
  friend CoarseMap stamp_lipschitz_on_edges(
      const CoarseMap&, std::span<const Point>,
      const std::function<std::vector<Point>(const Point&)>&);

  MetricSpace source_;
  MetricSpace target_;
  Rule rule_;
  std::optional<ControlFunction> claimed_;
  std::string name_;
  bool stamped_ = false;
};

[[nodiscard]] CoarseMap identity_map(const MetricSpace& space);

struct BornologousViolation {
  Point x;
  Point y;
  Distance pair_distance = 0;
  Scale radius;
  Distance image_distance = 0;
  Scale bound;
};

struct BornologousReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  /// Largest excess image_distance - ℓ(r) over all violating pairs.
  std::optional<BornologousViolation> worst;
};

/// Every window pair at distance d is checked against ℓ at the smallest listed
/// radius r >= d; pairs farther apart than every listed radius are skipped.
/// Throws PreconditionError for an empty radius list.
[[nodiscard]] BornologousReport check_bornologous(const CoarseMap& f, const ControlFunction& ell,
                                                  std::span<const Point> window,
                                                  std::span<const Scale> radii);

/// The radii 0..max pair distance of the window, which checks every pair at its
/// own distance.
[[nodiscard]] std::vector<Scale> all_pair_radii(const MetricSpace& space,
                                                std::span<const Point> window);

/// Stamps the claimed control after a passing check. Throws PreconditionError
/// naming the worst pair otherwise, or when there is no claim.
[[nodiscard]] CoarseMap stamp_bornologous(const CoarseMap& f, std::span<const Point> window,
                                          std::span<const Scale> radii);

/// For a claimed control affine(a, 0) on a graph metric: checks
/// d(f x, f y) <= a on every edge leaving the window, which bounds the image of
/// every window geodesic. Throws PreconditionError on the first broken edge.
[[nodiscard]] CoarseMap stamp_lipschitz_on_edges(
    const CoarseMap& f, std::span<const Point> window,
    const std::function<std::vector<Point>(const Point&)>& neighbours);

struct ProperReport {
  Distance bound = 0;
  std::size_t balls_checked = 0;
  Distance max_preimage_diameter = 0;
  Distance window_diameter = 0;
  /// The largest preimage fills the source window, so nothing bounds it but
  /// the window itself.
  bool window_limited = false;
  [[nodiscard]] bool pass() const { return !window_limited; }
};

/// Preimages (within the source window) of balls of radius `bound` centred at
/// the target window points and at the images of the source window.
[[nodiscard]] ProperReport check_proper(const CoarseMap& f, Distance bound,
                                        std::span<const Point> source_window);

/// Throws ModelMismatch when the maps do not share source and target.
[[nodiscard]] Distance sup_distance(const CoarseMap& f, const CoarseMap& g,
                                    std::span<const Point> window);

/// f ∘ g. Throws ModelMismatch unless g lands in the source of f.
[[nodiscard]] CoarseMap compose(const CoarseMap& f, const CoarseMap& g);

/// The tightest table control on the window: ℓ(r) = max image distance over
/// pairs at distance <= r, for r in `radii`.
[[nodiscard]] ControlFunction empirical_control(const CoarseMap& f, std::span<const Point> window,
                                                std::span<const Scale> radii);

/// Smallest c >= 0 with d(f x, f y) <= d(x, y) + c on the window.
[[nodiscard]] Distance minimal_affine_offset(const CoarseMap& f, std::span<const Point> window);

/// Both composites g∘f and f∘g measured against the identity; the larger sup
/// distance is the coarse-equivalence constant at this window.
[[nodiscard]] Distance coarse_equivalence_constant(const CoarseMap& f, const CoarseMap& g,
                                                   std::span<const Point> source_window,
                                                   std::span<const Point> target_window);

}  // namespace coarsekit
