#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coarsekit/coarse_map.hpp"
#include "coarsekit/group.hpp"

namespace coarsekit {

/// A coarse quasi-action g ↦ f_g of a group on a metric space.
///
/// Uniform actions carry one control ℓ and one composition constant B.
/// Nonuniform actions have no ℓ and bound f_g∘f_h against f_gh per pair.
class CoarseQuasiAction {
 public:
  using Rule = std::function<Point(const GroupElement&, const Point&)>;
  using PairBound = std::function<Scale(const GroupElement&, const GroupElement&)>;

  struct Constants {
    std::optional<ControlFunction> control;  // nullopt means nonuniform
    Scale A{0};
    Scale B{0};
    PairBound pair_bound;  // used instead of B when set
    std::string pair_bound_rule;
  };

  CoarseQuasiAction(std::string name, GroupPtr group, MetricSpace space, Rule rule,
                    Point base_point, Constants constants);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const GroupPtr& group() const { return group_; }
  [[nodiscard]] const MetricSpace& space() const { return space_; }
  [[nodiscard]] const Point& base_point() const { return base_; }
  [[nodiscard]] const Constants& constants() const { return constants_; }
  [[nodiscard]] bool uniform() const { return constants_.control.has_value(); }
  [[nodiscard]] const ControlFunction& control() const;

  [[nodiscard]] Point apply(const GroupElement& g, const Point& x) const { return rule_(g, x); }
  [[nodiscard]] CoarseMap act(const GroupElement& g) const;
  /// The composition bound for the pair (g, h).
  [[nodiscard]] Scale bound_for(const GroupElement& g, const GroupElement& h) const;

  /// Same action with different claimed constants; notes are kept.
  [[nodiscard]] CoarseQuasiAction with_constants(Constants constants) const;

  /// Free-text notes recorded in reports (conventions and choices).
  std::vector<std::string> notes;

 private:
  std::string name_;
  GroupPtr group_;
  MetricSpace space_;
  Rule rule_;
  Point base_;
  Constants constants_;
};

struct PairDeviation {
  GroupElement g;
  GroupElement h;
  Point x;
  Distance deviation = 0;
  Scale bound;
};

struct ControlBreak {
  GroupElement g;
  BornologousViolation violation;
};

struct ActionVerificationReport {
  std::string action;
  Distance g_radius = 0;
  std::string x_window_id;
  std::size_t group_elements = 0;
  std::size_t window_points = 0;
  bool uniform = true;

  Scale claimed_A;
  Distance measured_A = 0;
  bool identity_ok = true;

  std::optional<Scale> claimed_B;  // nullopt for per-pair rules
  std::string pair_bound_rule;
  Distance measured_B = 0;
  std::optional<PairDeviation> largest_deviation;
  std::size_t composition_violations = 0;
  /// The violating pair with the largest excess over its bound.
  std::optional<PairDeviation> worst_violation;
  bool composition_ok = true;

  /// max d(f_g f_{g^-1} x, x), compared with A + B (uniform) or
  /// A + B_{g,g^-1} (nonuniform).
  Distance inverse_closeness = 0;
  bool inverse_ok = true;

  bool control_ok = true;
  std::optional<ControlBreak> control_violation;

  /// Per-element minimal affine offsets (slope 1); the spread across elements
  /// shows how far the action is from uniform.
  Distance max_affine_offset = 0;
  std::optional<GroupElement> least_uniform_element;

  [[nodiscard]] bool pass() const {
    return identity_ok && composition_ok && inverse_ok && control_ok;
  }
};

/// Exhaustive check of the quasi-action axioms over ball(g_radius) and the
/// window.
[[nodiscard]] ActionVerificationReport verify_action(const CoarseQuasiAction& action,
                                                     Distance g_radius,
                                                     std::span<const Point> x_window,
                                                     std::string x_window_id);

/// π(g) = g(x0), from the given Cayley space. Uniform actions claim the
/// control affine(ℓ(λ), 0); nonuniform actions claim nothing.
[[nodiscard]] CoarseMap orbit_map(const CoarseQuasiAction& action, const MetricSpace& cayley);

/// λ = max over generators s of d(s(x0), x0).
[[nodiscard]] Distance lambda(const CoarseQuasiAction& action);

/// ℓ(λ) for uniform actions.
[[nodiscard]] Scale orbit_lipschitz(const CoarseQuasiAction& action);

struct StabilizerSet {
  Point center;
  Scale R;
  Distance search_radius = 0;
  /// Canonically ordered.
  std::vector<GroupElement> elements;
  bool window_relative = true;
};

[[nodiscard]] StabilizerSet quasi_stabilizer(const CoarseQuasiAction& action, const Scale& R,
                                             Distance search_radius);
[[nodiscard]] StabilizerSet fibred_quasi_stabilizer(const CoarseQuasiAction& action,
                                                    const Point& x, const Scale& R,
                                                    Distance search_radius);

// Shipped actions.

/// Z^d acting on Z through its first coordinate: (a, ...)·x = x + a.
[[nodiscard]] CoarseQuasiAction lattice_projection_action(int dimension, Distance cap,
                                                          std::int64_t window_radius = 50);

/// Z wr Z on Z: g·t = t + k + sign(n_i)·Σ_{x outside [-|t|,|t|]} |n_x|, with i
/// the smallest lit position. Nonuniform with B_{g,h} = ‖g‖ + ‖h‖.
[[nodiscard]] CoarseQuasiAction lamplighter_action(Distance cap = kLamplighterCap,
                                                   std::int64_t window_radius = 50);

/// A*B on the Cayley space of B: A-syllables act trivially, B-syllables by
/// left multiplication.
[[nodiscard]] CoarseQuasiAction free_product_action(const GroupPtr& product,
                                                    Distance space_radius);
/// The product of the B-syllables of g, in order.
[[nodiscard]] GroupElement right_factor_image(const GroupModel& product, const GroupElement& g);

/// f_g = inner(g) ∘ φ for an action on C ⊆ X and a retraction φ: X -> C that
/// moves points at most phi_bound. Claims ℓ(r) = r + 2B, A = B and keeps the
/// inner composition constant. Throws PreconditionError if φ leaves C on the
/// window or moves a point further than phi_bound.
[[nodiscard]] CoarseQuasiAction commensurable_extension(
    const CoarseQuasiAction& inner, std::function<bool(const Point&)> in_subset,
    std::function<Point(const Point&)> phi, Distance phi_bound, MetricSpace ambient);

/// Z acting on 2Z by +2, extended to Z through φ(x) = 2·floor(x/2).
[[nodiscard]] CoarseQuasiAction even_extension_action(std::int64_t window_radius = 50);

/// Every element acts as the identity.
[[nodiscard]] CoarseQuasiAction trivial_action(const GroupPtr& group, MetricSpace space,
                                               Point base_point);

}  // namespace coarsekit
