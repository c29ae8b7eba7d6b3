#include <cstdlib>

#include "coarsekit/quasi_action.hpp"

namespace coarsekit {

CoarseQuasiAction lattice_projection_action(int dimension, Distance cap,
                                            std::int64_t window_radius) {
  auto group = make_lattice(dimension, cap);
  CoarseQuasiAction::Constants c;
  c.control = ControlFunction::identity();
  return CoarseQuasiAction(
      "Z^" + std::to_string(dimension) + "-on-Z", group,
      MetricSpace::integer_line(-window_radius, window_radius),
      [](const GroupElement& g, const Point& x) { return Point{x[0] + g[0]}; }, Point{0}, c);
}

CoarseQuasiAction lamplighter_action(Distance cap, std::int64_t window_radius) {
  auto group = make_lamplighter(cap);
  const GroupModel* G = group.get();
  CoarseQuasiAction::Constants c;
  c.pair_bound = [G](const GroupElement& g, const GroupElement& h) {
    return Scale(G->norm(g) + G->norm(h));
  };
  c.pair_bound_rule = "|g|+|h| (lamp mass plus |shift|)";
  auto rule = [](const GroupElement& g, const Point& x) {
    std::int64_t t = x[0];
    std::int64_t moved = t + g[0];
    if (g.size() > 1) {
      std::int64_t reach = std::abs(t);
      std::int64_t outside = 0;
      for (std::size_t i = 1; i + 1 < g.size(); i += 2) {
        if (g[i] < -reach || g[i] > reach) {
          outside += std::abs(g[i + 1]);
        }
      }
      moved += g[2] > 0 ? outside : -outside;
    }
    return Point{moved};
  };
  CoarseQuasiAction action("lamplighter-on-Z", group,
                           MetricSpace::integer_line(-window_radius, window_radius), rule,
                           Point{0}, c);
  action.notes = {"generators a=(delta_0,0), t=(0,1)",
                  "interval [-t,t] read as [-|t|,|t|]",
                  "empty lamp support: correction term 0"};
  return action;
}

GroupElement right_factor_image(const GroupModel& product, const GroupElement& g) {
  auto factors = free_product_factors(product);
  const auto& B = *factors.second;
  GroupElement out = B.identity();
  for (const auto& s : syllables(g)) {
    if (s.factor == 1) {
      out = B.multiply(out, s.element);
    }
  }
  return out;
}

CoarseQuasiAction free_product_action(const GroupPtr& product, Distance space_radius) {
  auto factors = free_product_factors(*product);
  const auto& B = factors.second;
  CoarseQuasiAction::Constants c;
  c.control = ControlFunction::identity();
  const GroupModel* P = product.get();
  const GroupModel* Bp = B.get();
  return CoarseQuasiAction(
      product->name() + "-on-" + B->name(), product, cayley_space(B, space_radius),
      [P, Bp](const GroupElement& g, const Point& x) {
        return Bp->multiply(right_factor_image(*P, g), x);
      },
      B->identity(), c);
}

CoarseQuasiAction commensurable_extension(const CoarseQuasiAction& inner,
                                          std::function<bool(const Point&)> in_subset,
                                          std::function<Point(const Point&)> phi,
                                          Distance phi_bound, MetricSpace ambient) {
  for (const auto& x : ambient.window()) {
    Point y = phi(x);
    if (!in_subset(y)) {
      throw PreconditionError("retraction sends " + debug_string(x) + " to " + debug_string(y) +
                              ", outside the subset");
    }
    if (ambient.distance(x, y) > phi_bound) {
      throw PreconditionError("retraction moves " + debug_string(x) + " by " +
                              std::to_string(ambient.distance(x, y)) + " > " +
                              std::to_string(phi_bound));
    }
  }
  CoarseQuasiAction::Constants c;
  c.control = ControlFunction::affine(1, 2 * phi_bound);
  c.A = phi_bound;
  c.B = inner.constants().B;
  c.pair_bound = inner.constants().pair_bound;
  c.pair_bound_rule = inner.constants().pair_bound_rule;
  auto base = phi(inner.base_point());
  auto copy = std::make_shared<const CoarseQuasiAction>(inner);
  return CoarseQuasiAction(
      inner.name() + "-extended", inner.group(), std::move(ambient),
      [copy, phi](const GroupElement& g, const Point& x) { return copy->apply(g, phi(x)); }, base,
      c);
}

CoarseQuasiAction even_extension_action(std::int64_t window_radius) {
  auto group = make_lattice(1);
  CoarseQuasiAction::Constants c;
  c.control = ControlFunction::identity();
  CoarseQuasiAction inner(
      "Z-on-2Z", group, MetricSpace::integer_line(-window_radius, window_radius),
      [](const GroupElement& g, const Point& x) { return Point{x[0] + 2 * g[0]}; }, Point{0}, c);
  return commensurable_extension(
      inner, [](const Point& x) { return x[0] % 2 == 0; },
      [](const Point& x) { return Point{2 * floor_div(x[0], 2)}; }, 1,
      MetricSpace::integer_line(-window_radius, window_radius));
}

CoarseQuasiAction trivial_action(const GroupPtr& group, MetricSpace space, Point base_point) {
  CoarseQuasiAction::Constants c;
  c.control = ControlFunction::identity();
  return CoarseQuasiAction(
      "trivial", group, std::move(space), [](const GroupElement&, const Point& x) { return x; },
      std::move(base_point), c);
}

}  // namespace coarsekit
