#include <algorithm>

#include "coarsekit/quasi_action.hpp"

namespace coarsekit {

CoarseQuasiAction::CoarseQuasiAction(std::string name, GroupPtr group, MetricSpace space,
                                     Rule rule, Point base_point, Constants constants)
    : name_(std::move(name)),
      group_(std::move(group)),
      space_(std::move(space)),
      rule_(std::move(rule)),
      base_(std::move(base_point)),
      constants_(std::move(constants)) {
  if (!group_ || !rule_) {
    throw PreconditionError("quasi-action needs a group and a rule");
  }
  if (!space_.in_universe(base_)) {
    throw PreconditionError("base point " + debug_string(base_) + " is not in " +
                            space_.universe_id());
  }
}

const ControlFunction& CoarseQuasiAction::control() const {
  if (!constants_.control) {
    throw PreconditionError("action " + name_ + " is nonuniform and has no control function");
  }
  return *constants_.control;
}

CoarseMap CoarseQuasiAction::act(const GroupElement& g) const {
  auto rule = rule_;
  return CoarseMap(
      space_, space_, [rule, g](const Point& x) { return rule(g, x); }, constants_.control,
      "f[" + group_->word(g) + "]");
}

Scale CoarseQuasiAction::bound_for(const GroupElement& g, const GroupElement& h) const {
  return constants_.pair_bound ? constants_.pair_bound(g, h) : constants_.B;
}

CoarseQuasiAction CoarseQuasiAction::with_constants(Constants constants) const {
  CoarseQuasiAction out = *this;
  out.constants_ = std::move(constants);
  return out;
}

ActionVerificationReport verify_action(const CoarseQuasiAction& action, Distance g_radius,
                                       std::span<const Point> x_window,
                                       std::string x_window_id) {
  const auto& G = *action.group();
  const auto& X = action.space();
  const auto& c = action.constants();

  ActionVerificationReport report;
  report.action = action.name();
  report.g_radius = g_radius;
  report.x_window_id = std::move(x_window_id);
  report.uniform = action.uniform();
  report.claimed_A = c.A;
  if (!c.pair_bound) {
    report.claimed_B = c.B;
  }
  report.pair_bound_rule = c.pair_bound_rule;

  std::vector<GroupElement> elements;
  for (auto& e : ball(G, g_radius)) {
    elements.push_back(std::move(e.element));
  }
  report.group_elements = elements.size();
  report.window_points = x_window.size();

  std::vector<std::vector<Point>> image(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    image[i].reserve(x_window.size());
    for (const auto& x : x_window) {
      image[i].push_back(action.apply(elements[i], x));
    }
  }

  // f_id within A of the identity.
  const GroupElement e = G.identity();
  for (const auto& x : x_window) {
    report.measured_A = std::max(report.measured_A, X.distance(action.apply(e, x), x));
  }
  report.identity_ok = within(report.measured_A, c.A);

  // f_g ∘ f_h against f_gh.
  Scale worst_excess;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const auto& g = elements[i];
      const auto& h = elements[j];
      GroupElement gh = G.multiply(g, h);
      Distance dev = 0;
      std::size_t at = 0;
      for (std::size_t k = 0; k < x_window.size(); ++k) {
        Distance d = X.distance(action.apply(g, image[j][k]), action.apply(gh, x_window[k]));
        if (d > dev) {
          dev = d;
          at = k;
        }
      }
      Scale bound = action.bound_for(g, h);
      PairDeviation pd{g, h, x_window.empty() ? Point{} : x_window[at], dev, bound};
      if (!report.largest_deviation || dev > report.largest_deviation->deviation) {
        report.largest_deviation = pd;
      }
      report.measured_B = std::max(report.measured_B, dev);
      if (!within(dev, bound)) {
        ++report.composition_violations;
        Scale excess = Scale(dev) - bound;
        if (!report.worst_violation || excess > worst_excess) {
          worst_excess = excess;
          report.worst_violation = pd;
        }
      }
    }
  }
  report.composition_ok = report.composition_violations == 0;

  // f_g ∘ f_{g^-1} close to the identity.
  for (const auto& g : elements) {
    GroupElement gi = G.inverse(g);
    Distance worst = 0;
    for (const auto& x : x_window) {
      worst = std::max(worst, X.distance(action.apply(g, action.apply(gi, x)), x));
    }
    report.inverse_closeness = std::max(report.inverse_closeness, worst);
    if (!within(worst, c.A + action.bound_for(g, gi))) {
      report.inverse_ok = false;
    }
  }

  if (action.uniform()) {
    auto radii = all_pair_radii(X, x_window);
    for (const auto& g : elements) {
      auto r = check_bornologous(action.act(g), action.control(), x_window, radii);
      if (!r.pass) {
        report.control_ok = false;
        report.control_violation = ControlBreak{g, *r.worst};
        break;
      }
    }
  }

  for (const auto& g : elements) {
    Distance off = minimal_affine_offset(action.act(g), x_window);
    if (!report.least_uniform_element || off > report.max_affine_offset) {
      report.max_affine_offset = off;
      report.least_uniform_element = g;
    }
  }
  return report;
}

CoarseMap orbit_map(const CoarseQuasiAction& action, const MetricSpace& cayley) {
  std::optional<ControlFunction> claimed;
  if (action.uniform()) {
    claimed = ControlFunction::affine(orbit_lipschitz(action), 0);
  }
  auto copy = std::make_shared<const CoarseQuasiAction>(action);
  return CoarseMap(
      cayley, action.space(),
      [copy](const Point& g) { return copy->apply(g, copy->base_point()); }, claimed, "pi");
}

Distance lambda(const CoarseQuasiAction& action) {
  Distance best = 0;
  const auto& x0 = action.base_point();
  for (const auto& s : action.group()->generators()) {
    best = std::max(best, action.space().distance(action.apply(s.element, x0), x0));
  }
  return best;
}

Scale orbit_lipschitz(const CoarseQuasiAction& action) {
  return action.control()(Scale(lambda(action)));
}

StabilizerSet fibred_quasi_stabilizer(const CoarseQuasiAction& action, const Point& x,
                                      const Scale& R, Distance search_radius) {
  if (!action.space().in_universe(x)) {
    throw PreconditionError("point " + debug_string(x) + " is not in " +
                            action.space().universe_id());
  }
  StabilizerSet out;
  out.center = x;
  out.R = R;
  out.search_radius = search_radius;
  for (auto& e : ball(*action.group(), search_radius)) {
    if (within(action.space().distance(x, action.apply(e.element, action.base_point())), R)) {
      out.elements.push_back(std::move(e.element));
    }
  }
  return out;
}

StabilizerSet quasi_stabilizer(const CoarseQuasiAction& action, const Scale& R,
                               Distance search_radius) {
  return fibred_quasi_stabilizer(action, action.base_point(), R, search_radius);
}

}  // namespace coarsekit
