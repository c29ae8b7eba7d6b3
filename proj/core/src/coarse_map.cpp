#include "coarsekit/coarse_map.hpp"

#include <algorithm>

namespace coarsekit {

CoarseMap::CoarseMap(MetricSpace source, MetricSpace target, Rule rule,
                     std::optional<ControlFunction> claimed, std::string name)
    : source_(std::move(source)),
      target_(std::move(target)),
      rule_(std::move(rule)),
      claimed_(std::move(claimed)),
      name_(std::move(name)) {
  if (!rule_) {
    throw PreconditionError("coarse map needs a rule");
  }
}

CoarseMap identity_map(const MetricSpace& space) {
  return CoarseMap(space, space, [](const Point& x) { return x; }, ControlFunction::identity(),
                   "id");
}

namespace {

std::vector<Point> images(const CoarseMap& f, std::span<const Point> window) {
  std::vector<Point> out;
  out.reserve(window.size());
  for (const auto& x : window) {
    out.push_back(f(x));
  }
  return out;
}

}  // namespace

BornologousReport check_bornologous(const CoarseMap& f, const ControlFunction& ell,
                                    std::span<const Point> window, std::span<const Scale> radii) {
  if (radii.empty()) {
    throw PreconditionError("bornologous check needs at least one radius");
  }
  std::vector<Scale> sorted(radii.begin(), radii.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Scale> bounds;
  bounds.reserve(sorted.size());
  for (const auto& r : sorted) {
    bounds.push_back(ell(r));
  }
  auto fx = images(f, window);
  BornologousReport report;
  Scale worst_excess;
  for (std::size_t i = 0; i < window.size(); ++i) {
    for (std::size_t j = i + 1; j < window.size(); ++j) {
      Distance d = f.source().distance(window[i], window[j]);
      auto it = std::lower_bound(sorted.begin(), sorted.end(), Scale(d));
      if (it == sorted.end()) {
        continue;
      }
      ++report.pairs_checked;
      const Scale& bound = bounds[static_cast<std::size_t>(it - sorted.begin())];
      Distance image = f.target().distance(fx[i], fx[j]);
      if (within(image, bound)) {
        continue;
      }
      Scale excess = Scale(image) - bound;
      if (report.pass || excess > worst_excess) {
        worst_excess = excess;
        report.worst = BornologousViolation{window[i], window[j], d, *it, image, bound};
      }
      report.pass = false;
    }
  }
  return report;
}

std::vector<Scale> all_pair_radii(const MetricSpace& space, std::span<const Point> window) {
  Distance top = 0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    for (std::size_t j = i + 1; j < window.size(); ++j) {
      top = std::max(top, space.distance(window[i], window[j]));
    }
  }
  std::vector<Scale> out;
  for (Distance r = 0; r <= top; ++r) {
    out.emplace_back(r);
  }
  return out;
}

CoarseMap stamp_bornologous(const CoarseMap& f, std::span<const Point> window,
                            std::span<const Scale> radii) {
  if (!f.claimed_control()) {
    throw PreconditionError("map " + f.name() + " has no claimed control to stamp");
  }
  auto report = check_bornologous(f, *f.claimed_control(), window, radii);
  if (!report.pass) {
    const auto& w = *report.worst;
    throw PreconditionError("map " + f.name() + " breaks its claimed control: d(" +
                            debug_string(w.x) + "," + debug_string(w.y) + ") = " +
                            std::to_string(w.pair_distance) + " but image distance " +
                            std::to_string(w.image_distance) + " > " + to_string(w.bound));
  }
  CoarseMap out = f;
  out.stamped_ = true;
  return out;
}

CoarseMap stamp_lipschitz_on_edges(
    const CoarseMap& f, std::span<const Point> window,
    const std::function<std::vector<Point>(const Point&)>& neighbours) {
  const auto& claim = f.claimed_control();
  if (!claim || !claim->is_affine() || claim->offset() != Scale(0)) {
    throw PreconditionError("map " + f.name() + " needs a claimed linear control");
  }
  for (const auto& x : window) {
    Point fx = f(x);
    for (const auto& y : neighbours(x)) {
      Distance d = f.source().distance(x, y);
      Distance image = f.target().distance(fx, f(y));
      if (!within(image, claim->slope() * d)) {
        throw PreconditionError("map " + f.name() + " stretches the edge " + debug_string(x) +
                                " -- " + debug_string(y) + " to length " +
                                std::to_string(image));
      }
    }
  }
  CoarseMap out = f;
  out.stamped_ = true;
  return out;
}

ProperReport check_proper(const CoarseMap& f, Distance bound,
                          std::span<const Point> source_window) {
  ProperReport report;
  report.bound = bound;
  auto fx = images(f, source_window);
  std::vector<Point> centers(f.target().window().begin(), f.target().window().end());
  centers.insert(centers.end(), fx.begin(), fx.end());
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());

  const auto& src = f.source();
  for (std::size_t i = 0; i < source_window.size(); ++i) {
    for (std::size_t j = i + 1; j < source_window.size(); ++j) {
      report.window_diameter =
          std::max(report.window_diameter, src.distance(source_window[i], source_window[j]));
    }
  }
  std::vector<std::size_t> pre;
  for (const auto& c : centers) {
    pre.clear();
    for (std::size_t i = 0; i < fx.size(); ++i) {
      if (f.target().distance(fx[i], c) <= bound) {
        pre.push_back(i);
      }
    }
    ++report.balls_checked;
    for (std::size_t a = 0; a < pre.size(); ++a) {
      for (std::size_t b = a + 1; b < pre.size(); ++b) {
        report.max_preimage_diameter =
            std::max(report.max_preimage_diameter,
                     src.distance(source_window[pre[a]], source_window[pre[b]]));
      }
    }
  }
  report.window_limited =
      report.window_diameter > 0 && report.max_preimage_diameter >= report.window_diameter;
  return report;
}

Distance sup_distance(const CoarseMap& f, const CoarseMap& g, std::span<const Point> window) {
  if (!f.source().same_universe(g.source()) || !f.target().same_universe(g.target())) {
    throw ModelMismatch("sup distance between maps on different spaces");
  }
  Distance best = 0;
  for (const auto& x : window) {
    best = std::max(best, f.target().distance(f(x), g(x)));
  }
  return best;
}

CoarseMap compose(const CoarseMap& f, const CoarseMap& g) {
  if (!g.target().same_universe(f.source())) {
    throw ModelMismatch("cannot compose: " + g.target().universe_id() + " is not " +
                        f.source().universe_id());
  }
  std::optional<ControlFunction> claimed;
  if (f.claimed_control() && g.claimed_control()) {
    claimed = ControlFunction::compose(*f.claimed_control(), *g.claimed_control());
  }
  return CoarseMap(
      g.source(), f.target(), [f, g](const Point& x) { return f(g(x)); }, claimed,
      f.name() + "o" + g.name());
}

ControlFunction empirical_control(const CoarseMap& f, std::span<const Point> window,
                                  std::span<const Scale> radii) {
  if (radii.empty()) {
    throw PreconditionError("empirical control needs at least one radius");
  }
  std::vector<Scale> sorted(radii.begin(), radii.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Distance> best(sorted.size(), 0);
  auto fx = images(f, window);
  for (std::size_t i = 0; i < window.size(); ++i) {
    for (std::size_t j = i + 1; j < window.size(); ++j) {
      Distance d = f.source().distance(window[i], window[j]);
      auto it = std::lower_bound(sorted.begin(), sorted.end(), Scale(d));
      if (it == sorted.end()) {
        continue;
      }
      auto k = static_cast<std::size_t>(it - sorted.begin());
      best[k] = std::max(best[k], f.target().distance(fx[i], fx[j]));
    }
  }
  std::vector<ControlFunction::Breakpoint> table;
  Distance running = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    running = std::max(running, best[k]);
    table.push_back({std::max(sorted[k], Scale(0)), Scale(running)});
  }
  return ControlFunction::table(std::move(table));
}

Distance minimal_affine_offset(const CoarseMap& f, std::span<const Point> window) {
  auto fx = images(f, window);
  Distance offset = 0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    for (std::size_t j = i + 1; j < window.size(); ++j) {
      offset = std::max(offset, f.target().distance(fx[i], fx[j]) -
                                    f.source().distance(window[i], window[j]));
    }
  }
  return offset;
}

Distance coarse_equivalence_constant(const CoarseMap& f, const CoarseMap& g,
                                     std::span<const Point> source_window,
                                     std::span<const Point> target_window) {
  Distance there = sup_distance(compose(g, f), identity_map(f.source()), source_window);
  Distance back = sup_distance(compose(f, g), identity_map(f.target()), target_window);
  return std::max(there, back);
}

}  // namespace coarsekit
