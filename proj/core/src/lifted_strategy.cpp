#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "coarsekit/extension.hpp"
#include "coarsekit/game.hpp"

namespace coarsekit {
namespace {

class LiftedStrategy final : public Strategy {
 public:
  LiftedStrategy(const CoarseQuasiAction& action, const MetricSpace& group_space,
                 StrategyPtr x_strategy, WStrategyFactory w_factory)
      : action_(action),
        pi_(stamped_orbit_map(action, group_space)),
        x_strategy_(std::move(x_strategy)),
        w_factory_(std::move(w_factory)) {
    Scale lip = orbit_lipschitz(action_);
    factor_ = lip > 1 ? lip : Scale(1);
    auto window = group_space.window();
    std::vector<Point> image;
    for (const auto& g : window) {
      Point x = pi_(g);
      by_image_[x].push_back(g);
      image.push_back(std::move(x));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    x_family_ = {Subset(std::move(image))};
  }

  std::string name() const override {
    return "lifted(" + x_strategy_->name() + (w_strategy_ ? "," + w_strategy_->name() : "") + ")";
  }

  void announce(std::span<const Scale> radii) override {
    std::vector<Scale> scaled;
    for (const auto& r : radii) {
      scaled.push_back(r * factor_);
    }
    x_strategy_->announce(scaled);
  }

  StrategyResponse respond(const GameState& state, const Scale& R) override {
    return w_strategy_ ? descend(state, R) : lift(state, R);
  }

 private:
  // Phase 1: answer in X at the inflated radius and pull back along π.
  StrategyResponse lift(const GameState& state, const Scale& R) {
    GameState xs;
    xs.round = state.round;
    xs.family = x_family_;
    x_radii_.push_back(R * factor_);
    xs.radii = x_radii_;
    auto xr = x_strategy_->respond(xs, R * factor_);

    StrategyResponse out;
    out.phase = "phase-1";
    std::vector<std::optional<std::size_t>> lifted(xr.family.size());
    std::vector<Subset> next_x;
    for (std::size_t c = 0; c < xr.family.size(); ++c) {
      std::vector<Point> pre;
      for (const auto& x : xr.family[c].points()) {
        auto it = by_image_.find(x);
        if (it != by_image_.end()) {
          pre.insert(pre.end(), it->second.begin(), it->second.end());
        }
      }
      if (pre.empty()) {
        continue;
      }
      lifted[c] = out.family.size();
      out.family.emplace_back(std::move(pre));
      next_x.push_back(xr.family[c]);
    }
    out.assignment.resize(state.family.size());
    for (std::size_t p = 0; p < xr.assignment.size() && p < state.family.size(); ++p) {
      for (std::size_t side = 0; side < 2; ++side) {
        for (auto c : xr.assignment[p][side]) {
          if (c < lifted.size() && lifted[c]) {
            out.assignment[p][side].push_back(*lifted[c]);
          }
        }
      }
    }
    x_family_ = std::move(next_x);
    if (xr.declared_bound) {
      begin_descent(*xr.declared_bound, out.family);
    }
    return out;
  }

  // Sets up the game played in mind over the quasi-stabilizer.
  void begin_descent(const Scale& T, const std::vector<Subset>& family) {
    const auto& G = *action_.group();
    Scale rho = stabilizer_radius(action_, T);
    w_strategy_ = w_factory_(T, rho);
    std::unordered_set<Point, PointHash> union_set;
    for (const auto& member : family) {
      std::vector<GroupElement> sorted(member.points().begin(), member.points().end());
      canonical_sort(G, sorted);
      GroupElement gF = sorted.front();
      GroupElement inv = G.inverse(gF);
      std::vector<Point> translated;
      for (const auto& g : member.points()) {
        translated.push_back(G.multiply(inv, g));
      }
      union_set.insert(translated.begin(), translated.end());
      pieces_.push_back({gF, Subset(std::move(translated))});
    }
    w_family_ = {Subset(std::vector<Point>(union_set.begin(), union_set.end()))};
    for (std::size_t p = 0; p < family.size(); ++p) {
      g_members_.push_back({p, 0});
    }
  }

  // Phase 2: answer in W and push forward by the sections g_F.
  StrategyResponse descend(const GameState& state, const Scale& R) {
    const auto& G = *action_.group();
    GameState ws;
    ws.round = state.round;
    ws.family = w_family_;
    w_radii_.push_back(R);
    ws.radii = w_radii_;
    auto wr = w_strategy_->respond(ws, R);

    StrategyResponse out;
    out.phase = "phase-2";
    out.declared_bound = wr.declared_bound;
    out.assignment.resize(state.family.size());
    std::vector<std::pair<std::size_t, std::size_t>> next_members;
    for (std::size_t p = 0; p < g_members_.size() && p < state.family.size(); ++p) {
      auto [piece, parent] = g_members_[p];
      const auto& [gF, translated] = pieces_[piece];
      if (parent >= wr.assignment.size()) {
        continue;
      }
      for (std::size_t side = 0; side < 2; ++side) {
        for (auto c : wr.assignment[parent][side]) {
          std::vector<Point> pts;
          for (const auto& a : wr.family[c].points()) {
            if (translated.contains(a)) {
              pts.push_back(G.multiply(gF, a));
            }
          }
          if (pts.empty()) {
            continue;
          }
          out.assignment[p][side].push_back(out.family.size());
          out.family.emplace_back(std::move(pts));
          next_members.push_back({piece, c});
        }
      }
    }
    g_members_ = std::move(next_members);
    w_family_ = std::move(wr.family);
    return out;
  }

  CoarseQuasiAction action_;
  CoarseMap pi_;
  StrategyPtr x_strategy_;
  WStrategyFactory w_factory_;
  Scale factor_{1};
  std::unordered_map<Point, std::vector<GroupElement>, PointHash> by_image_;
  std::vector<Subset> x_family_;
  std::vector<Scale> x_radii_;

  StrategyPtr w_strategy_;
  std::vector<std::pair<GroupElement, Subset>> pieces_;
  std::vector<Subset> w_family_;
  std::vector<Scale> w_radii_;
  // For each current G member: its section piece and its W member.
  std::vector<std::pair<std::size_t, std::size_t>> g_members_;
};

}  // namespace

StrategyPtr lifted_strategy(const CoarseQuasiAction& action, const MetricSpace& group_space,
                            StrategyPtr x_strategy, WStrategyFactory w_factory) {
  if (!action.uniform()) {
    throw PreconditionError("lifted strategy needs a uniform quasi-action");
  }
  if (!x_strategy || !w_factory) {
    throw PreconditionError("lifted strategy needs an X strategy and a W factory");
  }
  return std::make_unique<LiftedStrategy>(action, group_space, std::move(x_strategy),
                                          std::move(w_factory));
}

WStrategyFactory strip_interval_factory(std::size_t axis) {
  return [axis](const Scale&, const Scale& rho) {
    return interval_strategy(axis, floor_of(rho * 2));
  };
}

}  // namespace coarsekit
