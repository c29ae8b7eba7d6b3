#include <map>

#include "coarsekit/game.hpp"

namespace coarsekit {

std::int64_t block_length(const Scale& R) {
  return std::max<std::int64_t>(1, floor_of(R * 10));
}

namespace {

// Splits every member along `axis` into blocks of length L; even blocks go to
// collection 0, odd blocks to collection 1.
StrategyResponse split_blocks(const std::vector<Subset>& family, std::size_t axis,
                              std::int64_t L) {
  StrategyResponse out;
  out.assignment.resize(family.size());
  for (std::size_t p = 0; p < family.size(); ++p) {
    std::map<std::int64_t, std::vector<Point>> blocks;
    for (const auto& x : family[p].points()) {
      blocks[floor_div(x[axis], L)].push_back(x);
    }
    for (auto& [b, pts] : blocks) {
      out.assignment[p][static_cast<std::size_t>(((b % 2) + 2) % 2)].push_back(out.family.size());
      out.family.emplace_back(std::move(pts));
    }
  }
  return out;
}

class IntervalStrategy final : public Strategy {
 public:
  IntervalStrategy(std::size_t axis, Distance transverse)
      : axis_(axis), transverse_(transverse) {}
  std::string name() const override {
    return "interval(axis=" + std::to_string(axis_) +
           (transverse_ ? ",transverse=" + std::to_string(transverse_) : "") + ")";
  }
  StrategyResponse respond(const GameState& state, const Scale& R) override {
    std::int64_t L = block_length(R);
    auto out = split_blocks(state.family, axis_, L);
    out.declared_bound = Scale(L - 1 + transverse_);
    out.phase = "interval";
    return out;
  }

 private:
  std::size_t axis_;
  Distance transverse_;
};

class SlabStrategy final : public Strategy {
 public:
  explicit SlabStrategy(int dimension) : dim_(dimension) {}
  std::string name() const override { return "slab(d=" + std::to_string(dim_) + ")"; }
  StrategyResponse respond(const GameState& state, const Scale& R) override {
    if (split_ >= dim_) {
      throw PreconditionError("slab strategy has no coordinate left to split");
    }
    std::int64_t L = block_length(R);
    ++split_;
    total_ += L - 1;
    auto out = split_blocks(state.family, static_cast<std::size_t>(dim_ - split_), L);
    if (split_ == dim_) {
      out.declared_bound = Scale(total_);
    }
    out.phase = "slab";
    return out;
  }

 private:
  int dim_;
  int split_ = 0;
  Distance total_ = 0;
};

class BoundedStrategy final : public Strategy {
 public:
  explicit BoundedStrategy(MetricSpace ambient) : ambient_(std::move(ambient)) {}
  std::string name() const override { return "bounded"; }
  StrategyResponse respond(const GameState& state, const Scale&) override {
    StrategyResponse out;
    out.family = state.family;
    out.assignment = trivial_assignment(state.family.size());
    SubsetFamily f;
    f.members = state.family;
    out.declared_bound = Scale(family_diameter(ambient_, f).value);
    out.phase = "bounded";
    return out;
  }

 private:
  MetricSpace ambient_;
};

}  // namespace

StrategyPtr interval_strategy(std::size_t axis, Distance transverse) {
  return std::make_unique<IntervalStrategy>(axis, transverse);
}

StrategyPtr slab_strategy(int dimension) {
  if (dimension < 1) {
    throw PreconditionError("slab strategy needs a positive dimension");
  }
  return std::make_unique<SlabStrategy>(dimension);
}

StrategyPtr bounded_strategy(MetricSpace ambient) {
  return std::make_unique<BoundedStrategy>(std::move(ambient));
}

StrategyPtr builtin_strategy(const std::string& kind, const MetricSpace& ambient) {
  if (kind == "interval") {
    return interval_strategy();
  }
  if (kind == "slab") {
    return slab_strategy(ambient.dimension());
  }
  if (kind == "bounded") {
    return bounded_strategy(ambient);
  }
  throw PreconditionError("unsupported strategy kind '" + kind + "'");
}

}  // namespace coarsekit
