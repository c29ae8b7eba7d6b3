#include <algorithm>
#include <gtest/gtest.h>

#include "coarsekit/game.hpp"

namespace ck = coarsekit;

namespace {

// Hands back a family that loses a point of the window.
class LeakyStrategy final : public ck::Strategy {
 public:
  std::string name() const override { return "leaky"; }
  ck::StrategyResponse respond(const ck::GameState& state, const ck::Scale&) override {
    ck::StrategyResponse out;
    auto pts = state.family.front().points();
    out.family.emplace_back(std::vector<ck::Point>(pts.begin() + 1, pts.end()));
    out.assignment = ck::trivial_assignment(1);
    out.declared_bound = ck::Scale(1000);
    return out;
  }
};

class ThrowingStrategy final : public ck::Strategy {
 public:
  std::string name() const override { return "throwing"; }
  ck::StrategyResponse respond(const ck::GameState&, const ck::Scale&) override {
    throw ck::PreconditionError("no answer");
  }
};

// Never declares a bound.
class StallingStrategy final : public ck::Strategy {
 public:
  std::string name() const override { return "stalling"; }
  ck::StrategyResponse respond(const ck::GameState& state, const ck::Scale&) override {
    ck::StrategyResponse out;
    out.family = state.family;
    out.assignment = ck::trivial_assignment(state.family.size());
    return out;
  }
};

ck::GameTranscript lifted_game(ck::Distance N, std::vector<ck::Scale> radii) {
  auto action = ck::lattice_projection_action(2, 2 * N, 4 * N);
  auto space = ck::cayley_space(action.group(), N);
  auto strategy = ck::lifted_strategy(action, space, ck::interval_strategy(),
                                      ck::strip_interval_factory(1));
  return ck::play_fdc(space, *strategy, ck::Adversary::sequence(std::move(radii)), 4);
}

}  // namespace

TEST(Game, BlockLength) {
  EXPECT_EQ(ck::block_length(ck::Scale(1, 20)), 1);
  EXPECT_EQ(ck::block_length(ck::Scale(7)), 70);
  EXPECT_EQ(ck::block_length(ck::Scale(3, 7)), 4);
}

TEST(Game, AdversaryRules) {
  auto d = ck::Adversary::doubling(3);
  EXPECT_EQ(*d.radius(1), ck::Scale(3));
  EXPECT_EQ(*d.radius(3), ck::Scale(12));
  auto f = ck::Adversary::fibonacci(1, 2);
  EXPECT_EQ(*f.radius(5), ck::Scale(8));
  auto s = ck::Adversary::sequence({3, 11});
  EXPECT_EQ(*s.radius(2), ck::Scale(11));
  EXPECT_FALSE(s.radius(3));
  EXPECT_EQ(*ck::Adversary::constant(5).radius(9), ck::Scale(5));
}

TEST(Game, IntervalOnTheLine) {
  auto line = ck::MetricSpace::integer_line(-200, 200);
  auto s = ck::interval_strategy();
  auto t = ck::play_fdc(line, *s, ck::Adversary::constant(7), 3);
  EXPECT_EQ(t.outcome, ck::GameOutcome::Won);
  EXPECT_EQ(t.won_round, 1u);
  EXPECT_EQ(t.final_bound, ck::Scale(69));
  ASSERT_EQ(t.rounds.size(), 1u);
  EXPECT_EQ(t.rounds[0].max_diameter, 69);
  EXPECT_TRUE(t.rounds[0].verdict.pass());
}

TEST(Game, SlabOnThePlane) {
  auto plane = ck::MetricSpace::integer_grid_box(2, -40, 40);
  auto s = ck::slab_strategy(2);
  auto t = ck::play_fdc(plane, *s, ck::Adversary::sequence({3, 11}), 4);
  EXPECT_EQ(t.outcome, ck::GameOutcome::Won);
  EXPECT_EQ(t.won_round, 2u);
  EXPECT_EQ(t.final_bound, ck::Scale(138));
  EXPECT_FALSE(t.rounds[0].declared_bound);
}

TEST(Game, SlabInThreeDimensions) {
  auto cube = ck::MetricSpace::integer_grid_box(3, -6, 6);
  auto s = ck::slab_strategy(3);
  auto t = ck::play_fdc(cube, *s, ck::Adversary::constant(ck::Scale(1, 2)), 5);
  EXPECT_EQ(t.outcome, ck::GameOutcome::Won);
  EXPECT_EQ(t.won_round, 3u);
  EXPECT_EQ(t.final_bound, ck::Scale(12));
}

TEST(Game, BoundedSpace) {
  auto line = ck::MetricSpace::integer_line(0, 9);
  auto s = ck::bounded_strategy(line);
  auto t = ck::play_fdc(line, *s, ck::Adversary::constant(100), 2);
  EXPECT_EQ(t.outcome, ck::GameOutcome::Won);
  EXPECT_EQ(t.final_bound, ck::Scale(9));
}

TEST(Game, InvalidResponsesLose) {
  auto line = ck::MetricSpace::integer_line(-10, 10);
  LeakyStrategy leaky;
  auto t = ck::play_fdc(line, leaky, ck::Adversary::constant(1), 3);
  EXPECT_EQ(t.outcome, ck::GameOutcome::Lost);
  EXPECT_FALSE(t.rounds.back().verdict.pass());

  ThrowingStrategy throwing;
  auto u = ck::play_fdc(line, throwing, ck::Adversary::constant(1), 3);
  EXPECT_EQ(u.outcome, ck::GameOutcome::Lost);
  EXPECT_NE(u.detail.find("no answer"), std::string::npos);
}

TEST(Game, CapHit) {
  auto line = ck::MetricSpace::integer_line(-10, 10);
  StallingStrategy stall;
  auto t = ck::play_fdc(line, stall, ck::Adversary::constant(1), 3);
  EXPECT_EQ(t.outcome, ck::GameOutcome::CapHit);
  EXPECT_EQ(t.rounds.size(), 3u);
  auto u = ck::play_fdc(line, stall, ck::Adversary::sequence({1}), 3);
  EXPECT_EQ(u.outcome, ck::GameOutcome::CapHit);
  EXPECT_EQ(u.rounds.size(), 1u);
}

TEST(Game, StrongVariant) {
  auto plane = ck::MetricSpace::integer_grid_box(2, -30, 30);
  auto s = ck::slab_strategy(2);
  std::vector<ck::Scale> radii{1, 2, 3};
  auto t = ck::run_sfdc(plane, *s, radii);
  EXPECT_EQ(t.mode, "sfdc");
  EXPECT_EQ(t.outcome, ck::GameOutcome::Won);
  EXPECT_EQ(t.final_bound, ck::Scale(9 + 19));

  std::vector<ck::Scale> decreasing{3, 2};
  auto s2 = ck::slab_strategy(2);
  EXPECT_THROW((void)ck::run_sfdc(plane, *s2, decreasing), ck::PreconditionError);
  std::vector<ck::Scale> zero{0, 2};
  EXPECT_THROW((void)ck::run_sfdc(plane, *s2, zero), ck::PreconditionError);
}

TEST(Game, ReplayAcceptsRecordedGames) {
  auto plane = ck::MetricSpace::integer_grid_box(2, -20, 20);
  auto s = ck::slab_strategy(2);
  auto t = ck::play_fdc(plane, *s, ck::Adversary::sequence({1, 2}), 3);
  auto ok = ck::replay_transcript(plane, t);
  EXPECT_TRUE(ok.pass) << ok.first_mismatch;

  auto forged = t;
  forged.rounds[1].family.pop_back();
  auto bad = ck::replay_transcript(plane, forged);
  EXPECT_FALSE(bad.pass);
  EXPECT_FALSE(bad.first_mismatch.empty());

  auto wrong_outcome = t;
  wrong_outcome.outcome = ck::GameOutcome::Lost;
  EXPECT_FALSE(ck::replay_transcript(plane, wrong_outcome).pass);
}

TEST(Game, BuiltinStrategyNames) {
  auto line = ck::MetricSpace::integer_line(-3, 3);
  EXPECT_NO_THROW((void)ck::builtin_strategy("interval", line));
  EXPECT_NO_THROW((void)ck::builtin_strategy("bounded", line));
  EXPECT_THROW((void)ck::builtin_strategy("spiral", line), ck::PreconditionError);
}

TEST(LiftedStrategy, WinsInTwoRounds) {
  struct Case {
    std::vector<ck::Scale> radii;
    ck::Scale bound;
  };
  for (const auto& c : {Case{{3, 11}, 167}, Case{{1, 1}, 27}, Case{{7, 2}, 157}}) {
    auto t = lifted_game(20, c.radii);
    EXPECT_EQ(t.outcome, ck::GameOutcome::Won) << t.detail;
    EXPECT_EQ(t.won_round, 2u);
    EXPECT_EQ(t.final_bound, c.bound);
    ASSERT_EQ(t.rounds.size(), 2u);
    EXPECT_EQ(t.rounds[0].phase, "phase-1");
    EXPECT_EQ(t.rounds[1].phase, "phase-2");
    EXPECT_LE(ck::Scale(t.rounds[1].max_diameter), c.bound);
  }
}

TEST(LiftedStrategy, BoundDoesNotDependOnWindow) {
  auto small = lifted_game(12, {3, 11});
  auto large = lifted_game(24, {3, 11});
  EXPECT_EQ(small.final_bound, large.final_bound);
  EXPECT_EQ(small.won_round, large.won_round);
}

TEST(LiftedStrategy, ReplayHolds) {
  auto action = ck::lattice_projection_action(2, 20, 40);
  auto space = ck::cayley_space(action.group(), 10);
  auto t = lifted_game(10, {1, 1});
  EXPECT_TRUE(ck::replay_transcript(space, t).pass);
}

TEST(LiftedStrategy, EmptiedSingletonIsReportedUncovered) {
  auto action = ck::lattice_projection_action(2, 20, 40);
  auto space = ck::cayley_space(action.group(), 10);
  auto t = lifted_game(10, {1, 1});
  auto& family = t.rounds.back().family;
  auto single = std::find_if(family.begin(), family.end(),
                             [](const ck::Subset& s) { return s.size() == 1; });
  ASSERT_NE(single, family.end());
  auto lost = single->front();
  *single = ck::Subset{};
  auto r = ck::replay_transcript(space, t);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->kind, ck::ViolationKind::Uncovered);
  EXPECT_EQ(r.witness->points, std::vector<ck::Point>{lost});
}

TEST(LiftedStrategy, NeedsUniformAction) {
  auto action = ck::lamplighter_action();
  auto space = ck::cayley_space(action.group(), 2);
  EXPECT_THROW((void)ck::lifted_strategy(action, space, ck::interval_strategy(),
                                         ck::strip_interval_factory(1)),
               ck::PreconditionError);
}
