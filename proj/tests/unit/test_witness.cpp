#include <gtest/gtest.h>

#include "coarsekit/extension.hpp"
#include "coarsekit/witness.hpp"

namespace ck = coarsekit;

namespace {

ck::Subset interval(std::int64_t lo, std::int64_t hi) {
  std::vector<ck::Point> pts;
  for (auto x = lo; x <= hi; ++x) pts.push_back(ck::Point{x});
  return ck::Subset(std::move(pts));
}

// Families {[8j, 8j+3]} and {[8j+4, 8j+7]} on [-24, 23].
std::vector<ck::SubsetFamily> eight_blocks() {
  std::vector<ck::SubsetFamily> fams(2);
  for (int j = -3; j <= 2; ++j) {
    fams[0].members.push_back(interval(8 * j, 8 * j + 3));
    fams[1].members.push_back(interval(8 * j + 4, 8 * j + 7));
  }
  return fams;
}

}  // namespace

TEST(FadWitness, LineFamiliesAtTwoPass) {
  auto line = ck::MetricSpace::integer_line(-24, 23);
  auto report = ck::verify_fad_witness(line, eight_blocks(), 2);
  EXPECT_TRUE(report.pass());
  ASSERT_TRUE(report.dimension_bound);
  EXPECT_EQ(*report.dimension_bound, 1u);
  EXPECT_EQ(report.measured_bound, 3);
  EXPECT_EQ(report.window_id, "[-24,23]");
}

TEST(FadWitness, LineFamiliesAtSixFail) {
  auto line = ck::MetricSpace::integer_line(-24, 23);
  auto report = ck::verify_fad_witness(line, eight_blocks(), 6);
  ASSERT_FALSE(report.pass());
  EXPECT_EQ(report.violations.front().kind, ck::ViolationKind::NotDisjoint);
  EXPECT_EQ(report.violations.front().measured, 5);
}

TEST(FadWitness, SingletonsAtHalf) {
  auto line = ck::MetricSpace::integer_line(-10, 10);
  ck::SubsetFamily singletons;
  for (const auto& p : line.window()) singletons.members.push_back(ck::Subset({p}));
  std::vector<ck::SubsetFamily> fams{singletons};
  auto report = ck::verify_fad_witness(line, fams, ck::Scale(1, 2));
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(*report.dimension_bound, 0u);
  EXPECT_EQ(report.measured_bound, 0);
}

TEST(FadWitness, UncoveredPointsAreListed) {
  auto line = ck::MetricSpace::integer_line(-24, 23);
  auto fams = eight_blocks();
  fams[0].members[2] = interval(-8, -6);
  auto report = ck::verify_fad_witness(line, fams, 2);
  ASSERT_FALSE(report.pass());
  const auto& v = report.violations.back();
  EXPECT_EQ(v.kind, ck::ViolationKind::Uncovered);
  EXPECT_EQ(v.points, std::vector<ck::Point>{ck::Point{-5}});
}

TEST(FadWitness, ClaimedBoundIsChecked) {
  auto line = ck::MetricSpace::integer_line(-24, 23);
  auto fams = eight_blocks();
  fams[1].claimed_bound = ck::Scale(2);
  auto report = ck::verify_fad_witness(line, fams, 2);
  ASSERT_FALSE(report.pass());
  EXPECT_EQ(report.violations.front().kind, ck::ViolationKind::ExceedsBound);
}

TEST(FadWitness, OutsideUniverseIsReported) {
  auto line = ck::MetricSpace::integer_line(-3, 3);
  std::vector<ck::SubsetFamily> fams(1);
  fams[0].members.push_back(ck::Subset({ck::Point{0, 1}}));
  auto report = ck::verify_fad_witness(line, fams, 1);
  ASSERT_FALSE(report.pass());
  EXPECT_EQ(report.violations.front().kind, ck::ViolationKind::OutsideUniverse);
}

TEST(FadWitness, MonotoneInScale) {
  auto line = ck::MetricSpace::integer_line(-24, 23);
  auto fams = eight_blocks();
  for (int r = 0; r <= 4; ++r) {
    EXPECT_TRUE(ck::verify_fad_witness(line, fams, r).pass()) << r;
  }
}

TEST(ApcWitness, Examples) {
  auto line = ck::MetricSpace::integer_line(-24, 23);
  auto fams = eight_blocks();
  std::vector<ck::Scale> constant{2, 2};
  EXPECT_TRUE(ck::verify_apc_witness(line, fams, constant).pass());

  std::vector<ck::Scale> growing{1, 6};
  auto report = ck::verify_apc_witness(line, fams, growing);
  ASSERT_FALSE(report.pass());
  EXPECT_EQ(report.violations.front().family, 1u);
}

TEST(ApcWitness, TwoScaleGeneratorMatchesSequence) {
  auto line = ck::MetricSpace::integer_line(-100, 100);
  // Family 0 must be 2-disjoint, family 1 8-disjoint.
  auto gen = ck::two_scale_interval_cover(line.window(), 9, 3);
  std::vector<ck::SubsetFamily> fams(gen.begin(), gen.end());
  std::vector<ck::Scale> seq{2, 8};
  EXPECT_TRUE(ck::verify_apc_witness(line, fams, seq).pass());
}

TEST(ApcWitness, PreconditionsThrow) {
  auto line = ck::MetricSpace::integer_line(-24, 23);
  auto fams = eight_blocks();
  std::vector<ck::Scale> decreasing{3, 2};
  EXPECT_THROW((void)ck::verify_apc_witness(line, fams, decreasing), ck::PreconditionError);
  std::vector<ck::Scale> short_seq{2};
  EXPECT_THROW((void)ck::verify_apc_witness(line, fams, short_seq), ck::PreconditionError);
  std::vector<ck::Scale> zero{0, 1};
  EXPECT_THROW((void)ck::verify_apc_witness(line, fams, zero), ck::PreconditionError);
}

TEST(ApcWitness, FadImpliesConstantApc) {
  auto line = ck::MetricSpace::integer_line(-40, 40);
  for (std::int64_t L = 1; L <= 6; ++L) {
    auto gen = ck::interval_cover_generator(line, L);
    std::vector<ck::SubsetFamily> fams(gen.begin(), gen.end());
    for (std::int64_t r = 1; r <= 7; ++r) {
      std::vector<ck::Scale> seq{r, r};
      if (ck::verify_fad_witness(line, fams, r).pass()) {
        EXPECT_TRUE(ck::verify_apc_witness(line, fams, seq).pass());
      }
    }
  }
}

TEST(Decomposition, Examples) {
  auto line = ck::MetricSpace::integer_line(-10, 110);
  ck::SubsetFamily parent;
  parent.members.push_back(interval(0, 99));
  ck::SubsetFamily child;
  for (int b = 0; b < 5; ++b) child.members.push_back(interval(20 * b, 20 * b + 19));
  ck::DecompositionAssignment assignment(1);
  assignment[0][0] = {0, 2, 4};
  assignment[0][1] = {1, 3};
  EXPECT_TRUE(ck::verify_decomposition(line, parent, child, 5, assignment).pass());

  auto report = ck::verify_decomposition(line, parent, child, 25, assignment);
  ASSERT_FALSE(report.pass());
  EXPECT_EQ(report.violations.front().kind, ck::ViolationKind::NotDisjoint);
  EXPECT_EQ(report.violations.front().measured, 21);
}

TEST(Decomposition, TrivialAssignmentPassesForEveryRadius) {
  auto line = ck::MetricSpace::integer_line(-10, 110);
  ck::SubsetFamily parent;
  parent.members = {interval(0, 9), interval(12, 40)};
  for (int R : {0, 1, 5, 100, 1000000}) {
    EXPECT_TRUE(ck::verify_decomposition(line, parent, parent, R,
                                         ck::trivial_assignment(parent.members.size()))
                    .pass());
  }
}

TEST(Decomposition, FindsUncoveredAndStrayPoints) {
  auto line = ck::MetricSpace::integer_line(-10, 110);
  ck::SubsetFamily parent;
  parent.members.push_back(interval(0, 9));
  ck::SubsetFamily child;
  child.members = {interval(0, 3), interval(6, 10)};
  ck::DecompositionAssignment assignment(1);
  assignment[0][0] = {0, 1};
  auto report = ck::verify_decomposition(line, parent, child, 1, assignment);
  ASSERT_FALSE(report.pass());
  bool stray = false;
  bool uncovered = false;
  for (const auto& v : report.violations) {
    stray |= v.kind == ck::ViolationKind::NotContained && v.points.front() == ck::Point{10};
    uncovered |= v.kind == ck::ViolationKind::Uncovered && v.points.size() == 2;
  }
  EXPECT_TRUE(stray);
  EXPECT_TRUE(uncovered);
}

TEST(Decomposition, DanglingIndexThrows) {
  auto line = ck::MetricSpace::integer_line(0, 9);
  ck::SubsetFamily parent;
  parent.members.push_back(interval(0, 9));
  ck::DecompositionAssignment assignment(1);
  assignment[0][0] = {3};
  EXPECT_THROW((void)ck::verify_decomposition(line, parent, parent, 1, assignment),
               ck::PreconditionError);
  EXPECT_THROW((void)ck::verify_decomposition(line, parent, parent, 1, {}),
               ck::PreconditionError);
}
