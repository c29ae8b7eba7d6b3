#include <gtest/gtest.h>

#include <cstdlib>
#include <limits>
#include <set>

#include "coarsekit/extension.hpp"
#include "support/setups.hpp"

namespace ck = coarsekit;

namespace {

std::int64_t l1(const ck::Point& p, const ck::Point& q) {
  return std::abs(p[0] - q[0]) + std::abs(p[1] - q[1]);
}

// Smallest distance between two members of one family, by brute force.
std::int64_t min_gap(const ck::SubsetFamily& fam) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t a = 0; a < fam.members.size(); ++a) {
    for (std::size_t b = a + 1; b < fam.members.size(); ++b) {
      for (const auto& p : fam.members[a].points()) {
        for (const auto& q : fam.members[b].points()) {
          best = std::min(best, l1(p, q));
        }
      }
    }
  }
  return best;
}

std::int64_t max_diameter(const ck::SubsetFamily& fam) {
  std::int64_t best = 0;
  for (const auto& m : fam.members) {
    auto pts = m.points();
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) best = std::max(best, l1(pts[a], pts[b]));
    }
  }
  return best;
}

class FadCover : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    input_ = new ck::ExtensionInput(setup::lattice_fad(20));
    cover_ = new ck::ConstructedCover(ck::build_fad_cover(*input_, 8));
  }
  static void TearDownTestSuite() {
    delete cover_;
    delete input_;
  }
  static ck::ExtensionInput* input_;
  static ck::ConstructedCover* cover_;
};

ck::ExtensionInput* FadCover::input_ = nullptr;
ck::ConstructedCover* FadCover::cover_ = nullptr;

}  // namespace

TEST_F(FadCover, ConstantsAndShape) {
  EXPECT_EQ(cover_->stabilizer_radius, ck::Scale(7));
  EXPECT_EQ(cover_->lipschitz, ck::Scale(1));
  EXPECT_EQ(cover_->families.size(), 4u);
  EXPECT_EQ(cover_->claimed_dimension_bound, 3u);
  EXPECT_EQ(cover_->core_shrink, 0);
  EXPECT_TRUE(cover_->report.pass());
}

TEST_F(FadCover, IndependentlyDisjointBoundedAndCovering) {
  std::set<ck::Point> seen;
  for (const auto& fam : cover_->families) {
    EXPECT_GT(min_gap(fam), 8);
    EXPECT_LE(max_diameter(fam), 21);
    for (const auto& m : fam.members) {
      for (const auto& p : m.points()) seen.insert(p);
    }
  }
  auto window = input_->group_space.window();
  EXPECT_EQ(seen.size(), window.size());
  for (const auto& g : window) EXPECT_TRUE(seen.count(g));
}

TEST_F(FadCover, IndexIsABijection) {
  std::set<std::size_t> ks;
  std::set<std::pair<std::size_t, std::size_t>> ij;
  for (const auto& c : cover_->index) {
    EXPECT_EQ(c.k, c.i * 2 + c.j);
    ks.insert(c.k);
    ij.insert({c.i, c.j});
  }
  EXPECT_EQ(ks.size(), 4u);
  EXPECT_EQ(ij.size(), 4u);
}

TEST_F(FadCover, SectionsAreCanonicalMinima) {
  const auto& G = *input_->action.group();
  auto window = input_->group_space.window();
  for (const auto& s : cover_->sections) {
    const auto& F = input_->x_covers[s.family].members[s.member];
    std::optional<ck::Point> best;
    for (const auto& g : window) {
      if (!F.contains(ck::Point{g[0]})) continue;
      auto len = std::abs(g[0]) + std::abs(g[1]);
      if (!best) {
        best = g;
        continue;
      }
      auto blen = std::abs((*best)[0]) + std::abs((*best)[1]);
      if (len < blen || (len == blen && g < *best)) best = g;
    }
    ASSERT_TRUE(best);
    EXPECT_EQ(s.element, *best) << G.word(s.element);
  }
}

TEST_F(FadCover, TranslationMovesPiecesIsometrically) {
  const auto& G = *input_->action.group();
  auto g = ck::Point{3, -2};
  for (const auto& fam : cover_->families) {
    for (const auto& m : fam.members) {
      auto pts = m.points();
      for (std::size_t a = 0; a + 1 < pts.size() && a < 5; ++a) {
        auto ga = G.multiply(g, pts[a]);
        auto gb = G.multiply(g, pts[a + 1]);
        EXPECT_EQ(G.distance(ga, gb), G.distance(pts[a], pts[a + 1]));
      }
    }
  }
}

TEST(Extension, WindowStability) {
  auto small = ck::build_fad_cover(setup::lattice_fad(12), 8);
  auto large = ck::build_fad_cover(setup::lattice_fad(20), 8);
  auto inner = ck::cayley_space(ck::make_lattice(2), 4).window();
  // Points of ball(4) keep the same companions inside ball(4) in both runs.
  auto companions = [&](const ck::ConstructedCover& c, const ck::Point& p) {
    std::vector<std::set<ck::Point>> out;
    for (const auto& fam : c.families) {
      std::set<ck::Point> s;
      for (const auto& m : fam.members) {
        if (!m.contains(p)) continue;
        for (const auto& q : m.points()) {
          if (std::abs(q[0]) + std::abs(q[1]) <= 4) s.insert(q);
        }
      }
      out.push_back(s);
    }
    return out;
  };
  for (const auto& p : inner) {
    EXPECT_EQ(companions(small, p), companions(large, p));
  }
}

TEST(Extension, ApcCover) {
  auto input = setup::lattice_apc(20);
  auto cover = ck::build_apc_cover(input, setup::apc_radii());
  EXPECT_EQ(cover.stabilizer_radius, ck::Scale(12));
  ASSERT_EQ(cover.families.size(), 4u);
  EXPECT_TRUE(cover.report.pass());
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(cover.families[k].claimed_disjointness, setup::apc_radii()[k]);
    EXPECT_GT(min_gap(cover.families[k]), boost::rational_cast<std::int64_t>(setup::apc_radii()[k]));
    EXPECT_LE(max_diameter(cover.families[k]), 36);
  }
}

TEST(Extension, ApcShortSequenceThrows) {
  auto input = setup::lattice_apc(8);
  std::vector<ck::Scale> r{2, 3, 5, 8};
  EXPECT_THROW((void)ck::build_apc_cover(input, r), ck::PreconditionError);
}

TEST(Extension, SwappedXFamiliesFail) {
  auto input = setup::lattice_apc(10);
  std::swap(input.x_covers[0], input.x_covers[1]);
  try {
    (void)ck::build_apc_cover(input, setup::apc_radii());
    FAIL() << "expected a construction error";
  } catch (const ck::ConstructionError& e) {
    EXPECT_EQ(e.axiom(), "X family 1 disjointness");
    ASSERT_TRUE(e.witness());
    EXPECT_EQ(e.witness()->kind, ck::ViolationKind::NotDisjoint);
  }
}

TEST(Extension, ShrunkStabilizerRadiusBreaksContainment) {
  auto base = setup::lattice_fad(10);
  auto c = base.action.constants();
  c.control = ck::ControlFunction::table({{0, 0}, {1, 1}, {7, 3}});
  auto action = base.action.with_constants(c);
  ASSERT_EQ(ck::stabilizer_radius(action, 7), ck::Scale(3));
  auto w = ck::interval_cover(setup::stabilizer_points(action, 3, 10), 8, 0, 1);
  ck::ExtensionInput input{action, base.group_space, base.x_covers, {w[0], w[1]}, 7, 21};
  try {
    (void)ck::build_fad_cover(input, 8);
    FAIL() << "expected a construction error";
  } catch (const ck::ConstructionError& e) {
    EXPECT_EQ(e.axiom(), "containment");
    ASSERT_TRUE(e.witness());
    EXPECT_GT(*e.witness()->measured, 3);
  }
}

TEST(Extension, NonuniformActionRejected) {
  auto action = ck::lamplighter_action();
  EXPECT_THROW((void)ck::stabilizer_radius(action, 3), ck::PreconditionError);
  ck::ExtensionInput input{action, ck::cayley_space(action.group(), 2), {}, {}, 1, 1};
  EXPECT_THROW((void)ck::build_fad_cover(input, 1), ck::ConstructionError);
}

TEST(Extension, DegenerateSingleFamilies) {
  auto base = setup::lattice_fad(8);
  // One X member covering the window and one W member: k = 0.
  ck::SubsetFamily x;
  x.members.emplace_back(std::vector<ck::Point>(base.action.space().window().begin(),
                                                base.action.space().window().end()));
  x.claimed_bound = ck::Scale(32);
  ck::SubsetFamily w;
  w.members.emplace_back(setup::stabilizer_points(base.action, 32, 8));
  ck::ExtensionInput input{base.action, base.group_space, {x}, {w}, 32, 64};
  auto cover = ck::build_fad_cover(input, 100);
  EXPECT_EQ(cover.families.size(), 1u);
  EXPECT_EQ(cover.claimed_dimension_bound, 0u);
  EXPECT_TRUE(cover.report.pass());
}

TEST(Extension, PullbackRequiresStampedMap) {
  auto action = ck::lattice_projection_action(2, 50);
  auto cayley = ck::cayley_space(action.group(), 3);
  auto raw = ck::orbit_map(action, cayley);
  auto fam = ck::interval_cover(action.space().window(), 4)[0];
  EXPECT_THROW((void)ck::pullback_family(raw, fam, cayley.window()),
               ck::PreconditionError);
  auto pi = ck::stamped_orbit_map(action, cayley);
  auto pulled = ck::pullback_family(pi, fam, cayley.window());
  for (const auto& m : pulled.members) {
    for (const auto& g : m.points()) EXPECT_EQ(ck::floor_div(g[0], 4) % 2, 0);
  }
  EXPECT_THROW((void)ck::choose_section(pi, ck::Subset({ck::Point{40}}), cayley.window()),
               ck::PreconditionError);
}

TEST(Generators, IntervalCoverClaims) {
  auto line = ck::MetricSpace::integer_line(-30, 30);
  for (std::int64_t L : {1, 2, 5, 8}) {
    auto fams = ck::interval_cover_generator(line, L);
    for (const auto& f : fams) {
      EXPECT_EQ(f.claimed_disjointness, ck::Scale(L));
      EXPECT_EQ(f.claimed_bound, ck::Scale(L - 1));
      EXPECT_TRUE(ck::is_r_disjoint(line, f, L));
      EXPECT_FALSE(ck::is_r_disjoint(line, f, L + 1));
    }
  }
}

TEST(Generators, TwoScaleCover) {
  auto line = ck::MetricSpace::integer_line(-40, 40);
  auto fams = ck::two_scale_interval_cover(line.window(), 13, 5);
  EXPECT_TRUE(ck::is_r_disjoint(line, fams[0], 5));
  EXPECT_TRUE(ck::is_r_disjoint(line, fams[1], 13));
  EXPECT_FALSE(ck::is_r_disjoint(line, fams[1], 14));
  EXPECT_EQ(ck::family_diameter(line, fams[0]).value, 12);
  EXPECT_EQ(ck::family_diameter(line, fams[1]).value, 4);
}
