#include <gtest/gtest.h>

#include "coarsekit/group.hpp"
#include "support/oracles.hpp"

namespace ck = coarsekit;

namespace {

ck::GroupElement lamps(std::vector<std::pair<std::int64_t, std::int64_t>> l, std::int64_t k) {
  return ck::lamplighter_element({std::move(l), k});
}

oracle::Lamp to_oracle(const ck::GroupElement& g) {
  oracle::Lamp out;
  auto c = ck::lamp_configuration(g);
  out.shift = c.shift;
  for (auto [x, n] : c.lamps) out.lamps[x] = n;
  return out;
}

std::vector<ck::GroupElement> elements(const ck::GroupModel& G, ck::Distance r) {
  std::vector<ck::GroupElement> out;
  for (auto& e : ck::ball(G, r)) out.push_back(e.element);
  return out;
}

}  // namespace

TEST(Lamplighter, Multiplication) {
  auto G = ck::make_lamplighter();
  auto a = lamps({{0, 1}}, 0);
  auto t = lamps({}, 1);
  EXPECT_EQ(G->multiply(a, t), lamps({{0, 1}}, 1));
  EXPECT_EQ(G->multiply(t, a), lamps({{1, 1}}, 1));
  EXPECT_EQ(G->inverse(lamps({{0, 1}}, 1)), lamps({{-1, -1}}, -1));
  EXPECT_EQ(G->multiply(lamps({{0, 1}}, 1), lamps({{-1, -1}}, -1)), G->identity());
  EXPECT_EQ(G->evaluate("a"), a);
  EXPECT_EQ(G->evaluate("t"), t);
}

TEST(Lamplighter, Norm) {
  auto G = ck::make_lamplighter();
  EXPECT_EQ(G->norm(G->identity()), 0);
  EXPECT_EQ(G->norm(lamps({{0, 1}, {1, 1}}, 0)), 2);
  EXPECT_EQ(G->norm(lamps({{2, 3}}, -1)), 4);
  auto Z2 = ck::make_lattice(2);
  try {
    (void)Z2->norm(Z2->identity());
    FAIL() << "expected an error";
  } catch (const ck::PreconditionError& e) {
    EXPECT_STREQ(e.what(), "norm undefined");
  }
}

TEST(Lamplighter, WordLengths) {
  auto G = ck::make_lamplighter();
  EXPECT_EQ(ck::word_length(*G, lamps({}, 1), 8), 1);
  EXPECT_EQ(ck::word_length(*G, lamps({{0, 1}, {1, 1}}, 0), 8), 4);
  EXPECT_EQ(ck::word_length(*G, lamps({{1, 1}}, 0), 8), 3);
  EXPECT_EQ(ck::word_length(*G, lamps({{0, -1}, {1, 1}}, 0), 8), 4);
  EXPECT_EQ(G->evaluate("atAT"), lamps({{0, 1}, {1, -1}}, 0));
  EXPECT_EQ(ck::word_length(*G, lamps({{5, 1}}, 0), 4), std::nullopt);
}

TEST(Lamplighter, BallMatchesWordEnumeration) {
  auto G = ck::make_lamplighter();
  auto reference = oracle::lamplighter_lengths(6);
  auto entries = ck::ball(*G, 6);
  ASSERT_EQ(entries.size(), reference.size());
  for (const auto& e : entries) {
    auto it = reference.find(to_oracle(e.element));
    ASSERT_NE(it, reference.end());
    EXPECT_EQ(it->second, e.length);
    EXPECT_EQ(G->geodesic_length(e.element), e.length);
  }
  std::vector<std::size_t> sizes;
  for (int r = 1; r <= 6; ++r) sizes.push_back(ck::ball(*G, r).size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{5, 17, 53, 153, 421, 1125}));
}

TEST(Lamplighter, GeodesicWordsSpellTheirElements) {
  auto G = ck::make_lamplighter();
  for (const auto& e : ck::ball(*G, 5)) {
    auto w = G->word(e.element);
    EXPECT_EQ(static_cast<ck::Distance>(w.size()), e.length);
    EXPECT_EQ(G->evaluate(w), e.element);
  }
}

TEST(Lamplighter, LengthDominatesShiftAndSupport) {
  auto G = ck::make_lamplighter();
  for (const auto& e : ck::ball(*G, 5)) {
    auto c = ck::lamp_configuration(e.element);
    EXPECT_GE(e.length, std::abs(c.shift));
    EXPECT_GE(e.length, static_cast<ck::Distance>(c.lamps.size()));
  }
}

TEST(Lamplighter, BallOneAndCap) {
  auto G = ck::make_lamplighter();
  auto one = elements(*G, 1);
  std::vector<ck::GroupElement> expected{G->identity(), G->evaluate("a"), G->evaluate("A"),
                                         G->evaluate("t"), G->evaluate("T")};
  ck::canonical_sort(*G, expected);
  EXPECT_EQ(one, expected);
  EXPECT_THROW((void)ck::ball(*G, 9), ck::CapExceeded);
  EXPECT_NO_THROW((void)ck::ball(*ck::make_lamplighter(9), 2));
}

TEST(FreeGroup, ReductionAndInverse) {
  auto F = ck::make_free_group(2);
  EXPECT_EQ(F->multiply(F->evaluate("ab"), F->evaluate("Ba")), F->evaluate("aa"));
  EXPECT_EQ(F->inverse(F->evaluate("aB")), F->evaluate("bA"));
  EXPECT_EQ(F->word(F->evaluate("abBBa")), oracle::free_reduce("abBBa"));
  EXPECT_EQ(ck::ball(*F, 2).size(), 17u);
  EXPECT_THROW((void)F->evaluate("ac"), ck::PreconditionError);
}

TEST(FreeGroup, BallSizesByTreeCount) {
  auto F = ck::make_free_group(2);
  std::size_t expected = 1;
  std::size_t sphere = 4;
  for (int r = 1; r <= 6; ++r) {
    expected += sphere;
    sphere *= 3;
    EXPECT_EQ(ck::ball(*F, r).size(), expected);
  }
}

TEST(Lattice, Basics) {
  auto Z2 = ck::make_lattice(2);
  EXPECT_EQ(Z2->inverse(ck::Point{2, -3}), (ck::Point{-2, 3}));
  EXPECT_EQ(ck::word_length(*Z2, ck::Point{2, 1}, 10), 3);
  auto Z = ck::make_lattice(1);
  auto line = elements(*Z, 2);
  EXPECT_EQ(line.size(), 5u);
  EXPECT_EQ(Z2->word(ck::Point{2, -1}), "aaB");
  EXPECT_THROW((void)Z2->multiply(ck::Point{1}, ck::Point{1, 2}), ck::ModelMismatch);
}

TEST(FreeProduct, ZStarZMatchesF2) {
  auto ZZ = ck::make_free_product(ck::make_lattice(1), ck::make_lattice(1));
  auto F2 = ck::make_free_group(2);
  EXPECT_EQ(ZZ->name(), "Z*Z");
  EXPECT_EQ(ZZ->alphabet(), "ab");
  for (int r = 0; r <= 5; ++r) {
    auto a = ck::ball(*ZZ, r);
    auto b = ck::ball(*F2, r);
    ASSERT_EQ(a.size(), b.size()) << r;
    std::map<ck::Distance, std::size_t> sa;
    std::map<ck::Distance, std::size_t> sb;
    for (const auto& e : a) ++sa[e.length];
    for (const auto& e : b) ++sb[e.length];
    EXPECT_EQ(sa, sb);
  }
  for (const auto& e : ck::ball(*ZZ, 4)) {
    auto w = ZZ->word(e.element);
    EXPECT_EQ(F2->geodesic_length(F2->evaluate(w)), e.length);
    EXPECT_EQ(ZZ->evaluate(w), e.element);
  }
}

TEST(FreeProduct, SyllablesAlternate) {
  auto ZZ = ck::make_free_product(ck::make_lattice(1), ck::make_lattice(1));
  auto g = ZZ->evaluate("aabAb");
  auto parts = ck::syllables(g);
  ASSERT_EQ(parts.size(), 4u);
  EXPECT_EQ(parts[0].factor, 0);
  EXPECT_EQ(parts[0].element, ck::Point{2});
  EXPECT_EQ(parts[1].factor, 1);
  EXPECT_EQ(ZZ->multiply(g, ZZ->inverse(g)), ZZ->identity());
  EXPECT_EQ(ZZ->evaluate("abB"), ZZ->evaluate("a"));
}

TEST(FreeProduct, MixedFactors) {
  auto P = ck::make_free_product(ck::make_lamplighter(), ck::make_lattice(1));
  EXPECT_EQ(P->alphabet(), "abc");
  auto g = P->evaluate("abc");
  EXPECT_EQ(P->geodesic_length(g), 3);
  EXPECT_EQ(P->evaluate(P->word(g)), g);
}

TEST(GroupLaws, AssociativityIdentityAndSymmetry) {
  std::vector<ck::GroupPtr> models{
      ck::make_lattice(2), ck::make_free_group(2), ck::make_lamplighter(),
      ck::make_free_product(ck::make_lattice(1), ck::make_free_group(2))};
  for (const auto& G : models) {
    auto b2 = elements(*G, 2);
    for (const auto& x : b2) {
      EXPECT_EQ(G->multiply(x, G->identity()), x) << G->name();
      EXPECT_EQ(G->multiply(G->identity(), x), x) << G->name();
      for (const auto& y : b2) {
        for (const auto& z : b2) {
          ASSERT_EQ(G->multiply(G->multiply(x, y), z), G->multiply(x, G->multiply(y, z)))
              << G->name();
        }
      }
    }
    for (const auto& e : ck::ball(*G, 4)) {
      EXPECT_EQ(ck::word_length(*G, G->inverse(e.element), 4), e.length) << G->name();
      EXPECT_EQ(G->geodesic_length(e.element), e.length) << G->name();
    }
  }
}

TEST(Cayley, DistancesAndTriangleInequality) {
  auto G = ck::make_lamplighter();
  auto space = ck::cayley_space(G, 3);
  auto a = G->evaluate("a");
  auto t = G->evaluate("t");
  EXPECT_EQ(space.distance(G->identity(), t), 1);
  auto tat = G->evaluate("taT");
  auto bfs = ck::word_length(*G, G->multiply(G->inverse(a), tat), 8);
  EXPECT_EQ(space.distance(a, tat), bfs);
  EXPECT_EQ(space.distance(a, tat), 4);

  auto pts = space.window();
  EXPECT_EQ(pts.size(), 53u);
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      auto dxy = space.distance(x, y);
      for (const auto& z : pts) {
        ASSERT_LE(space.distance(x, z), dxy + space.distance(y, z));
      }
    }
  }
}

TEST(Cayley, LeftInvariance) {
  for (const auto& G : {ck::make_lamplighter(), ck::make_free_group(2)}) {
    auto b = elements(*G, 2);
    for (const auto& g : b) {
      for (const auto& h1 : b) {
        for (const auto& h2 : b) {
          ASSERT_EQ(G->distance(G->multiply(g, h1), G->multiply(g, h2)), G->distance(h1, h2));
        }
      }
    }
  }
}

TEST(Cayley, ClosedFormMatchesBfsOnLargerLamplighterBall) {
  auto G = ck::make_lamplighter();
  for (const auto& e : ck::ball(*G, 8)) {
    ASSERT_EQ(G->geodesic_length(e.element), e.length) << ck::debug_string(e.element);
  }
}
