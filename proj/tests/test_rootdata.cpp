#include <gtest/gtest.h>

#include <set>

#include "prohecke/rootdata.hpp"

using namespace prohecke;

namespace {

// Reflection of a coroot: s_a(xi) = xi - <xi, a> a^vee.
Coord reflect_cochar(const RootDatum& rd, int a, const Coord& xi) {
  return xi - static_cast<std::int32_t>(pairing(xi, rd.root(a))) * rd.coroot(a);
}
Coord reflect_char(const RootDatum& rd, int a, const Coord& chi) {
  return chi - static_cast<std::int32_t>(pairing(rd.coroot(a), chi)) * rd.root(a);
}

}  // namespace

TEST(RootData, RootCounts) {
  const std::vector<std::pair<std::string, int>> expected = {{"SL2", 2}, {"PGL2", 2}, {"GL2", 2},   {"SL3", 6},
                                                             {"GL3", 6}, {"Sp4", 8},  {"G2sc", 12}, {"SL2xSL2", 4}};
  for (const auto& [name, n] : expected) EXPECT_EQ(RootDatum::preset(name).num_roots(), n) << name;
}

TEST(RootData, Sl2AndPgl2Coordinates) {
  const auto sl2 = RootDatum::preset("SL2");
  EXPECT_EQ(sl2.rank(), 1);
  EXPECT_EQ(sl2.root(0)(0), 2);
  EXPECT_EQ(sl2.coroot(0)(0), 1);
  const auto pgl2 = RootDatum::preset("PGL2");
  EXPECT_EQ(pgl2.root(0)(0), 1);
  EXPECT_EQ(pgl2.coroot(0)(0), 2);
  EXPECT_TRUE(sl2.is_simply_connected());
  EXPECT_FALSE(pgl2.is_simply_connected());
  EXPECT_TRUE(pgl2.is_semisimple());
  EXPECT_FALSE(RootDatum::preset("GL2").is_semisimple());
}

TEST(RootData, CartanMatrices) {
  Eigen::MatrixXi a2(2, 2);
  a2 << 2, -1, -1, 2;
  EXPECT_EQ(RootDatum::preset("SL3").cartan(), a2);
  // the off-diagonal pair is {-1, -2} for B2 = C2 and {-1, -3} for G2
  const auto c2 = RootDatum::preset("Sp4").cartan();
  EXPECT_EQ(c2(0, 1) * c2(1, 0), 2);
  const auto g2 = RootDatum::preset("G2sc").cartan();
  EXPECT_EQ(g2(0, 1) * g2(1, 0), 3);
}

TEST(RootData, PairingAndReflectionClosure) {
  for (const auto& name : RootDatum::preset_names()) {
    const auto rd = RootDatum::preset(name);
    std::set<std::vector<int>> roots, coroots;
    for (int i = 0; i < rd.num_roots(); ++i) {
      EXPECT_EQ(pairing(rd.coroot(i), rd.root(i)), 2) << name;
      roots.insert(to_vector(rd.root(i)));
      coroots.insert(to_vector(rd.coroot(i)));
      // reduced: 2 alpha is never a root
      EXPECT_EQ(rd.find_root(Coord(2 * rd.root(i))), -1) << name;
    }
    for (int a = 0; a < rd.num_roots(); ++a) {
      for (int b = 0; b < rd.num_roots(); ++b) {
        EXPECT_TRUE(roots.count(to_vector(reflect_char(rd, a, rd.root(b))))) << name;
        EXPECT_TRUE(coroots.count(to_vector(reflect_cochar(rd, a, rd.coroot(b))))) << name;
      }
    }
  }
}

TEST(RootData, PositivityHalvesTheRoots) {
  for (const auto& name : RootDatum::preset_names()) {
    const auto rd = RootDatum::preset(name);
    int pos = 0;
    for (int i = 0; i < rd.num_roots(); ++i) {
      pos += rd.is_positive(i);
      EXPECT_NE(rd.is_positive(i), rd.is_positive(rd.negative_of(i)));
      EXPECT_TRUE(coord_equal(rd.root(rd.negative_of(i)), -rd.root(i)));
    }
    EXPECT_EQ(2 * pos, rd.num_roots());
  }
}

TEST(RootData, AffinePositivity) {
  const auto rd = RootDatum::preset("SL2");
  const int a = 0, na = rd.negative_of(0);
  EXPECT_TRUE(rd.is_positive_affine({a, 0}));
  EXPECT_TRUE(rd.is_positive_affine({na, 1}));
  EXPECT_FALSE(rd.is_positive_affine({na, 0}));
  EXPECT_FALSE(rd.is_positive_affine({a, -1}));
  EXPECT_TRUE(rd.is_positive_affine({na, 3}));
}

TEST(RootData, AffineSimpleRoots) {
  const auto sl2 = RootDatum::preset("SL2");
  const auto pi = sl2.pi_aff();
  ASSERT_EQ(pi.size(), 2u);
  EXPECT_EQ(pi[0], (AffineRoot{0, 0}));
  EXPECT_EQ(pi[1], (AffineRoot{sl2.negative_of(0), 1}));

  const auto sl3 = RootDatum::preset("SL3");
  const auto pi3 = sl3.pi_aff();
  ASSERT_EQ(pi3.size(), 3u);
  EXPECT_EQ(pi3[2].h, 1);
  EXPECT_TRUE(coord_equal(sl3.root(pi3[2].root), -(sl3.root(0) + sl3.root(1))));

  EXPECT_EQ(RootDatum::preset("SL2xSL2").pi_aff().size(), 4u);
}

TEST(RootData, OneMinimalRootPerComponent) {
  for (const auto& name : RootDatum::preset_names()) {
    const auto rd = RootDatum::preset(name);
    const auto mins = rd.minimal_roots();
    EXPECT_EQ(static_cast<int>(mins.size()), rd.num_components()) << name;
    EXPECT_EQ(static_cast<int>(rd.pi_aff().size()), rd.num_simple() + rd.num_components()) << name;
    for (int m : mins) {
      // minimal within its component under the dominance order
      for (int b = 0; b < rd.num_roots(); ++b) {
        if (rd.component_of(b) == rd.component_of(m)) EXPECT_TRUE(rd.precedes(m, b)) << name;
      }
    }
  }
}

TEST(RootData, ExplicitMatchesPreset) {
  const auto sl3 = RootDatum::preset("SL3");
  std::vector<Coord> roots, coroots;
  for (int i = 0; i < sl3.num_roots(); ++i) {
    roots.push_back(sl3.root(i));
    coroots.push_back(sl3.coroot(i));
  }
  const auto rd = RootDatum::from_explicit(2, roots, coroots, {0, 1});
  EXPECT_EQ(rd.num_roots(), 6);
  EXPECT_EQ(rd.cartan(), sl3.cartan());
}

TEST(RootData, Errors) {
  EXPECT_THROW(RootDatum::preset("E8"), RootDataError);
  // <alpha^vee, alpha> = 1 is not a root datum
  EXPECT_THROW(RootDatum::from_simple("bad", 1, {make_coord({1})}, {make_coord({1})}), RootDataError);
}
