#include "support.hpp"

#include <random>

using namespace prohecke;
using namespace prohecke::testing;

namespace {

bool in_subgroup(const std::vector<TorusElt>& sub, const TorusElt& t) {
  for (const auto& u : sub) {
    if (coord_equal(u, t)) return true;
  }
  return false;
}

}  // namespace

TEST(ProPWeyl, TorusActionSl2) {
  const auto ctx = make("SL2", 5);
  const auto& G = *ctx.group;
  for (int e = 0; e < 4; ++e) {
    EXPECT_TRUE(coord_equal(G.torus_action(ctx.weyl->identity(), make_coord({e})), make_coord({e})));
    EXPECT_TRUE(coord_equal(G.torus_action(s(ctx, 0), make_coord({e})), G.reduce(make_coord({-e}))));
  }
  // translations act trivially
  EXPECT_TRUE(coord_equal(G.torus_action(ctx.weyl->translation(make_coord({3})), make_coord({1})), make_coord({1})));
}

TEST(ProPWeyl, CorootImages) {
  const auto sl2 = make("SL2", 3);
  auto img = sl2.group->coroot_image(0);
  EXPECT_EQ(img.mu_size, 1);
  EXPECT_EQ(img.subgroup.size(), 2u);

  const auto pgl2 = make("PGL2", 3);
  img = pgl2.group->coroot_image(0);
  EXPECT_EQ(img.mu_size, 2);
  EXPECT_EQ(img.subgroup.size(), 1u);

  EXPECT_EQ(make("PGL2", 2).group->coroot_image(0).mu_size, 1);
  EXPECT_EQ(make("PGL2", 5).group->coroot_image(0).subgroup.size(), 2u);
}

TEST(ProPWeyl, CorootImageOrderIsModulusOverMu) {
  for (const char* name : {"SL2", "PGL2", "GL2", "SL3", "Sp4", "G2sc"}) {
    for (int p : {2, 3, 5, 7}) {
      const auto ctx = make(name, p);
      const auto& rd = ctx.weyl->roots();
      for (int a = 0; a < rd.num_roots(); ++a) {
        const auto img = ctx.group->coroot_image(a);
        EXPECT_TRUE(img.mu_size == 1 || img.mu_size == 2);
        EXPECT_EQ(static_cast<int>(img.subgroup.size()) * img.mu_size, p - 1) << name << " p=" << p;
      }
    }
  }
}

TEST(ProPWeyl, GeneratorSquares) {
  for (int p : {2, 3, 5, 7}) {
    const auto ctx = make("SL2", p);
    const auto& G = *ctx.group;
    const int half = p == 2 ? 0 : (p - 1) / 2;
    for (int i = 0; i < 2; ++i) {
      const ProPElt n = G.lift_s(i);
      EXPECT_EQ(G.mul(n, n), torus(ctx, {half})) << "p=" << p;
      EXPECT_EQ(G.inv(n), elt(ctx, {-half}, s(ctx, i)));
      EXPECT_EQ(G.lift_word(ctx.weyl->identity(), {i, i}), torus(ctx, {half}));
    }
    EXPECT_EQ(G.lift_s(0), elt(ctx, {0}, s(ctx, 0)));
  }
}

TEST(ProPWeyl, SquaresAreCorootOfMinusOneEverywhere) {
  for (const auto& name : RootDatum::preset_names()) {
    for (int p : {2, 3, 5}) {
      const auto ctx = make(name, p);
      const auto& G = *ctx.group;
      for (int i = 0; i < ctx.weyl->num_simple_affine(); ++i) {
        const ProPElt n = G.lift_s(i);
        EXPECT_EQ(n.w, s(ctx, i));
        EXPECT_EQ(G.mul(n, n), G.torus(G.coroot_minus_one(ctx.weyl->pi_aff()[i].root))) << name << " p=" << p;
      }
      EXPECT_TRUE(G.check_braid_relations().empty()) << name << " p=" << p;
    }
  }
}

TEST(ProPWeyl, TorusMultiplicationAndInverse) {
  const auto ctx = make("SL3", 5);
  const auto& G = *ctx.group;
  const auto a = torus(ctx, {1, 3}), b = torus(ctx, {2, 2});
  EXPECT_EQ(G.mul(a, b), torus(ctx, {3, 1}));
  EXPECT_EQ(G.inv(a), torus(ctx, {3, 1}));
  EXPECT_EQ(G.inv(G.identity()), G.identity());
}

TEST(ProPWeyl, ConjugationOfTorusByLifts) {
  for (const char* name : {"SL2", "PGL2", "SL3", "Sp4", "GL2"}) {
    const auto ctx = make(name, 5);
    const auto& G = *ctx.group;
    for (int i = 0; i < ctx.weyl->num_simple_affine(); ++i) {
      const ProPElt n = G.lift_s(i);
      const auto& sub = G.coroot_image(ctx.weyl->pi_aff()[i].root).subgroup;
      for (const auto& t : G.torus_elements()) {
        const TorusElt st = G.torus_action(s(ctx, i), t);
        EXPECT_EQ(G.mul(G.mul(n, G.torus(t)), G.inv(n)), G.torus(st)) << name;
        EXPECT_TRUE(in_subgroup(sub, G.reduce(st - t))) << name;
      }
    }
  }
}

TEST(ProPWeyl, AssociativityExhaustiveShort) {
  for (const char* name : {"SL2", "SL3"}) {
    for (int p : {2, 3}) {
      const auto ctx = make(name, p);
      const auto& G = *ctx.group;
      const auto xs = basis_elements(ctx, 2);
      for (const auto& a : xs) {
        for (const auto& b : xs) {
          const ProPElt ab = G.mul(a, b);
          ASSERT_EQ(ab.w, ctx.weyl->mul(a.w, b.w));
          for (const auto& c : xs) ASSERT_EQ(G.mul(ab, c), G.mul(a, G.mul(b, c))) << name << " p=" << p;
        }
      }
    }
  }
}

TEST(ProPWeyl, AssociativityRandomLonger) {
  for (const char* name : {"Sp4", "G2sc", "PGL2", "GL2", "SL2xSL2"}) {
    const auto ctx = make(name, 5);
    const auto& G = *ctx.group;
    const auto xs = basis_elements(ctx, 5);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
    for (int i = 0; i < 400; ++i) {
      const auto &a = xs[pick(rng)], &b = xs[pick(rng)], &c = xs[pick(rng)];
      ASSERT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c))) << name;
      ASSERT_EQ(G.mul(a, G.inv(a)), G.identity());
      ASSERT_LE(G.length(G.mul(a, b)), G.length(a) + G.length(b));
    }
  }
}

TEST(ProPWeyl, LiftIndependentOfReducedWord) {
  for (const char* name : {"SL2", "SL3", "PGL2", "Sp4", "G2sc"}) {
    const auto ctx = make(name, 3);
    const auto& G = *ctx.group;
    for (const auto& w : ctx.weyl->enumerate(6)) {
      const ProPElt lift = G.lift_w(w);
      EXPECT_EQ(lift, G.lift_w(w, WordPolicy::kLargestDescent));
      const auto omega = ctx.weyl->reduced_word(w).omega;
      for (const auto& word : ctx.weyl->all_reduced_words(w)) ASSERT_EQ(G.lift_word(omega, word), lift) << name;
    }
  }
}

TEST(ProPWeyl, DecompositionRebuilds) {
  const auto ctx = make("Sp4", 3);
  const auto& G = *ctx.group;
  for (const auto& x : basis_elements(ctx, 3)) {
    const auto d = G.decompose(x);
    ProPElt y = d.omega_tilde;
    for (int i : d.word) y = G.mul(y, G.lift_s(i));
    ASSERT_EQ(y, x);
    EXPECT_EQ(G.length(d.omega_tilde), 0);
  }
}
