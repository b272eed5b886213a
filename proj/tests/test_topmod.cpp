#include "support.hpp"

using namespace prohecke;
using namespace prohecke::testing;

TEST(TopModule, RightGeneratorOnDescent) {
  const auto ctx = make("SL2", 3);
  const auto& E = *ctx.top;
  const auto& G = *ctx.group;
  const ProPElt n = G.lift_s(0);
  TopElt expect = E.phi(G.mul(n, n));
  for (const auto& t : G.coroot_image(0).subgroup) expect.add_term(G.mul(n, G.torus(t)), k(ctx, 1));
  EXPECT_EQ(expect.size(), 3u);
  EXPECT_EQ(E.act(ctx.hecke->tau(n), E.phi(n), Side::kRight), expect);
}

TEST(TopModule, GeneratorKillsAscents) {
  const auto ctx = make("SL3", 3);
  const auto& E = *ctx.top;
  const auto& W = *ctx.weyl;
  for (const auto& w : basis_elements(ctx, 2)) {
    for (int s = 0; s < W.num_simple_affine(); ++s) {
      const HeckeElt n = ctx.hecke->tau(ctx.group->lift_s(s));
      if (!W.is_descent(w.w, s, Side::kRight)) EXPECT_TRUE(E.act(n, E.phi(w), Side::kRight).is_zero());
      if (!W.is_descent(w.w, s, Side::kLeft)) EXPECT_TRUE(E.act(n, E.phi(w), Side::kLeft).is_zero());
    }
  }
}

TEST(TopModule, LengthZeroElementsPermuteTheBasis) {
  const auto ctx = make("PGL2", 5);
  const auto& E = *ctx.top;
  const auto& G = *ctx.group;
  const auto om = E.omega_tilde();
  EXPECT_EQ(om.size(), 8u);  // |T_q| * |Omega|
  for (const auto& o : om) {
    for (const auto& w : basis_elements(ctx, 2)) {
      EXPECT_EQ(E.act(ctx.hecke->tau(o), E.phi(w), Side::kLeft), E.phi(G.mul(o, w)));
      EXPECT_EQ(E.act(ctx.hecke->tau(o), E.phi(w), Side::kRight), E.phi(G.mul(w, o)));
    }
  }
}

TEST(TopModule, TraceValues) {
  const auto ctx = make("SL2", 3);
  const auto& E = *ctx.top;
  const auto& W = *ctx.weyl;
  EXPECT_TRUE(E.S_d(E.zero()).is_zero());
  for (const auto& w : basis_elements(ctx, 3)) {
    EXPECT_EQ(E.S_d(E.phi(w)), k(ctx, 1));
    for (int s = 0; s < 2; ++s) {
      if (!W.is_descent(w.w, s, Side::kLeft)) continue;
      // 1 + |mu| (q - 1) / |mu| = q = 0
      EXPECT_TRUE(E.S_d(E.left_generator(s, E.phi(w))).is_zero());
    }
  }
}

TEST(TopModule, JTopAndPairing) {
  const auto ctx = make("SL2", 5);
  const auto& E = *ctx.top;
  const auto& G = *ctx.group;
  const ProPElt n = G.lift_s(1);
  EXPECT_EQ(E.J_top(E.phi(G.identity())), E.phi(G.identity()));
  EXPECT_EQ(E.J_top(E.phi(n)), E.phi(G.inv(n)));
  const auto xs = basis_elements(ctx, 2);
  for (const auto& a : xs) {
    EXPECT_EQ(E.J_top(E.J_top(E.phi(a))), E.phi(a));
    for (const auto& b : xs) {
      EXPECT_EQ(E.pairing(E.phi(a), ctx.hecke->tau(b)), a == b ? k(ctx, 1) : k(ctx, 0));
    }
  }
  // pairing(phi_w . tau_t, tau_v) = pairing(phi_w, tau_v tau_{t^-1})
  for (const auto& t : G.torus_elements()) {
    const ProPElt o = G.torus(t);
    for (const auto& w : xs) {
      for (const auto& v : xs) {
        const auto lhs = E.pairing(E.act(ctx.hecke->tau(o), E.phi(w), Side::kRight), ctx.hecke->tau(v));
        const auto rhs = E.pairing(E.phi(w), ctx.hecke->mul(ctx.hecke->tau(v), ctx.hecke->tau(G.inv(o))));
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(TopModule, JTopIntertwinesActions) {
  const auto ctx = make("Sp4", 3);
  const auto& E = *ctx.top;
  const auto& H = *ctx.hecke;
  for (const auto& g : algebra_generators(ctx)) {
    for (const auto& w : basis_elements(ctx, 2)) {
      const TopElt x = E.phi(w);
      EXPECT_EQ(E.J_top(E.act(H.tau(g), x, Side::kLeft)), E.act(H.J(H.tau(g)), E.J_top(x), Side::kRight));
    }
  }
}

TEST(TopModule, DecomposeSl2) {
  const auto ctx = make("SL2", 3);
  const auto& E = *ctx.top;
  const auto d = E.decompose(E.phi(ctx.group->identity()));
  TopElt triv = E.zero();
  for (const auto& t : ctx.group->torus_elements()) triv.add_term(ctx.group->torus(t), k(ctx, -1));
  EXPECT_EQ(d.triv, triv);
  EXPECT_EQ(d.kernel, E.phi(ctx.group->identity()) - triv);

  const TopElt x = E.phi(ctx.group->lift_s(0)) - E.phi(ctx.group->lift_s(1));
  const auto d0 = E.decompose(x);
  EXPECT_TRUE(d0.triv.is_zero());
  EXPECT_EQ(d0.kernel, x);
}

TEST(TopModule, DecomposeRefusals) {
  const auto gl2 = make("GL2", 3);
  EXPECT_THROW(gl2.top->decompose(gl2.top->phi(gl2.group->identity())), DecompositionUnavailable);
  const auto pgl2 = make("PGL2", 2);
  EXPECT_THROW(pgl2.top->decompose(pgl2.top->phi(pgl2.group->identity())), DecompositionUnavailable);
  EXPECT_THROW(run_suite(pgl2, "decompose", {}), PreconditionError);
  const auto ok = make("PGL2", 3);
  EXPECT_NO_THROW(ok.top->decompose(ok.top->phi(ok.group->identity())));
}

TEST(TopModule, AuditPreconditions) {
  for (const char* name : {"GL2", "PGL2", "SL2xSL2"}) {
    const auto ctx = make(name, 3);
    EXPECT_THROW(ctx.top->audit_supersingular_kernel(1), PreconditionError) << name;
  }
}

TEST(TopModule, AuditSl2) {
  const auto ctx = make("SL2", 3);
  const auto rep = ctx.top->audit_supersingular_kernel(2);
  EXPECT_EQ(rep.failures, 0);
  bool saw_m0 = false;
  for (const auto& e : rep.entries) {
    EXPECT_TRUE(e.supersingular);
    if (e.m == 0) {
      saw_m0 = true;
      EXPECT_FALSE(coord_equal(e.lambda, make_coord({0})));
    }
  }
  EXPECT_TRUE(saw_m0);
}

TEST(TopModule, Suites) {
  for (const char* name : {"SL2", "PGL2", "GL2", "SL2xSL2"}) {
    const auto ctx = make(name, 3);
    expect_clean(run_suite(ctx, "bimodule", {2, 0, 1}));
    expect_clean(run_suite(ctx, "trace", {2, 0, 1}));
  }
  expect_clean(run_suite(make("SL2", 3), "duality", {3, 0, 1}));
  expect_clean(run_suite(make("GL2", 3), "duality", {2, 100, 2}));
  expect_clean(run_suite(make("SL3", 3), "decompose", {2, 0, 1}));
  expect_clean(run_suite(make("SL2", 5), "supersingular", {3, 0, 1}));
  expect_clean(run_suite(make("G2sc", 7), "supersingular", {2, 0, 1}));
}
