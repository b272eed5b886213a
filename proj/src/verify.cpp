#include "prohecke/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace prohecke {

using nlohmann::json;

namespace {

constexpr std::size_t kKeptFailures = 20;
constexpr int kCharacterCheckLength = 6;

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

std::string show(const Context& ctx, const ProPElt& x) { return to_json(ctx, x).dump(); }

/// Runs body(i, j) over all pairs, or over `samples` random pairs.
void for_pairs(std::size_t n, int samples, Rng& rng, const std::function<void(std::size_t, std::size_t)>& body) {
  if (samples == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) body(i, j);
    }
    return;
  }
  for (int k = 0; k < samples; ++k) body(pick(rng, n), pick(rng, n));
}

HeckeElt tau(const Context& ctx, const ProPElt& x) { return ctx.hecke->tau(x); }

// ---------------------------------------------------------------- hecke ----

SuiteReport suite_assoc(const Context& ctx, const VerifyOptions& opt, Rng& rng) {
  SuiteReport rep;
  const auto& H = *ctx.hecke;
  const HeckeAlgebra reversed(ctx.group, ctx.field, WordPolicy::kLargestDescent);
  const auto basis = basis_elements(ctx, opt.max_len);
  rep.details["basis_size"] = basis.size();

  auto check_triple = [&](const ProPElt& a, const ProPElt& b, const ProPElt& c) {
    ++rep.cases;
    const HeckeElt lhs = H.mul(H.mul_basis(a, b), tau(ctx, c));
    const HeckeElt rhs = H.mul(tau(ctx, a), H.mul_basis(b, c));
    rep.check(lhs == rhs, "(ab)c != a(bc) for a=" + show(ctx, a) + " b=" + show(ctx, b) + " c=" + show(ctx, c));
  };
  const std::size_t n = basis.size();
  if (opt.samples == 0) {
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        for (const auto& c : basis) check_triple(a, b, c);
      }
    }
  } else {
    for (int k = 0; k < opt.samples; ++k) check_triple(basis[pick(rng, n)], basis[pick(rng, n)], basis[pick(rng, n)]);
  }

  const auto& G = *ctx.group;
  for_pairs(n, opt.samples, rng, [&](std::size_t i, std::size_t j) {
    const ProPElt &a = basis[i], &b = basis[j];
    ++rep.cases;
    const HeckeElt p = H.mul_basis(a, b);
    rep.check(p == reversed.mul_basis(a, b), "product depends on the reduced-word tie-break for " + show(ctx, a) +
                                                 " * " + show(ctx, b));
    if (G.length(G.mul(a, b)) == G.length(a) + G.length(b)) {
      rep.check(p == tau(ctx, G.mul(a, b)), "length-additive product is not tau_{ab}");
    }
  });
  for (const auto& a : basis) {
    ++rep.cases;
    rep.check(H.mul(H.one(), tau(ctx, a)) == tau(ctx, a) && H.mul(tau(ctx, a), H.one()) == tau(ctx, a),
              "unit law fails for " + show(ctx, a));
  }
  return rep;
}

SuiteReport suite_quadratic(const Context& ctx, const VerifyOptions&, Rng&) {
  SuiteReport rep;
  const auto& H = *ctx.hecke;
  for (int s = 0; s < ctx.weyl->num_simple_affine(); ++s) {
    ++rep.cases;
    const HeckeElt n = tau(ctx, ctx.group->lift_s(s));
    const HeckeElt theta = H.theta(s);
    const HeckeElt sq = H.mul(n, n);
    rep.check((sq + H.mul(theta, n)).is_zero(), "tau_n^2 + theta tau_n != 0 for s" + std::to_string(s));
    rep.check((sq + H.mul(n, theta)).is_zero(), "tau_n^2 + tau_n theta != 0 for s" + std::to_string(s));
    rep.check(H.mul(theta, theta) == theta, "theta_s is not idempotent for s" + std::to_string(s));
  }
  return rep;
}

SuiteReport suite_matsumoto(const Context& ctx, const VerifyOptions& opt, Rng&) {
  SuiteReport rep;
  const auto& W = *ctx.weyl;
  const auto& G = *ctx.group;
  const auto& H = *ctx.hecke;
  const auto& E = *ctx.top;
  const auto probes = basis_elements(ctx, std::min(opt.max_len, 1));
  long long words = 0;
  for (const auto& w : W.enumerate(opt.max_len)) {
    const auto canonical = W.reduced_word(w);
    const ProPElt lift = G.lift_w(w);
    const HeckeElt tau_lift = tau(ctx, lift);
    for (const auto& word : W.all_reduced_words(w)) {
      ++rep.cases;
      ++words;
      const std::string where = "w=" + to_json(ctx, w).dump();
      const ProPElt along = G.lift_word(canonical.omega, word);
      rep.check(along == lift, "pro-p lift depends on the reduced word at " + where);
      const ProPElt om = G.omega_lift(canonical.omega);

      HeckeElt prod = tau(ctx, om);
      for (int s : word) prod = H.mul(prod, tau(ctx, G.lift_s(s)));
      rep.check(prod == tau_lift, "product of generators differs from tau of the lift at " + where);

      for (const auto& v : probes) {
        HeckeElt left = tau(ctx, v);
        for (auto it = word.rbegin(); it != word.rend(); ++it) left = H.left_generator(*it, left);
        left = H.mul(tau(ctx, om), left);
        rep.check(left == H.mul(tau_lift, tau(ctx, v)), "left Hecke action depends on the word at " + where);

        HeckeElt right = H.mul(tau(ctx, v), tau(ctx, om));
        for (int s : word) right = H.right_generator(right, s);
        rep.check(right == H.mul(tau(ctx, v), tau_lift), "right Hecke action depends on the word at " + where);

        for (Side side : {Side::kLeft, Side::kRight}) {
          const TopElt a = E.act_word(om, word, E.phi(v), side);
          const TopElt b = E.act(tau_lift, E.phi(v), side);
          rep.check(a == b, "E^d action depends on the word at " + where);
        }
      }
    }
  }
  rep.details["reduced_words"] = words;
  return rep;
}

SuiteReport suite_involutions(const Context& ctx, const VerifyOptions& opt, Rng& rng) {
  SuiteReport rep;
  const auto& H = *ctx.hecke;
  const auto basis = basis_elements(ctx, opt.max_len);
  for (const auto& x : basis) {
    ++rep.cases;
    const HeckeElt t = tau(ctx, x);
    rep.check(H.iota(H.iota(t)) == t, "iota^2 != id on " + show(ctx, x));
    rep.check(H.J(H.J(t)) == t, "J^2 != id on " + show(ctx, x));
    rep.check(H.iota(H.J(t)) == H.J(H.iota(t)), "iota J != J iota on " + show(ctx, x));
  }
  for_pairs(basis.size(), opt.samples, rng, [&](std::size_t i, std::size_t j) {
    ++rep.cases;
    const HeckeElt a = tau(ctx, basis[i]), b = tau(ctx, basis[j]);
    const HeckeElt ab = H.mul(a, b);
    const std::string where = show(ctx, basis[i]) + ", " + show(ctx, basis[j]);
    rep.check(H.iota(ab) == H.mul(H.iota(a), H.iota(b)), "iota is not multiplicative on " + where);
    rep.check(H.J(ab) == H.mul(H.J(b), H.J(a)), "J is not anti-multiplicative on " + where);
    for (CharacterKind k : {CharacterKind::kTrivial, CharacterKind::kSign}) {
      rep.check(H.chi_eval(k, ab) == H.chi_eval(k, a) * H.chi_eval(k, b), "character not multiplicative on " + where);
    }
  });
  for (const auto& x : basis_elements(ctx, kCharacterCheckLength)) {
    ++rep.cases;
    const HeckeElt t = tau(ctx, x);
    rep.check(H.chi_eval(CharacterKind::kSign, t) == H.chi_eval(CharacterKind::kTrivial, H.iota(t)),
              "chi_sign != chi_triv o iota on " + show(ctx, x));
  }
  return rep;
}

SuiteReport suite_idempotents(const Context& ctx, const VerifyOptions& opt, Rng&) {
  SuiteReport rep;
  const auto& H = *ctx.hecke;
  const auto& G = *ctx.group;
  const auto& W = *ctx.weyl;
  const auto& chars = H.torus_characters();
  std::vector<HeckeElt> e;
  for (const auto& l : chars) e.push_back(H.e_lambda(l));

  HeckeElt sum = H.zero();
  for (const auto& x : e) sum += x;
  ++rep.cases;
  rep.check(sum == H.one(), "sum of e_lambda is not 1");
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      ++rep.cases;
      rep.check(H.mul(e[i], e[j]) == (i == j ? e[i] : H.zero()), "e_lambda e_mu != delta e_lambda");
    }
  }
  ++rep.cases;
  const HeckeElt e1 = H.e_lambda(Coord::Zero(G.rank()));
  rep.check(H.chi_eval(CharacterKind::kTrivial, e1).is_one() && H.chi_eval(CharacterKind::kSign, e1).is_one(),
            "chi_triv(e_1) or chi_sign(e_1) != 1");

  for (std::size_t i = 0; i < chars.size(); ++i) {
    const std::string lam = json(to_vector(chars[i])).dump();
    for (const auto& t : G.torus_elements()) {
      ++rep.cases;
      const HeckeElt tt = tau(ctx, G.torus(t));
      const HeckeElt expect = H.character_value(chars[i], t) * e[i];
      rep.check(H.mul(e[i], tt) == expect && H.mul(tt, e[i]) == expect, "e_lambda tau_t != lambda(t) e_lambda, " + lam);
    }
    for (int s = 0; s < W.num_simple_affine(); ++s) {
      ++rep.cases;
      const bool trivial = H.trivial_on_coroot_image(chars[i], W.pi_aff()[s].root);
      rep.check(H.mul(e[i], H.theta(s)) == (trivial ? e[i] : H.zero()), "e_lambda theta_s wrong, " + lam);
    }
  }

  for (const auto& w : basis_elements(ctx, opt.max_len)) {
    for (std::size_t i = 0; i < chars.size(); ++i) {
      ++rep.cases;
      const HeckeElt tw = tau(ctx, w);
      const HeckeElt lhs = H.mul(tw, e[i]);
      const HeckeElt rhs = H.mul(H.e_lambda(H.weyl_act_character(w.w, chars[i])), tw);
      rep.check(lhs == rhs, "tau_w e_lambda != e_{w lambda} tau_w for w=" + show(ctx, w));
    }
  }

  std::vector<std::vector<Coord>> orbits;
  std::vector<Coord> seen;
  for (const auto& l : chars) {
    if (std::any_of(seen.begin(), seen.end(), [&](const Coord& c) { return coord_equal(c, l); })) continue;
    auto orbit = H.character_orbit(l);
    seen.insert(seen.end(), orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  rep.details["orbits"] = orbits.size();
  const auto gens = algebra_generators(ctx);
  for (const auto& orbit : orbits) {
    const HeckeElt eg = H.e_gamma(orbit);
    for (const auto& g : gens) {
      ++rep.cases;
      rep.check(H.mul(eg, tau(ctx, g)) == H.mul(tau(ctx, g), eg), "e_gamma does not commute with " + show(ctx, g));
    }
  }
  return rep;
}

// --------------------------------------------------------------- topmod ----

SuiteReport suite_bimodule(const Context& ctx, const VerifyOptions& opt, Rng&) {
  SuiteReport rep;
  const auto& H = *ctx.hecke;
  const auto& E = *ctx.top;
  const auto& W = *ctx.weyl;
  const auto& G = *ctx.group;
  const auto gens = algebra_generators(ctx);
  const auto basis = basis_elements(ctx, opt.max_len);
  for (const auto& w : basis) {
    const TopElt phi = E.phi(w);
    const std::string where = " on phi_" + show(ctx, w);
    for (const auto& a : gens) {
      const HeckeElt ta = tau(ctx, a);
      for (const auto& b : gens) {
        ++rep.cases;
        const HeckeElt tb = tau(ctx, b);
        const HeckeElt ab = H.mul(ta, tb);
        rep.check(E.act(ab, phi, Side::kLeft) == E.act(ta, E.act(tb, phi, Side::kLeft), Side::kLeft),
                  "left action not associative" + where);
        rep.check(E.act(ab, phi, Side::kRight) == E.act(tb, E.act(ta, phi, Side::kRight), Side::kRight),
                  "right action not associative" + where);
        rep.check(E.act(tb, E.act(ta, phi, Side::kLeft), Side::kRight) ==
                      E.act(ta, E.act(tb, phi, Side::kRight), Side::kLeft),
                  "left and right actions do not commute" + where);
      }
    }
    for (int s = 0; s < W.num_simple_affine(); ++s) {
      ++rep.cases;
      const HeckeElt n = tau(ctx, G.lift_s(s));
      const HeckeElt quad = -H.mul(H.theta(s), n);
      for (Side side : {Side::kLeft, Side::kRight}) {
        rep.check(E.act(n, E.act(n, phi, side), side) == E.act(quad, phi, side),
                  "quadratic relation fails on E^d for s" + std::to_string(s) + where);
      }
      for (int t = s + 1; t < W.num_simple_affine(); ++t) {
        const auto st = W.mul(W.simple_reflection(s), W.simple_reflection(t));
        int m = 0;
        auto p = W.identity();
        for (int k = 1; k <= 12 && m == 0; ++k) {
          p = W.mul(p, st);
          if (p == W.identity()) m = k;
        }
        if (m == 0) continue;
        ++rep.cases;
        for (Side side : {Side::kLeft, Side::kRight}) {
          TopElt x = phi, y = phi;
          for (int k = 0; k < m; ++k) {
            const int a = k % 2 == 0 ? s : t, b = k % 2 == 0 ? t : s;
            x = side == Side::kLeft ? E.left_generator(a, x) : E.right_generator(x, a);
            y = side == Side::kLeft ? E.left_generator(b, y) : E.right_generator(y, b);
          }
          rep.check(x == y, "braid relation fails on E^d" + where);
        }
      }
    }
  }
  return rep;
}

SuiteReport suite_duality(const Context& ctx, const VerifyOptions& opt, Rng& rng) {
  SuiteReport rep;
  const auto& H = *ctx.hecke;
  const auto& E = *ctx.top;
  const auto phis = basis_elements(ctx, opt.max_len);
  const auto taus = basis_elements(ctx, std::max(0, opt.max_len - 1));

  auto check = [&](const ProPElt& a, const ProPElt& b, const ProPElt& w) {
    ++rep.cases;
    const TopElt y = E.act(tau(ctx, b), E.act(tau(ctx, a), E.phi(w), Side::kLeft), Side::kRight);
    const HeckeElt ja = H.J(tau(ctx, a)), jb = H.J(tau(ctx, b));
    std::vector<ProPElt> probes = taus;
    for (const auto& [u, c] : y.terms()) probes.push_back(u);
    for (const auto& u : probes) {
      const FieldElt lhs = E.pairing(y, tau(ctx, u));
      const FieldElt rhs = E.pairing(E.phi(w), H.mul(H.mul(ja, tau(ctx, u)), jb));
      rep.check(lhs == rhs, "adjunction fails for tau=" + show(ctx, a) + " tau'=" + show(ctx, b) + " phi=" +
                                show(ctx, w) + " tau''=" + show(ctx, u));
    }
  };
  if (opt.samples == 0) {
    for (const auto& a : taus) {
      for (const auto& b : taus) {
        for (const auto& w : phis) check(a, b, w);
      }
    }
  } else {
    for (int k = 0; k < opt.samples; ++k) {
      check(taus[pick(rng, taus.size())], taus[pick(rng, taus.size())], phis[pick(rng, phis.size())]);
    }
  }
  return rep;
}

SuiteReport suite_trace(const Context& ctx, const VerifyOptions& opt, Rng& rng) {
  SuiteReport rep;
  const auto& H = *ctx.hecke;
  const auto& E = *ctx.top;
  const auto gens = algebra_generators(ctx);
  const auto basis = basis_elements(ctx, opt.max_len);
  for (const auto& w : basis) {
    const TopElt phi = E.phi(w);
    rep.check(E.S_d(phi).is_one(), "S_d(phi_w) != 1");
    rep.check(E.S_d(E.J_top(phi)) == E.S_d(phi), "S_d o J_top != S_d on phi_" + show(ctx, w));
    for (const auto& g : gens) {
      ++rep.cases;
      const HeckeElt tg = tau(ctx, g);
      const FieldElt expect = H.chi_eval(CharacterKind::kTrivial, tg) * E.S_d(phi);
      rep.check(E.S_d(E.act(tg, phi, Side::kLeft)) == expect, "S_d(tau x) != chi_triv(tau) S_d(x)");
      rep.check(E.S_d(E.act(tg, phi, Side::kRight)) == expect, "S_d(x tau) != chi_triv(tau) S_d(x)");
    }
  }
  const int combos = opt.samples == 0 ? 50 : opt.samples;
  for (int k = 0; k < combos; ++k) {
    ++rep.cases;
    TopElt x = E.zero();
    for (int i = 0; i < 4; ++i) {
      x.add_term(basis[pick(rng, basis.size())], ctx.field->element(static_cast<std::uint32_t>(pick(rng, ctx.field->order()))));
    }
    rep.check(E.S_d(E.J_top(x)) == E.S_d(x), "S_d o J_top != S_d on a combination");
    rep.check(E.J_top(E.J_top(x)) == x, "J_top is not an involution");
  }
  return rep;
}

SuiteReport suite_decompose(const Context& ctx, const VerifyOptions& opt, Rng& rng) {
  SuiteReport rep;
  const auto& H = *ctx.hecke;
  const auto& E = *ctx.top;
  const auto om = E.omega_tilde();  // throws when Omega is infinite
  {
    FieldElt c = ctx.field->zero();
    for (std::size_t i = 0; i < om.size(); ++i) c += ctx.field->one();
    if (c.is_zero()) throw DecompositionUnavailable("|Omega~| vanishes in k");
    rep.details["omega_tilde_size"] = om.size();
  }
  const auto gens = algebra_generators(ctx);
  const auto basis = basis_elements(ctx, opt.max_len);
  std::vector<TopElt> inputs;
  for (const auto& w : basis) inputs.push_back(E.phi(w));
  const int combos = opt.samples == 0 ? 50 : opt.samples;
  for (int k = 0; k < combos; ++k) {
    TopElt x = E.zero();
    for (int i = 0; i < 3; ++i) {
      x.add_term(basis[pick(rng, basis.size())], ctx.field->element(static_cast<std::uint32_t>(pick(rng, ctx.field->order()))));
    }
    inputs.push_back(x);
  }
  for (const auto& x : inputs) {
    ++rep.cases;
    const auto d = E.decompose(x);
    rep.check(d.triv + d.kernel == x, "triv + kernel != x");
    rep.check(E.S_d(d.kernel).is_zero(), "S_d(kernel) != 0");
    const auto dt = E.decompose(d.triv);
    const auto dk = E.decompose(d.kernel);
    rep.check(dt.triv == d.triv && dt.kernel.is_zero(), "decompose is not idempotent on the trivial part");
    rep.check(dk.triv.is_zero() && dk.kernel == d.kernel, "decompose is not idempotent on the kernel");
    for (const auto& g : gens) {
      const HeckeElt tg = tau(ctx, g);
      const FieldElt chi = H.chi_eval(CharacterKind::kTrivial, tg);
      for (Side side : {Side::kLeft, Side::kRight}) {
        rep.check(E.act(tg, d.triv, side) == chi * d.triv, "H does not act on the trivial line by chi_triv");
        rep.check(E.S_d(E.act(tg, d.kernel, side)).is_zero(), "H does not preserve ker S_d");
      }
    }
  }
  return rep;
}

SuiteReport suite_supersingular(const Context& ctx, const VerifyOptions& opt, Rng&) {
  SuiteReport rep;
  const AuditReport audit = ctx.top->audit_supersingular_kernel(opt.max_len);
  json entries = json::array();
  for (const auto& e : audit.entries) {
    ++rep.cases;
    rep.check(e.error.empty(), "m=" + std::to_string(e.m) + " lambda=" + json(to_vector(e.lambda)).dump() +
                                   " w=" + show(ctx, e.w) + ": " + e.error);
    entries.push_back(json{{"m", e.m},
                           {"lambda", to_vector(e.lambda)},
                           {"w", to_json(ctx, e.w)},
                           {"side", e.side == Side::kLeft ? "left" : "right"},
                           {"eps", e.eps},
                           {"verdict", e.supersingular ? "supersingular" : "not supersingular"}});
  }
  rep.details["entries"] = entries;
  return rep;
}

// --------------------------------------------------------------- cosets ----

SuiteReport suite_cosets(const Context& ctx, const VerifyOptions& opt, Rng& rng) {
  SuiteReport rep;
  const auto& H = *ctx.hecke;
  const auto& G = *ctx.group;
  const auto& C = *ctx.cosets;
  const auto basis = basis_elements(ctx, opt.max_len);
  for_pairs(basis.size(), opt.samples, rng, [&](std::size_t i, std::size_t j) {
    ++rep.cases;
    const ProPElt &v = basis[i], &w = basis[j];
    const std::string where = " for v=" + show(ctx, v) + " w=" + show(ctx, w);
    const CosetSupport supp = C.support_mul(v, w);
    const HeckeElt vw = H.mul_basis(v, w);
    for (const auto& [u, c] : vw.terms()) {
      rep.check(supp.count(u) == 1, "Hecke support escapes the coset support" + where);
    }
    const int lv = G.length(v), lw = G.length(w);
    for (const auto& u : supp) {
      const int lu = G.length(u);
      rep.check(std::abs(lw - lv) <= lu && lu <= lv + lw, "length bounds violated" + where);
    }
    rep.check(supp == C.support_mul(v, w, WordPolicy::kLargestDescent), "coset support depends on the word" + where);
  });
  for (const auto& w : basis) {
    ++rep.cases;
    std::uint64_t expect = 1;
    for (int i = 0; i < G.length(w); ++i) expect *= static_cast<std::uint64_t>(G.q());
    rep.check(C.index(w) == expect, "index != q^l(w)");
  }
  return rep;
}

SuiteReport suite_gprofile(const Context& ctx, const VerifyOptions& opt, Rng&) {
  SuiteReport rep;
  const auto& W = *ctx.weyl;
  const auto& rd = W.roots();
  const auto& C = *ctx.cosets;
  const auto elements = W.enumerate(opt.max_len);
  const GProfile gid = C.g_profile(W.identity());
  for (int a = 0; a < rd.num_roots(); ++a) {
    rep.check(gid.values[a] == (rd.is_positive(a) ? 0 : 1), "g_1 differs from f_C");
  }
  std::vector<GProfile> profiles;
  for (const auto& w : elements) profiles.push_back(C.g_profile(w));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& w = elements[i];
    const std::string where = " at w=" + to_json(ctx, w).dump();
    ++rep.cases;
    long long sum = 0;
    for (int a = 0; a < rd.num_roots(); ++a) sum += profiles[i].values[a] - gid.values[a];
    rep.check(sum == W.length(w), "g-profile sum differs from the length" + where);
    for (int s = 0; s < W.num_simple_affine(); ++s) {
      const auto ws = W.mul(w, W.simple_reflection(s));
      if (W.length(ws) != W.length(w) + 1) continue;
      ++rep.cases;
      const int beta = W.act(w, W.pi_aff()[s]).root;
      const GProfile next = C.g_profile(ws);
      for (int a = 0; a < rd.num_roots(); ++a) {
        const int expect = profiles[i].values[a] + (a == beta ? 1 : 0);
        rep.check(next.values[a] == expect, "one-step growth law fails" + where + " s=" + std::to_string(s));
      }
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const auto vw = W.mul(elements[i], elements[j]);
      if (W.length(vw) != W.length(elements[i]) + W.length(elements[j])) continue;
      ++rep.cases;
      const GProfile g = C.g_profile(vw);
      for (int a = 0; a < rd.num_roots(); ++a) {
        rep.check(g.values[a] >= profiles[i].values[a], "monotonicity fails for v=" + to_json(ctx, elements[i]).dump() +
                                                             " w=" + to_json(ctx, elements[j]).dump());
      }
    }
  }
  return rep;
}

// ----------------------------------------------------------------- weyl ----

SuiteReport suite_lemma_even(const Context& ctx, const VerifyOptions& opt, Rng&) {
  SuiteReport rep;
  const auto& W = *ctx.weyl;
  for (int u = 0; u < W.finite().size(); ++u) {
    ++rep.cases;
    const auto r = W.lemma_even(W.finite_elt(u));
    rep.check(r.parity_ok, "N + l odd on W0 element " + to_json(ctx, W.finite_elt(u)).dump());
  }
  // Elements outside W_aff are checked too; the failures there are real
  // (length-zero elements of Omega can have odd N) and are also listed.
  json outside = json::array();
  for (const auto& w : W.enumerate(opt.max_len)) {
    ++rep.cases;
    const auto r = W.lemma_even(w);
    const bool affine = W.in_affine_part(w);
    if (!r.parity_ok && !affine) {
      outside.push_back(json{{"w", to_json(ctx, w)}, {"N", r.orbits_stable_under_negation}, {"length", r.length}});
    }
    rep.check(r.parity_ok, "N + l odd at " + to_json(ctx, w).dump() + (affine ? "" : " (outside W_aff)"));
  }
  rep.details["odd_outside_affine_part"] = outside;
  return rep;
}

SuiteReport suite_length_oracle(const Context& ctx, const VerifyOptions& opt, Rng& rng) {
  SuiteReport rep;
  const auto& W = *ctx.weyl;
  const auto& rd = W.roots();
  const auto elements = W.enumerate(opt.max_len);
  const auto omega = W.omega_group();
  for (const auto& w : elements) {
    ++rep.cases;
    const std::string where = " at " + to_json(ctx, w).dump();
    const int len = W.length(w);
    rep.check(len == brute_force_length(W, w), "closed-form length differs from the brute-force count" + where);
    rep.check(len == W.length(W.inv(w)), "l(w) != l(w^-1)" + where);
    const auto rw = W.reduced_word(w);
    auto rebuilt = rw.omega;
    for (int s : rw.word) rebuilt = W.mul(rebuilt, W.simple_reflection(s));
    rep.check(rebuilt == w && static_cast<int>(rw.word.size()) == len && W.length(rw.omega) == 0,
              "reduced word does not rebuild w" + where);
    for (int s = 0; s < W.num_simple_affine(); ++s) {
      const int expect = rd.is_positive_affine(W.act(w, W.pi_aff()[s])) ? len + 1 : len - 1;
      rep.check(W.length(W.mul(w, W.simple_reflection(s))) == expect, "exchange rule fails" + where);
    }
    for (const auto& o : omega.elements) {
      rep.check(W.length(W.mul(o, w)) == len && W.length(W.mul(w, o)) == len, "length not Omega-invariant" + where);
    }
  }
  const int triples = opt.samples == 0 ? 200 : opt.samples;
  for (int k = 0; k < triples; ++k) {
    ++rep.cases;
    const auto& v = elements[pick(rng, elements.size())];
    const auto& w = elements[pick(rng, elements.size())];
    const AffineRoot a{static_cast<int>(pick(rng, rd.num_roots())), static_cast<int>(pick(rng, 7)) - 3};
    rep.check(W.act(W.mul(v, w), a) == W.act(v, W.act(w, a)), "affine action is not a group action");
    rep.check(W.length(W.mul(v, w)) <= W.length(v) + W.length(w), "length is not subadditive");
  }
  return rep;
}

using SuiteFn = SuiteReport (*)(const Context&, const VerifyOptions&, Rng&);

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table = {
      {"assoc", suite_assoc},
      {"quadratic", suite_quadratic},
      {"matsumoto", suite_matsumoto},
      {"involutions", suite_involutions},
      {"idempotents", suite_idempotents},
      {"bimodule", suite_bimodule},
      {"duality", suite_duality},
      {"trace", suite_trace},
      {"decompose", suite_decompose},
      {"supersingular", suite_supersingular},
      {"cosets", suite_cosets},
      {"gprofile", suite_gprofile},
      {"lemma_even", suite_lemma_even},
      {"length_oracle", suite_length_oracle},
  };
  return table;
}

}  // namespace

void SuiteReport::check(bool condition, const std::string& message) {
  if (condition) return;
  ++failure_count;
  if (failures.size() < kKeptFailures) failures.push_back(message);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const Context& ctx, const std::string& suite, const VerifyOptions& options) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw ParseError("unknown suite '" + suite + "'");
  Rng rng(options.seed);
  SuiteReport rep = it->second(ctx, options, rng);
  rep.suite = suite;
  rep.seed = options.seed;
  return rep;
}

json report_json(const SuiteReport& r) {
  return json{{"suite", r.suite},
              {"seed", r.seed},
              {"cases", r.cases},
              {"failure_count", r.failure_count},
              {"failures", r.failures},
              {"details", r.details}};
}

std::vector<ProPElt> basis_elements(const Context& ctx, int max_len) {
  std::vector<ProPElt> out;
  for (const auto& w : ctx.weyl->enumerate(max_len)) {
    for (const auto& t : ctx.group->torus_elements()) out.push_back(ProPElt{t, w});
  }
  return out;
}

std::vector<ProPElt> algebra_generators(const Context& ctx) {
  const auto& G = *ctx.group;
  std::vector<ProPElt> out;
  for (const auto& t : G.torus_elements()) out.push_back(G.torus(t));
  for (int s = 0; s < ctx.weyl->num_simple_affine(); ++s) out.push_back(G.lift_s(s));
  for (const auto& o : ctx.weyl->omega_group().generators) {
    out.push_back(G.omega_lift(o));
    out.push_back(G.inv(G.omega_lift(o)));
  }
  return out;
}

int brute_force_length(const AffineWeylGroup& W, const ExtAffWeylElt& w) {
  const auto& rd = W.roots();
  std::int64_t bound = 2;
  for (int a = 0; a < rd.num_roots(); ++a) bound = std::max(bound, std::abs(pairing(w.mu, rd.root(a))) + 2);
  int count = 0;
  for (int a = 0; a < rd.num_roots(); ++a) {
    for (std::int64_t h = -bound; h <= bound; ++h) {
      const AffineRoot A{a, static_cast<int>(h)};
      if (rd.is_positive_affine(A) && !rd.is_positive_affine(W.act(w, A))) ++count;
    }
  }
  return count;
}

}  // namespace prohecke
