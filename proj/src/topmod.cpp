#include "prohecke/topmod.hpp"

namespace prohecke {

TopModule::TopModule(std::shared_ptr<const HeckeAlgebra> hecke) : hecke_(std::move(hecke)) {
  if (!hecke_) throw GroupDataError("missing Hecke algebra");
}

TopElt TopModule::left_generator(int s, const TopElt& x) const {
  const auto& G = group();
  const auto& W = G.weyl();
  TopElt out = zero();
  for (const auto& [w, c] : x.terms()) {
    if (!W.is_descent(w.w, s, Side::kLeft)) continue;
    out.add_term(G.mul(G.lift_s(s), w), c);
    const FieldElt cm = c * hecke_->mu_size(s);
    if (cm.is_zero()) continue;
    for (const auto& t : hecke_->coroot_subgroup(s)) out.add_term(G.mul(G.torus(t), w), cm);
  }
  return out;
}

TopElt TopModule::right_generator(const TopElt& x, int s) const {
  const auto& G = group();
  const auto& W = G.weyl();
  TopElt out = zero();
  for (const auto& [w, c] : x.terms()) {
    if (!W.is_descent(w.w, s, Side::kRight)) continue;
    out.add_term(G.mul(w, G.lift_s(s)), c);
    const FieldElt cm = c * hecke_->mu_size(s);
    if (cm.is_zero()) continue;
    for (const auto& t : hecke_->coroot_subgroup(s)) out.add_term(G.mul(w, G.torus(t)), cm);
  }
  return out;
}

TopElt TopModule::act_word(const ProPElt& omega_tilde, const std::vector<int>& word, const TopElt& x,
                           Side side) const {
  const auto& G = group();
  TopElt cur = x;
  if (side == Side::kLeft) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = left_generator(*it, cur);
    TopElt out = zero();
    for (const auto& [w, c] : cur.terms()) out.add_term(G.mul(omega_tilde, w), c);
    return out;
  }
  TopElt shifted = zero();
  for (const auto& [w, c] : cur.terms()) shifted.add_term(G.mul(w, omega_tilde), c);
  for (int s : word) shifted = right_generator(shifted, s);
  return shifted;
}

TopElt TopModule::act(const HeckeElt& h, const TopElt& x, Side side) const {
  TopElt out = zero();
  for (const auto& [y, c] : h.terms()) {
    const ProPDecomposition& dec = hecke_->decompose(y);
    out += c * act_word(dec.omega_tilde, dec.word, x, side);
  }
  return out;
}

TopElt TopModule::J_top(const TopElt& x) const {
  TopElt out = zero();
  for (const auto& [w, c] : x.terms()) out.add_term(group().inv(w), c);
  return out;
}

FieldElt TopModule::pairing(const TopElt& x, const HeckeElt& h) const {
  FieldElt total = hecke_->field().zero();
  for (const auto& [w, c] : x.terms()) total += c * h.coeff(w);
  return total;
}

FieldElt TopModule::S_d(const TopElt& x) const {
  FieldElt total = hecke_->field().zero();
  for (const auto& [w, c] : x.terms()) total += c;
  return total;
}

std::vector<ProPElt> TopModule::omega_tilde() const {
  const auto& G = group();
  const auto omega = G.weyl().omega_group();
  if (!omega.finite) throw DecompositionUnavailable("Omega is infinite");
  std::vector<ProPElt> out;
  for (const auto& o : omega.elements) {
    for (const auto& t : G.torus_elements()) out.push_back(G.mul(G.torus(t), G.omega_lift(o)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TopDecomposition TopModule::decompose(const TopElt& x) const {
  const auto om = omega_tilde();
  FieldElt c = hecke_->field().zero();
  for (std::size_t i = 0; i < om.size(); ++i) c += hecke_->field().one();
  if (c.is_zero()) throw DecompositionUnavailable("|Omega~| vanishes in k");
  const FieldElt scale = S_d(x) / c;
  TopDecomposition out{zero(), zero()};
  for (const auto& w : om) out.triv.add_term(w, scale);
  out.kernel = x - out.triv;
  return out;
}

AuditReport TopModule::audit_supersingular_kernel(int max_len) const {
  const auto& G = group();
  const auto& W = G.weyl();
  const auto& rd = W.roots();
  if (!rd.is_simply_connected() || rd.num_components() != 1) {
    throw PreconditionError("the supersingular audit needs a simply connected group with irreducible root system");
  }
  AuditReport report;
  const Coord trivial = Coord::Zero(G.rank());
  for (const auto& w : W.enumerate(max_len)) {
    const int m = W.length(w);
    const ProPElt wt = G.lift_w(w);
    for (const auto& lambda : hecke_->torus_characters()) {
      if (m == 0 && coord_equal(lambda, trivial)) continue;
      for (Side side : {Side::kLeft, Side::kRight}) {
        AuditEntry e;
        e.m = m;
        e.lambda = lambda;
        e.w = wt;
        e.side = side;
        try {
          const AffineCharacter chi = hecke_->graded_support_char(lambda, wt, side);
          e.eps = chi.eps;
          e.supersingular = hecke_->classify_character(chi).is_supersingular;
          if (!e.supersingular) e.error = "character is not supersingular";
        } catch (const TheoremViolation& ex) {
          e.error = ex.what();
        }
        if (!e.error.empty()) ++report.failures;
        report.entries.push_back(std::move(e));
      }
    }
  }
  return report;
}

}  // namespace prohecke
