#include "prohecke/propweyl.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace prohecke {

ProPWeylGroup::ProPWeylGroup(std::shared_ptr<const AffineWeylGroup> weyl, int q) : weyl_(std::move(weyl)), q_(q) {
  if (!weyl_) throw GroupDataError("missing Weyl group");
  if (q < 2) throw GroupDataError("residue field size must be at least 2");
  const auto& w0 = weyl_->finite();
  const int n = w0.size(), r = rank();

  // n(u) n(v) = c(u, v) n(uv): append the simple lifts of v one at a time;
  // a length drop contributes (u s)(beta^vee(-1)) since n_beta^2 = beta^vee(-1).
  cocycle_.resize(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      TorusElt acc = TorusElt::Zero(r);
      int cur = u;
      for (int beta : w0.word(v)) {
        const int us = w0.mul(cur, w0.generator(beta));
        if (w0.length(us) < w0.length(cur)) acc += w0.act_cochar(us, coroot_minus_one(beta));
        cur = us;
      }
      cocycle_[u * n + v] = reduce(acc);
    }
  }

  std::int64_t count = 1;
  for (int i = 0; i < r; ++i) count *= modulus();
  if (count > 1'000'000) throw GroupDataError("torus T_q too large to enumerate");
  TorusElt t = TorusElt::Zero(r);
  for (std::int64_t k = 0; k < count; ++k) {
    torus_elements_.push_back(t);
    for (int i = r - 1; i >= 0; --i) {
      if (++t[i] < modulus()) break;
      t[i] = 0;
    }
  }
  build_lifts();
}

ProPElt ProPWeylGroup::identity() const { return {TorusElt::Zero(rank()), weyl_->identity()}; }

ProPElt ProPWeylGroup::torus(const TorusElt& t) const {
  if (t.size() != rank()) throw GroupDataError("torus element has wrong rank");
  return {reduce(t), weyl_->identity()};
}

ProPElt ProPWeylGroup::mul(const ProPElt& x, const ProPElt& y) const {
  const auto& w0 = weyl_->finite();
  TorusElt t = x.t + w0.act_cochar(x.w.w0, y.t) + cocycle(x.w.w0, y.w.w0);
  return {reduce(t), weyl_->mul(x.w, y.w)};
}

ProPElt ProPWeylGroup::inv(const ProPElt& x) const {
  const auto& w0 = weyl_->finite();
  const int wi = w0.inv(x.w.w0);
  TorusElt t = -w0.act_cochar(wi, x.t + cocycle(x.w.w0, wi));
  return {reduce(t), weyl_->inv(x.w)};
}

TorusElt ProPWeylGroup::torus_action(const ExtAffWeylElt& w, const TorusElt& t) const {
  return reduce(weyl_->finite().act_cochar(w.w0, t));
}

TorusElt ProPWeylGroup::coroot_minus_one(int root) const {
  const Coord& c = weyl_->roots().coroot(root);
  if (q_ % 2 == 0) return TorusElt::Zero(rank());
  return reduce(c * ((q_ - 1) / 2));
}

CorootImage ProPWeylGroup::coroot_image(int root) const {
  const Coord& c = weyl_->roots().coroot(root);
  std::set<TorusElt, decltype([](const TorusElt& a, const TorusElt& b) { return lex_compare(a, b) < 0; })> seen;
  CorootImage out;
  out.mu_size = 0;
  for (int e = 0; e < modulus(); ++e) {
    TorusElt t = reduce(c * e);
    if ((t.array() == 0).all()) ++out.mu_size;
    seen.insert(t);
  }
  if (out.mu_size != 1 && out.mu_size != 2) {
    throw GroupDataError("kernel of a coroot on F_q^x has order " + std::to_string(out.mu_size));
  }
  out.subgroup.assign(seen.begin(), seen.end());
  return out;
}

ProPElt ProPWeylGroup::omega_lift(const ExtAffWeylElt& omega) const { return {TorusElt::Zero(rank()), omega}; }

ProPElt ProPWeylGroup::lift_word(const ExtAffWeylElt& omega, const std::vector<int>& word) const {
  ProPElt x = omega_lift(omega);
  for (int s : word) x = mul(x, lifts_.at(s));
  return x;
}

ProPElt ProPWeylGroup::lift_w(const ExtAffWeylElt& w, WordPolicy policy) const {
  const auto rw = weyl_->reduced_word(w, policy);
  return lift_word(rw.omega, rw.word);
}

ProPDecomposition ProPWeylGroup::decompose(const ProPElt& x, WordPolicy policy) const {
  const auto rw = weyl_->reduced_word(x.w, policy);
  ProPElt tail = identity();
  for (int s : rw.word) tail = mul(tail, lifts_[s]);
  return {mul(x, inv(tail)), rw.word};
}

void ProPWeylGroup::build_lifts() {
  const auto& W = *weyl_;
  const auto& w0 = W.finite();
  const auto& rd = W.roots();
  const int r = rank();
  auto finite_lift = [&](int u) { return ProPElt{TorusElt::Zero(r), W.finite_elt(u)}; };

  for (int s = 0; s < W.num_simple_affine(); ++s) {
    const AffineRoot a = W.pi_aff()[s];
    LiftRecord rec;
    rec.s = s;
    ProPElt x;
    if (a.h == 0 && a.root < rd.num_simple()) {
      x = finite_lift(w0.generator(a.root));
    } else {
      // n_alpha for a non-simple root: conjugate a simple n_beta by n(u) with
      // u(beta) = alpha. Different choices must agree up to the image of alpha^vee.
      const auto image = coroot_image(a.root).subgroup;
      std::optional<ProPElt> chosen;
      for (int u = 0; u < w0.size(); ++u) {
        for (int beta = 0; beta < rd.num_simple(); ++beta) {
          if (w0.act_root(u, beta) != a.root) continue;
          const ProPElt nu = finite_lift(u);
          ProPElt cand = mul(mul(nu, finite_lift(w0.generator(beta))), inv(nu));
          if (cand.w != W.finite_elt(w0.reflection(a.root))) {
            throw GroupDataError("conjugated lift does not project to the reflection");
          }
          if (!chosen) {
            chosen = cand;
          } else {
            const TorusElt diff = reduce(cand.t - chosen->t);
            if (!std::binary_search(image.begin(), image.end(), diff,
                                    [](const TorusElt& l, const TorusElt& rr) { return lex_compare(l, rr) < 0; })) {
              throw GroupDataError("lifts of a reflection disagree outside the coroot image");
            }
          }
        }
      }
      if (!chosen) throw GroupDataError("affine root is not W0-conjugate to a simple root");
      x = *chosen;
      if (std::binary_search(image.begin(), image.end(), x.t,
                             [](const TorusElt& l, const TorusElt& rr) { return lex_compare(l, rr) < 0; })) {
        x.t = TorusElt::Zero(r);
      }
      x = mul(x, ProPElt{TorusElt::Zero(r), W.translation(a.h * rd.coroot(a.root))});
    }
    if (x.w != W.simple_reflection(s)) throw GroupDataError("lift does not project to its reflection");
    const ProPElt sq = mul(x, x);
    if (!(sq == torus(coroot_minus_one(a.root)))) throw GroupDataError("lift squares to the wrong torus element");
    rec.torus = x.t;
    rec.torus_free = (x.t.array() == 0).all();
    lifts_.push_back(x);
    records_.push_back(rec);
  }

  if (!check_braid_relations().empty()) {
    // Adjust signs of the non-simple lifts by alpha^vee(-1) until braids hold.
    std::vector<int> adjustable;
    for (int s = 0; s < W.num_simple_affine(); ++s) {
      if (W.pi_aff()[s].h != 0) adjustable.push_back(s);
    }
    const auto base = lifts_;
    const int combos = 1 << adjustable.size();
    for (int mask = 1; mask < combos; ++mask) {
      lifts_ = base;
      for (std::size_t i = 0; i < adjustable.size(); ++i) {
        if (mask & (1 << i)) {
          const int s = adjustable[i];
          lifts_[s] = mul(torus(coroot_minus_one(W.pi_aff()[s].root)), lifts_[s]);
        }
      }
      if (check_braid_relations().empty()) {
        for (std::size_t i = 0; i < adjustable.size(); ++i) {
          const int s = adjustable[i];
          records_[s].sign_corrected = (mask & (1 << i)) != 0;
          records_[s].torus = lifts_[s].t;
          records_[s].torus_free = (lifts_[s].t.array() == 0).all();
        }
        return;
      }
    }
    lifts_ = base;
  }
}

std::vector<std::string> ProPWeylGroup::check_braid_relations() const {
  const auto& W = *weyl_;
  std::vector<std::string> failures;
  constexpr int kMaxOrder = 12;
  const int n = W.num_simple_affine();
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      const auto st = W.mul(W.simple_reflection(s), W.simple_reflection(t));
      // Order m of st; the braid relation has m letters on each side.
      int m = 0;
      auto p = W.identity();
      for (int k = 1; k <= kMaxOrder; ++k) {
        p = W.mul(p, st);
        if (p == W.identity()) {
          m = k;
          break;
        }
      }
      if (m == 0) continue;
      ProPElt a = identity(), b = identity();
      for (int k = 0; k < m; ++k) {
        a = mul(a, lifts_[k % 2 == 0 ? s : t]);
        b = mul(b, lifts_[k % 2 == 0 ? t : s]);
      }
      if (!(a == b)) {
        failures.push_back("braid relation fails for s" + std::to_string(s) + ", s" + std::to_string(t));
      }
    }
  }
  return failures;
}

}  // namespace prohecke
