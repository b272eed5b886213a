#include "prohecke/cosets.hpp"

#include <cstdlib>
#include <stdexcept>

namespace prohecke {

CosetSupport CosetCalculus::support_mul(const ProPElt& v, const ProPElt& w, WordPolicy policy) const {
  const auto& G = *group_;
  const auto& W = G.weyl();
  const auto dec = G.decompose(v, policy);
  CosetSupport cur{w};
  for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it) {
    const int s = *it;
    const auto subgroup = G.coroot_image(W.pi_aff()[s].root).subgroup;
    CosetSupport next;
    for (const auto& z : cur) {
      next.insert(G.mul(G.lift_s(s), z));
      if (W.is_descent(z.w, s, Side::kLeft)) {
        for (const auto& t : subgroup) next.insert(G.mul(G.torus(t), z));
      }
    }
    cur = std::move(next);
  }
  CosetSupport out;
  for (const auto& z : cur) out.insert(G.mul(dec.omega_tilde, z));
  return out;
}

std::uint64_t CosetCalculus::index(const ProPElt& w) const {
  const int len = group_->length(w);
  const std::uint64_t q = static_cast<std::uint64_t>(group_->q());
  std::uint64_t out = 1;
  for (int i = 0; i < len; ++i) {
    if (out > UINT64_MAX / q) throw std::overflow_error("q^l(w) does not fit in 64 bits");
    out *= q;
  }
  return out;
}

GProfile CosetCalculus::g_profile(const ExtAffWeylElt& w) const {
  const auto& W = group_->weyl();
  const auto& rd = W.roots();
  const auto winv = W.inv(w);
  GProfile out;
  for (int a = 0; a < rd.num_roots(); ++a) {
    // Start at the least m with (alpha, m) positive; w^-1(alpha, m) has
    // height m - <mu', alpha>, so the scan ends within |<mu', alpha>| + 1 steps.
    int m = rd.is_positive(a) ? 0 : 1;
    const int limit = m + static_cast<int>(std::abs(pairing(winv.mu, rd.root(a)))) + 2;
    while (!rd.is_positive_affine(W.act(winv, {a, m}))) {
      if (++m > limit) throw std::logic_error("g-profile scan did not terminate");
    }
    out.values.push_back(m);
  }
  return out;
}

}  // namespace prohecke
