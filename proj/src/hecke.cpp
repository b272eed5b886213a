#include "prohecke/hecke.hpp"

#include <algorithm>
#include <set>

namespace prohecke {

namespace {

constexpr std::size_t kProductCacheLimit = 1u << 21;

bool coord_less(const Coord& a, const Coord& b) { return lex_compare(a, b) < 0; }

}  // namespace

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const ProPWeylGroup> group, std::shared_ptr<const GaloisField> field,
                           WordPolicy policy)
    : group_(std::move(group)), field_(std::move(field)), policy_(policy) {
  if (!group_ || !field_) throw GroupDataError("missing group or field");
  if (field_->q() != group_->q()) {
    throw GroupDataError("residue field size of the group differs from the field's q");
  }
  const auto& W = group_->weyl();
  for (int s = 0; s < W.num_simple_affine(); ++s) {
    const auto img = group_->coroot_image(W.pi_aff()[s].root);
    coroot_subgroups_.push_back(img.subgroup);
    mu_sizes_.push_back(field_->from_int(img.mu_size));
  }
  const FieldElt zeta = field_->zeta_q();
  FieldElt z = field_->one();
  for (int i = 0; i < group_->modulus(); ++i) {
    zeta_powers_.push_back(z);
    z *= zeta;
  }
  torus_order_inv_ = field_->from_int(group_->modulus()).pow(group_->rank()).inverse();
}

FieldElt HeckeAlgebra::mu_size(int s) const { return mu_sizes_.at(s); }

HeckeElt HeckeAlgebra::theta(int s) const {
  HeckeElt out = zero();
  const FieldElt c = -mu_sizes_.at(s);
  for (const auto& t : coroot_subgroups_[s]) out.add_term(group_->torus(t), c);
  return out;
}

const ProPDecomposition& HeckeAlgebra::decompose(const ProPElt& x) const {
  std::lock_guard lock(cache_mutex_);
  auto it = decomp_cache_.find(x);
  if (it != decomp_cache_.end()) return it->second;
  return decomp_cache_.emplace(x, group_->decompose(x, policy_)).first->second;
}

void HeckeAlgebra::add_left_generator(int s, const ProPElt& z, const FieldElt& c, HeckeElt& out) const {
  const auto& W = group_->weyl();
  if (!W.is_descent(z.w, s, Side::kLeft)) {
    out.add_term(group_->mul(group_->lift_s(s), z), c);
    return;
  }
  // tau_n tau_z = -theta_s tau_z when s z is shorter.
  const FieldElt cm = c * mu_sizes_[s];
  if (cm.is_zero()) return;
  for (const auto& t : coroot_subgroups_[s]) out.add_term(group_->mul(group_->torus(t), z), cm);
}

void HeckeAlgebra::add_right_generator(const ProPElt& z, const FieldElt& c, int s, HeckeElt& out) const {
  const auto& W = group_->weyl();
  if (!W.is_descent(z.w, s, Side::kRight)) {
    out.add_term(group_->mul(z, group_->lift_s(s)), c);
    return;
  }
  const FieldElt cm = c * mu_sizes_[s];
  if (cm.is_zero()) return;
  for (const auto& t : coroot_subgroups_[s]) out.add_term(group_->mul(z, group_->torus(t)), cm);
}

HeckeElt HeckeAlgebra::left_generator(int s, const HeckeElt& a) const {
  HeckeElt out = zero();
  for (const auto& [z, c] : a.terms()) add_left_generator(s, z, c, out);
  return out;
}

HeckeElt HeckeAlgebra::right_generator(const HeckeElt& a, int s) const {
  HeckeElt out = zero();
  for (const auto& [z, c] : a.terms()) add_right_generator(z, c, s, out);
  return out;
}

HeckeElt HeckeAlgebra::mul_basis(const ProPElt& x, const ProPElt& y) const {
  const auto key = std::make_pair(x, y);
  {
    std::lock_guard lock(cache_mutex_);
    auto it = product_cache_.find(key);
    if (it != product_cache_.end()) return it->second;
  }
  const ProPDecomposition& dec = decompose(x);
  HeckeElt cur = tau(y);
  for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it) cur = left_generator(*it, cur);
  HeckeElt out = zero();
  for (const auto& [z, c] : cur.terms()) out.add_term(group_->mul(dec.omega_tilde, z), c);

  std::lock_guard lock(cache_mutex_);
  if (product_cache_.size() >= kProductCacheLimit) product_cache_.clear();
  product_cache_.emplace(key, out);
  return out;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt out = zero();
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      const FieldElt c = cx * cy;
      const HeckeElt xy = mul_basis(x, y);
      for (const auto& [z, cz] : xy.terms()) out.add_term(z, c * cz);
    }
  }
  return out;
}

FieldElt HeckeAlgebra::character_value(const Coord& lambda, const TorusElt& t) const {
  const std::int64_t n = group_->modulus();
  std::int64_t e = pairing(lambda, t) % n;
  if (e < 0) e += n;
  return zeta_powers_[static_cast<std::size_t>(e)];
}

Coord HeckeAlgebra::weyl_act_character(const ExtAffWeylElt& w, const Coord& lambda) const {
  return reduce_mod(group_->weyl().finite().act_char(w.w0, lambda), group_->modulus());
}

std::vector<Coord> HeckeAlgebra::character_orbit(const Coord& lambda) const {
  const auto& W = group_->weyl();
  std::vector<Coord> out;
  for (int u = 0; u < W.finite().size(); ++u) out.push_back(weyl_act_character(W.finite_elt(u), lambda));
  std::sort(out.begin(), out.end(), coord_less);
  out.erase(std::unique(out.begin(), out.end(), [](const Coord& a, const Coord& b) { return coord_equal(a, b); }),
            out.end());
  return out;
}

bool HeckeAlgebra::trivial_on_coroot_image(const Coord& lambda, int root) const {
  return pairing(group_->weyl().roots().coroot(root), lambda) % group_->modulus() == 0;
}

HeckeElt HeckeAlgebra::e_lambda(const Coord& lambda) const {
  if (lambda.size() != group_->rank()) throw GroupDataError("character has wrong rank");
  HeckeElt out = zero();
  for (const auto& t : group_->torus_elements()) {
    out.add_term(group_->torus(t), torus_order_inv_ * character_value(lambda, group_->reduce(-t)));
  }
  return out;
}

HeckeElt HeckeAlgebra::e_gamma(const std::vector<Coord>& orbit) const {
  HeckeElt out = zero();
  for (const auto& lambda : orbit) out += e_lambda(lambda);
  return out;
}

HeckeElt HeckeAlgebra::iota_basis(const ProPElt& x) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = iota_cache_.find(x);
    if (it != iota_cache_.end()) return it->second;
  }
  const ProPDecomposition& dec = decompose(x);
  HeckeElt r = tau(dec.omega_tilde);
  for (int s : dec.word) {
    // r . (-tau_n - theta_s) = -r tau_n + |mu| sum_t r tau_t
    HeckeElt next = -right_generator(r, s);
    for (const auto& [u, cu] : r.terms()) {
      const FieldElt cm = cu * mu_sizes_[s];
      for (const auto& t : coroot_subgroups_[s]) next.add_term(group_->mul(u, group_->torus(t)), cm);
    }
    r = std::move(next);
  }
  std::lock_guard lock(cache_mutex_);
  if (iota_cache_.size() >= kProductCacheLimit) iota_cache_.clear();
  iota_cache_.emplace(x, r);
  return r;
}

HeckeElt HeckeAlgebra::iota(const HeckeElt& a) const {
  HeckeElt out = zero();
  for (const auto& [x, c] : a.terms()) {
    const HeckeElt ix = iota_basis(x);
    for (const auto& [z, cz] : ix.terms()) out.add_term(z, c * cz);
  }
  return out;
}

HeckeElt HeckeAlgebra::J(const HeckeElt& a) const {
  HeckeElt out = zero();
  for (const auto& [x, c] : a.terms()) out.add_term(group_->inv(x), c);
  return out;
}

FieldElt HeckeAlgebra::chi_eval(CharacterKind which, const HeckeElt& a) const {
  FieldElt total = field_->zero();
  for (const auto& [x, c] : a.terms()) {
    const int len = group_->length(x);
    if (which == CharacterKind::kTrivial) {
      if (len == 0) total += c;
    } else {
      total += (len % 2 == 0) ? c : -c;
    }
  }
  return total;
}

void HeckeAlgebra::validate(const AffineCharacter& c) const {
  const auto& W = group_->weyl();
  if (c.lambda.size() != group_->rank()) throw GroupDataError("character lambda has wrong rank");
  if (static_cast<int>(c.eps.size()) != W.num_simple_affine()) {
    throw GroupDataError("character eps must have one value per affine simple reflection");
  }
  for (int s = 0; s < W.num_simple_affine(); ++s) {
    if (c.eps[s] != 0 && c.eps[s] != -1) throw GroupDataError("eps values must be 0 or -1");
    if (c.eps[s] == -1 && !trivial_on_coroot_image(c.lambda, W.pi_aff()[s].root)) {
      throw GroupDataError("eps(s) = -1 requires lambda trivial on the coroot image of s");
    }
  }
}

CharacterVerdict HeckeAlgebra::classify_character(const AffineCharacter& c) const {
  validate(c);
  const auto& W = group_->weyl();
  const auto& rd = W.roots();
  const int nc = rd.num_components();
  CharacterVerdict v;
  v.twisted_sign.assign(nc, true);
  v.twisted_trivial.assign(nc, true);
  for (int s = 0; s < W.num_simple_affine(); ++s) {
    const int i = W.component_of_simple(s);
    if (c.eps[s] != -1) v.twisted_sign[i] = false;
    if (c.eps[s] != 0) v.twisted_trivial[i] = false;
  }
  for (int a = 0; a < rd.num_simple(); ++a) {
    if (!trivial_on_coroot_image(c.lambda, a)) v.twisted_trivial[rd.component_of(a)] = false;
  }
  v.is_supersingular = true;
  for (int i = 0; i < nc; ++i) {
    if (v.twisted_sign[i] || v.twisted_trivial[i]) v.is_supersingular = false;
  }
  return v;
}

HeckeElt HeckeAlgebra::filtration_project(const HeckeElt& a, int n) const {
  HeckeElt out = zero();
  for (const auto& [x, c] : a.terms()) {
    if (group_->length(x) >= n) out.add_term(x, c);
  }
  return out;
}

AffineCharacter HeckeAlgebra::graded_support_char(const Coord& lambda, const ProPElt& w, Side side) const {
  const auto& W = group_->weyl();
  const int m = group_->length(w);
  const bool left = side == Side::kLeft;
  const HeckeElt x = left ? mul(e_lambda(lambda), tau(w)) : mul(tau(w), e_lambda(lambda));
  if (x.is_zero()) throw TheoremViolation("graded class vanishes");

  AffineCharacter chi{lambda, std::vector<int>(W.num_simple_affine(), 0)};
  for (int s = 0; s < W.num_simple_affine(); ++s) {
    if (W.is_descent(w.w, s, side) && trivial_on_coroot_image(lambda, W.pi_aff()[s].root)) chi.eps[s] = -1;
  }

  auto graded_part = [&](const HeckeElt& y, const std::string& what) {
    HeckeElt out = zero();
    for (const auto& [z, c] : y.terms()) {
      const int len = group_->length(z);
      if (len < m) throw TheoremViolation(what + " leaves the filtration step");
      if (len == m) out.add_term(z, c);
    }
    return out;
  };
  for (const auto& t : group_->torus_elements()) {
    const HeckeElt g = tau(group_->torus(t));
    const HeckeElt y = left ? mul(g, x) : mul(x, g);
    if (!(graded_part(y, "tau_t") == character_value(lambda, t) * x)) {
      throw TheoremViolation("torus generator does not act by lambda(t)");
    }
  }
  for (int s = 0; s < W.num_simple_affine(); ++s) {
    const HeckeElt y = left ? left_generator(s, x) : right_generator(x, s);
    const FieldElt expect = chi.eps[s] == -1 ? -field_->one() : field_->zero();
    if (!(graded_part(y, "tau_n") == expect * x)) {
      throw TheoremViolation("generator s" + std::to_string(s) + " does not act by the predicted eigenvalue");
    }
  }
  return chi;
}

}  // namespace prohecke
