#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "prohecke/combination.hpp"

namespace prohecke {

/// Raised when a numerically verified identity fails.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Character of H_aff: lambda on T_q (exponents of zeta_q against the torus
/// coordinates) and eps(s) in {0, -1} for each affine simple reflection.
struct AffineCharacter {
  Coord lambda;
  std::vector<int> eps;  // 0 or -1, indexed like pi_aff
};

struct CharacterVerdict {
  std::vector<bool> twisted_sign;     // per irreducible component
  std::vector<bool> twisted_trivial;  // per irreducible component
  bool is_supersingular = false;
};

enum class CharacterKind { kTrivial, kSign };

/// The pro-p Iwahori-Hecke algebra over k with basis tau_x, x in W~.
class HeckeAlgebra {
 public:
  HeckeAlgebra(std::shared_ptr<const ProPWeylGroup> group, std::shared_ptr<const GaloisField> field,
               WordPolicy policy = WordPolicy::kSmallestDescent);

  const ProPWeylGroup& group() const { return *group_; }
  std::shared_ptr<const ProPWeylGroup> group_ptr() const { return group_; }
  const AffineWeylGroup& weyl() const { return group_->weyl(); }
  const GaloisField& field() const { return *field_; }
  std::shared_ptr<const GaloisField> field_ptr() const { return field_; }
  WordPolicy policy() const { return policy_; }

  HeckeElt zero() const { return HeckeElt(field_.get()); }
  HeckeElt one() const { return tau(group_->identity()); }
  HeckeElt tau(const ProPElt& x) const { return HeckeElt::basis(field_.get(), x); }
  HeckeElt theta(int s) const;
  /// |mu_alpha^vee| reduced into k.
  FieldElt mu_size(int s) const;
  const std::vector<TorusElt>& coroot_subgroup(int s) const { return coroot_subgroups_[s]; }

  /// Canonical decomposition x = omega~ n~_{i1} ... n~_{il} (memoized).
  const ProPDecomposition& decompose(const ProPElt& x) const;

  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt mul_basis(const ProPElt& x, const ProPElt& y) const;
  /// tau_{n~_s} . a and a . tau_{n~_s}.
  HeckeElt left_generator(int s, const HeckeElt& a) const;
  HeckeElt right_generator(const HeckeElt& a, int s) const;

  /// Value lambda(t) = zeta_q^{<lambda, t>}.
  FieldElt character_value(const Coord& lambda, const TorusElt& t) const;
  /// All characters of T_q in lexicographic order.
  const std::vector<Coord>& torus_characters() const { return group_->torus_elements(); }
  /// ^w lambda = lambda o w^-1.
  Coord weyl_act_character(const ExtAffWeylElt& w, const Coord& lambda) const;
  std::vector<Coord> character_orbit(const Coord& lambda) const;
  bool trivial_on_coroot_image(const Coord& lambda, int root) const;

  /// |T_q|^-1 sum_t lambda(t^-1) tau_t.
  HeckeElt e_lambda(const Coord& lambda) const;
  HeckeElt e_gamma(const std::vector<Coord>& orbit) const;

  HeckeElt iota(const HeckeElt& a) const;
  HeckeElt J(const HeckeElt& a) const;
  FieldElt chi_eval(CharacterKind which, const HeckeElt& a) const;

  /// Checks the eps/lambda consistency condition; throws on violation.
  void validate(const AffineCharacter& c) const;
  CharacterVerdict classify_character(const AffineCharacter& c) const;

  HeckeElt filtration_project(const HeckeElt& a, int n) const;
  /// Eigencharacter of the graded class of e_lambda tau_w (left) or
  /// tau_w e_lambda (right) in F^m / F^{m+1}, m = l(w); verified against every
  /// generator tau_t, tau_{n~_s}. Throws TheoremViolation on mismatch.
  AffineCharacter graded_support_char(const Coord& lambda, const ProPElt& w, Side side) const;

 private:
  HeckeElt iota_basis(const ProPElt& x) const;
  void add_left_generator(int s, const ProPElt& z, const FieldElt& c, HeckeElt& out) const;
  void add_right_generator(const ProPElt& z, const FieldElt& c, int s, HeckeElt& out) const;

  struct PairHash {
    std::size_t operator()(const std::pair<ProPElt, ProPElt>& p) const {
      return hash_combine(ProPHash{}(p.first), ProPHash{}(p.second));
    }
  };

  std::shared_ptr<const ProPWeylGroup> group_;
  std::shared_ptr<const GaloisField> field_;
  WordPolicy policy_;
  std::vector<std::vector<TorusElt>> coroot_subgroups_;
  std::vector<FieldElt> mu_sizes_;
  std::vector<FieldElt> zeta_powers_;
  FieldElt torus_order_inv_;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<ProPElt, ProPDecomposition, ProPHash> decomp_cache_;
  mutable std::unordered_map<std::pair<ProPElt, ProPElt>, HeckeElt, PairHash> product_cache_;
  mutable std::unordered_map<ProPElt, HeckeElt, ProPHash> iota_cache_;
};

}  // namespace prohecke
