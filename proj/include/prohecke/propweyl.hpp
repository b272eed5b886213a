#pragma once

#include <memory>
#include <string>
#include <vector>

#include "prohecke/weyl.hpp"

namespace prohecke {

/// Element of T_q = X_* (x) F_q^x, written additively in exponents of a fixed
/// generator of F_q^x; entries live in [0, q-1).
using TorusElt = Coord;

/// t . n(w0) . pi_mu, where n(w0) is the Tits lift of w0 (product of the n_alpha
/// along any reduced word) and pi_mu = mu(pi^-1), so pi_mu maps to t_mu in W.
struct ProPElt {
  TorusElt t;
  ExtAffWeylElt w;

  friend bool operator==(const ProPElt& a, const ProPElt& b) { return coord_equal(a.t, b.t) && a.w == b.w; }
  friend std::strong_ordering operator<=>(const ProPElt& a, const ProPElt& b) {
    if (auto c = a.w <=> b.w; c != 0) return c;
    return lex_compare(a.t, b.t);
  }
};

struct ProPHash {
  std::size_t operator()(const ProPElt& x) const { return hash_coord(x.t, ExtAffWeylHash{}(x.w)); }
};

class GroupDataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CorootImage {
  std::vector<TorusElt> subgroup;  // sorted
  int mu_size = 1;
};

/// x = omega_tilde . n~_{word[0]} ... n~_{word[l-1]} with omega_tilde of length zero.
struct ProPDecomposition {
  ProPElt omega_tilde;
  std::vector<int> word;
};

/// How the lift of each affine simple reflection was obtained.
struct LiftRecord {
  int s = 0;
  TorusElt torus;            // torus part of the lift in the normal form
  bool torus_free = true;    // torus part is zero
  bool sign_corrected = false;
};

/// The pro-p Weyl group W~ = N(T)/T^1 for a root datum and residue field size q.
class ProPWeylGroup {
 public:
  ProPWeylGroup(std::shared_ptr<const AffineWeylGroup> weyl, int q);

  const AffineWeylGroup& weyl() const { return *weyl_; }
  std::shared_ptr<const AffineWeylGroup> weyl_ptr() const { return weyl_; }
  int q() const { return q_; }
  int rank() const { return weyl_->rank(); }
  /// Order of F_q^x, the modulus of torus exponents.
  int modulus() const { return q_ - 1; }

  ProPElt identity() const;
  ProPElt torus(const TorusElt& t) const;
  ProPElt mul(const ProPElt& x, const ProPElt& y) const;
  ProPElt inv(const ProPElt& x) const;
  int length(const ProPElt& x) const { return weyl_->length(x.w); }

  TorusElt reduce(const TorusElt& t) const { return reduce_mod(t, modulus()); }
  TorusElt torus_action(const ExtAffWeylElt& w, const TorusElt& t) const;
  /// The image of -1 under alpha^vee.
  TorusElt coroot_minus_one(int root) const;
  CorootImage coroot_image(int root) const;
  /// Every element of T_q, in lexicographic order.
  const std::vector<TorusElt>& torus_elements() const { return torus_elements_; }

  const ProPElt& lift_s(int s) const { return lifts_[s]; }
  const std::vector<LiftRecord>& lift_records() const { return records_; }
  /// Section over Omega: zero torus part in the normal form.
  ProPElt omega_lift(const ExtAffWeylElt& omega) const;
  /// n(w) := omega_lift(omega) . n~_{i1} ... n~_{il} along the canonical reduced word.
  ProPElt lift_w(const ExtAffWeylElt& w, WordPolicy policy = WordPolicy::kSmallestDescent) const;
  ProPElt lift_word(const ExtAffWeylElt& omega, const std::vector<int>& word) const;
  ProPDecomposition decompose(const ProPElt& x, WordPolicy policy = WordPolicy::kSmallestDescent) const;

  /// Braid relations among the n~_s that have finite order products; returns
  /// human-readable failures (empty when all hold).
  std::vector<std::string> check_braid_relations() const;

 private:
  TorusElt cocycle(int u, int v) const { return cocycle_[u * weyl_->finite().size() + v]; }
  void build_lifts();

  std::shared_ptr<const AffineWeylGroup> weyl_;
  int q_;
  std::vector<TorusElt> cocycle_;
  std::vector<TorusElt> torus_elements_;
  std::vector<ProPElt> lifts_;
  std::vector<LiftRecord> records_;
};

}  // namespace prohecke
