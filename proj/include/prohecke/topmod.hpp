#pragma once

#include <memory>
#include <string>
#include <vector>

#include "prohecke/hecke.hpp"

namespace prohecke {

/// An operation was asked for outside the setting where it is defined.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DecompositionUnavailable : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct TopDecomposition {
  TopElt triv;
  TopElt kernel;
};

struct AuditEntry {
  int m = 0;
  Coord lambda;
  ProPElt w;
  Side side = Side::kLeft;
  std::vector<int> eps;
  bool supersingular = false;
  std::string error;  // eigencheck failure, empty if the check passed
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  int failures = 0;
};

/// The top Ext-space E^d in the basis phi_w dual to tau_w, as an H-bimodule.
class TopModule {
 public:
  explicit TopModule(std::shared_ptr<const HeckeAlgebra> hecke);

  const HeckeAlgebra& hecke() const { return *hecke_; }
  const ProPWeylGroup& group() const { return hecke_->group(); }

  TopElt zero() const { return TopElt(&hecke_->field()); }
  TopElt phi(const ProPElt& w) const { return TopElt::basis(&hecke_->field(), w); }

  /// tau_{n~_s} . x and x . tau_{n~_s}.
  TopElt left_generator(int s, const TopElt& x) const;
  TopElt right_generator(const TopElt& x, int s) const;
  TopElt act(const HeckeElt& h, const TopElt& x, Side side) const;
  /// Acts by tau_omega~ tau_{n~_{i1}} ... along the given word instead of the canonical one.
  TopElt act_word(const ProPElt& omega_tilde, const std::vector<int>& word, const TopElt& x, Side side) const;

  TopElt J_top(const TopElt& x) const;
  FieldElt pairing(const TopElt& x, const HeckeElt& h) const;
  FieldElt S_d(const TopElt& x) const;

  /// Length-zero elements of W~ (torus times Omega); requires Omega finite.
  std::vector<ProPElt> omega_tilde() const;
  TopDecomposition decompose(const TopElt& x) const;

  /// Supersingularity of the graded pieces e_lambda tau_w, both sides, for
  /// lengths 0..max_len (lambda != 1 when the length is 0).
  AuditReport audit_supersingular_kernel(int max_len) const;

 private:
  std::shared_ptr<const HeckeAlgebra> hecke_;
};

}  // namespace prohecke
