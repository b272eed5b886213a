#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prohecke/lattice.hpp"

namespace prohecke {

class RootDataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The affine root (alpha, h) = alpha(.) + h, alpha given by its index in the root list.
struct AffineRoot {
  int root = 0;
  int h = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

/// A reduced based root datum. Cocharacters are coordinates in a fixed basis of
/// X_* = Z^r; characters are their pairings against that basis, so <xi, chi>
/// is the dot product.
///
/// Roots are generated from the simple roots by closure under simple
/// reflections. Indices 0..|Pi|-1 are the simple roots, in input order.
class RootDatum {
 public:
  static RootDatum preset(std::string_view name);
  static const std::vector<std::string>& preset_names();

  /// Builds the datum spanned by the given simple roots and coroots.
  static RootDatum from_simple(std::string name, int rank, const std::vector<Coord>& simple_roots,
                               const std::vector<Coord>& simple_coroots);

  /// Builds from a full root list with simple indices; the list must coincide
  /// (as a set of root/coroot pairs) with the closure of the simple ones.
  static RootDatum from_explicit(int rank, const std::vector<Coord>& roots,
                                 const std::vector<Coord>& coroots, const std::vector<int>& simple);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_simple() const { return num_simple_; }
  const Coord& root(int i) const { return roots_[i]; }
  const Coord& coroot(int i) const { return coroots_[i]; }
  /// Coefficients of root i in the basis of simple roots.
  const Coord& simple_coeffs(int i) const { return simple_coeffs_[i]; }
  bool is_positive(int i) const { return positive_[i]; }
  int negative_of(int i) const { return negative_[i]; }
  int component_of(int i) const { return component_[i]; }
  int num_components() const { return num_components_; }
  /// Index of the root with these coordinates, or -1.
  int find_root(const Coord& chi) const;
  /// Index of the root whose coroot has these coordinates, or -1.
  int find_coroot(const Coord& xi) const;

  /// Cartan matrix A_ij = <alpha_i^vee, alpha_j> over the simple roots.
  Eigen::MatrixXi cartan() const;

  /// True iff beta - alpha is a nonnegative integer combination of simple roots.
  bool precedes(int alpha, int beta) const;

  bool is_positive_affine(const AffineRoot& a) const;
  AffineRoot negate(const AffineRoot& a) const { return {negative_[a.root], -a.h}; }

  /// Pi together with (theta_min, 1) for the minimal root of each component.
  std::vector<AffineRoot> pi_aff() const;
  /// Minimal root of each component (found by exhaustive comparison).
  std::vector<int> minimal_roots() const;

  /// True when the simple coroots form a basis of X_* (semisimple, simply connected).
  bool is_simply_connected() const;
  bool is_semisimple() const;

 private:
  std::string name_;
  int rank_ = 0;
  int num_simple_ = 0;
  std::vector<Coord> roots_, coroots_, simple_coeffs_;
  std::vector<bool> positive_;
  std::vector<int> negative_, component_;
  int num_components_ = 0;
};

}  // namespace prohecke
