#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "prohecke/rootdata.hpp"

namespace prohecke {

/// The finite Weyl group W0 enumerated as integer matrices acting on X_*.
/// Element 0 is the identity; generator i is the reflection in simple root i.
class FiniteWeylTable {
 public:
  explicit FiniteWeylTable(const RootDatum& rd);

  int size() const { return static_cast<int>(matrices_.size()); }
  static constexpr int identity() { return 0; }
  int generator(int i) const { return generators_[i]; }
  int mul(int a, int b) const { return mul_[a * size() + b]; }
  int inv(int a) const { return inv_[a]; }
  int length(int a) const { return length_[a]; }
  /// Reduced word in simple reflections (BFS-shortest, built by right multiplication).
  const std::vector<int>& word(int a) const { return word_[a]; }
  const CoordMatrix& matrix(int a) const { return matrices_[a]; }
  /// Index of w(root).
  int act_root(int a, int root) const { return root_perm_[a * num_roots_ + root]; }
  /// Index of the reflection s_beta.
  int reflection(int root) const { return reflection_[root]; }
  int from_word(const std::vector<int>& word) const;

  Coord act_cochar(int a, const Coord& xi) const { return matrices_[a] * xi; }
  /// Contragredient action on characters: (w chi)(xi) = chi(w^-1 xi).
  Coord act_char(int a, const Coord& chi) const { return matrices_[inv_[a]].transpose() * chi; }

 private:
  int find(const CoordMatrix& m) const;

  int num_roots_ = 0;
  std::vector<CoordMatrix> matrices_;
  std::vector<int> generators_, mul_, inv_, length_, root_perm_, reflection_;
  std::vector<std::vector<int>> word_;
};

/// w = w0 . t_mu: x -> w0(x + mu). Any pair is a valid element of W = W0 x| Lambda.
struct ExtAffWeylElt {
  int w0 = 0;
  Coord mu;

  friend bool operator==(const ExtAffWeylElt& a, const ExtAffWeylElt& b) {
    return a.w0 == b.w0 && coord_equal(a.mu, b.mu);
  }
  friend std::strong_ordering operator<=>(const ExtAffWeylElt& a, const ExtAffWeylElt& b) {
    if (auto c = a.w0 <=> b.w0; c != 0) return c;
    return lex_compare(a.mu, b.mu);
  }
};

struct ExtAffWeylHash {
  std::size_t operator()(const ExtAffWeylElt& w) const { return hash_coord(w.mu, static_cast<std::size_t>(w.w0)); }
};

enum class Side { kLeft, kRight };

/// Tie-break for canonical reduced words: which right descent is stripped first.
enum class WordPolicy { kSmallestDescent, kLargestDescent };

struct ReducedWord {
  ExtAffWeylElt omega;   // length zero
  std::vector<int> word;  // indices into S_aff; w = omega . s_{word[0]} ... s_{word[l-1]}
};

struct OmegaGroup {
  bool finite = true;
  /// Invariant factors > 1 of Lambda / coroot lattice.
  std::vector<std::int64_t> torsion;
  int free_rank = 0;
  /// Generators of Omega (one per nontrivial invariant factor, then the free part).
  std::vector<ExtAffWeylElt> generators;
  /// All elements when finite; otherwise free exponents in [-radius, radius] times the torsion part.
  std::vector<ExtAffWeylElt> elements;
};

struct LemmaEvenResult {
  int orbits_stable_under_negation = 0;
  int length = 0;
  bool parity_ok = false;
};

/// The extended affine Weyl group of a root datum with its Coxeter structure
/// relative to the base alcove: length, descents, reduced words and Omega.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootDatum rd);

  const RootDatum& roots() const { return rd_; }
  const FiniteWeylTable& finite() const { return w0_; }
  int rank() const { return rd_.rank(); }

  ExtAffWeylElt identity() const { return {0, Coord::Zero(rd_.rank())}; }
  ExtAffWeylElt translation(const Coord& mu) const { return {0, mu}; }
  ExtAffWeylElt finite_elt(int w0) const { return {w0, Coord::Zero(rd_.rank())}; }
  ExtAffWeylElt mul(const ExtAffWeylElt& a, const ExtAffWeylElt& b) const;
  ExtAffWeylElt inv(const ExtAffWeylElt& a) const;

  AffineRoot act(const ExtAffWeylElt& w, const AffineRoot& a) const;

  /// Number of positive affine roots made negative, in closed form:
  /// sum over roots of max(0, <mu, alpha> + delta(w0 alpha) - delta(alpha)).
  int length(const ExtAffWeylElt& w) const;

  const std::vector<AffineRoot>& pi_aff() const { return pi_aff_; }
  int num_simple_affine() const { return static_cast<int>(pi_aff_.size()); }
  /// s_(alpha,h) = s_alpha . t_{h alpha^vee}.
  const ExtAffWeylElt& simple_reflection(int s) const { return simple_refl_[s]; }
  /// Irreducible component an affine simple reflection belongs to.
  int component_of_simple(int s) const { return rd_.component_of(pi_aff_[s].root); }
  ExtAffWeylElt reflection(const AffineRoot& a) const;

  bool is_descent(const ExtAffWeylElt& w, int s, Side side) const;
  std::vector<int> descents(const ExtAffWeylElt& w, Side side) const;

  ReducedWord reduced_word(const ExtAffWeylElt& w, WordPolicy policy = WordPolicy::kSmallestDescent) const;
  /// Every reduced word of the W_aff part (same omega for all).
  std::vector<std::vector<int>> all_reduced_words(const ExtAffWeylElt& w) const;
  bool in_affine_part(const ExtAffWeylElt& w) const;

  OmegaGroup omega_group(int radius = 1) const;

  LemmaEvenResult lemma_even(const ExtAffWeylElt& w) const;

  /// All elements of length <= max_len, sorted by (length, w0, mu). For infinite
  /// Omega the length-zero part is the window of omega_group(radius).
  std::vector<ExtAffWeylElt> enumerate(int max_len, int omega_radius = 1) const;
  /// Elements of W_aff with length <= max_len.
  std::vector<ExtAffWeylElt> enumerate_affine(int max_len) const;

 private:
  RootDatum rd_;
  FiniteWeylTable w0_;
  std::vector<AffineRoot> pi_aff_;
  std::vector<ExtAffWeylElt> simple_refl_;
  std::vector<int> delta_;  // 0 on positive roots, 1 on negative
};

}  // namespace prohecke
