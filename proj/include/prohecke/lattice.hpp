#pragma once

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace prohecke {

/// Largest supported rank of X_*(T). Lattice vectors live on the stack.
inline constexpr int kMaxRank = 6;

using Coord = Eigen::Matrix<std::int32_t, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxRank, 1>;
using CoordMatrix =
    Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxRank, kMaxRank>;

/// <xi, chi> for a cocharacter xi and a character chi, both in coordinates.
template <class A, class B>
inline std::int64_t pairing(const Eigen::MatrixBase<A>& xi, const Eigen::MatrixBase<B>& chi) {
  return xi.template cast<std::int64_t>().dot(chi.template cast<std::int64_t>());
}

/// Componentwise reduction into [0, modulus).
inline Coord reduce_mod(const Coord& v, std::int32_t modulus) {
  Coord out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const std::int32_t r = v[i] % modulus;
    out[i] = r < 0 ? r + modulus : r;
  }
  return out;
}

inline std::strong_ordering lex_compare(const Coord& a, const Coord& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

inline bool coord_equal(const Coord& a, const Coord& b) {
  return a.size() == b.size() && (a.size() == 0 || a == b);
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_coord(const Coord& v, std::size_t seed = 0) {
  for (Eigen::Index i = 0; i < v.size(); ++i) seed = hash_combine(seed, std::hash<std::int32_t>{}(v[i]));
  return seed;
}

inline Coord make_coord(std::initializer_list<std::int32_t> xs) {
  Coord v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v[i++] = x;
  return v;
}

inline Coord make_coord(const std::vector<int>& xs) {
  Coord v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v[static_cast<Eigen::Index>(i)] = xs[i];
  return v;
}

inline std::vector<int> to_vector(const Coord& v) {
  return std::vector<int>(v.data(), v.data() + v.size());
}

/// Smith normal form of an integer matrix A: returns (D, U, V) with U A V = D
/// diagonal, U and V unimodular.
struct SmithForm {
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> d, u, v;
  /// Nonzero diagonal entries (invariant factors), in order.
  std::vector<std::int64_t> invariants;
};

SmithForm smith_normal_form(const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>& a);

}  // namespace prohecke
