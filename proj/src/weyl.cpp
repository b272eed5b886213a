#include "prohecke/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <unordered_set>

#include <Eigen/LU>

namespace prohecke {

namespace {

std::vector<int> matrix_key(const CoordMatrix& m) { return std::vector<int>(m.data(), m.data() + m.size()); }

CoordMatrix reflection_matrix(const RootDatum& rd, int root) {
  const int r = rd.rank();
  CoordMatrix m = CoordMatrix::Identity(r, r);
  m -= rd.coroot(root) * rd.root(root).transpose();
  return m;
}

}  // namespace

FiniteWeylTable::FiniteWeylTable(const RootDatum& rd) : num_roots_(rd.num_roots()) {
  const int r = rd.rank();
  std::map<std::vector<int>, int> index;
  matrices_.push_back(CoordMatrix::Identity(r, r));
  word_.push_back({});
  length_.push_back(0);
  index[matrix_key(matrices_[0])] = 0;

  std::vector<CoordMatrix> gens;
  for (int i = 0; i < rd.num_simple(); ++i) gens.push_back(reflection_matrix(rd, i));

  // BFS on the Cayley graph gives shortest words; right multiplication keeps
  // word(w s) = word(w) + [s].
  for (std::size_t head = 0; head < matrices_.size(); ++head) {
    for (int i = 0; i < rd.num_simple(); ++i) {
      CoordMatrix m = matrices_[head] * gens[i];
      auto key = matrix_key(m);
      if (index.count(key)) continue;
      const int id = static_cast<int>(matrices_.size());
      index[key] = id;
      matrices_.push_back(m);
      auto w = word_[head];
      w.push_back(i);
      word_.push_back(std::move(w));
      length_.push_back(length_[head] + 1);
      if (matrices_.size() > 100000) throw RootDataError("finite Weyl group too large");
    }
  }

  const int n = size();
  auto find_key = [&](const CoordMatrix& m) {
    auto it = index.find(matrix_key(m));
    if (it == index.end()) throw RootDataError("Weyl group not closed under multiplication");
    return it->second;
  };
  for (int i = 0; i < rd.num_simple(); ++i) generators_.push_back(find_key(gens[i]));
  mul_.resize(static_cast<std::size_t>(n) * n);
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int c = find_key(matrices_[a] * matrices_[b]);
      mul_[a * n + b] = c;
      if (c == 0) inv_[a] = b;
    }
  }
  root_perm_.resize(static_cast<std::size_t>(n) * num_roots_);
  for (int a = 0; a < n; ++a) {
    for (int beta = 0; beta < num_roots_; ++beta) {
      // W0 permutes roots and coroots compatibly; act on the coroot side.
      const int img = rd.find_coroot(matrices_[a] * rd.coroot(beta));
      if (img < 0) throw RootDataError("Weyl group does not permute the coroots");
      root_perm_[a * num_roots_ + beta] = img;
    }
  }
  for (int beta = 0; beta < num_roots_; ++beta) reflection_.push_back(find_key(reflection_matrix(rd, beta)));
}

int FiniteWeylTable::from_word(const std::vector<int>& word) const {
  int w = identity();
  for (int i : word) {
    if (i < 0 || i >= static_cast<int>(generators_.size())) {
      throw RootDataError("simple reflection index out of range");
    }
    w = mul(w, generators_[i]);
  }
  return w;
}

AffineWeylGroup::AffineWeylGroup(RootDatum rd) : rd_(std::move(rd)), w0_(rd_), pi_aff_(rd_.pi_aff()) {
  for (const auto& a : pi_aff_) simple_refl_.push_back(reflection(a));
  for (int i = 0; i < rd_.num_roots(); ++i) delta_.push_back(rd_.is_positive(i) ? 0 : 1);
}

ExtAffWeylElt AffineWeylGroup::mul(const ExtAffWeylElt& a, const ExtAffWeylElt& b) const {
  Coord mu = w0_.matrix(w0_.inv(b.w0)) * a.mu + b.mu;
  return {w0_.mul(a.w0, b.w0), mu};
}

ExtAffWeylElt AffineWeylGroup::inv(const ExtAffWeylElt& a) const {
  Coord mu = -(w0_.matrix(a.w0) * a.mu);
  return {w0_.inv(a.w0), mu};
}

AffineRoot AffineWeylGroup::act(const ExtAffWeylElt& w, const AffineRoot& a) const {
  const auto shift = pairing(w.mu, rd_.root(a.root));
  return {w0_.act_root(w.w0, a.root), static_cast<int>(a.h - shift)};
}

int AffineWeylGroup::length(const ExtAffWeylElt& w) const {
  std::int64_t total = 0;
  for (int a = 0; a < rd_.num_roots(); ++a) {
    const std::int64_t c = delta_[w0_.act_root(w.w0, a)] - delta_[a] + pairing(w.mu, rd_.root(a));
    if (c > 0) total += c;
  }
  return static_cast<int>(total);
}

ExtAffWeylElt AffineWeylGroup::reflection(const AffineRoot& a) const {
  Coord mu = a.h * rd_.coroot(a.root);
  return {w0_.reflection(a.root), mu};
}

bool AffineWeylGroup::is_descent(const ExtAffWeylElt& w, int s, Side side) const {
  const AffineRoot& a = pi_aff_[s];
  if (side == Side::kRight) return !rd_.is_positive_affine(act(w, a));
  return !rd_.is_positive_affine(act(inv(w), a));
}

std::vector<int> AffineWeylGroup::descents(const ExtAffWeylElt& w, Side side) const {
  std::vector<int> out;
  for (int s = 0; s < num_simple_affine(); ++s) {
    if (is_descent(w, s, side)) out.push_back(s);
  }
  return out;
}

ReducedWord AffineWeylGroup::reduced_word(const ExtAffWeylElt& w, WordPolicy policy) const {
  ReducedWord out;
  ExtAffWeylElt cur = w;
  const int n = num_simple_affine();
  for (;;) {
    int pick = -1;
    for (int k = 0; k < n; ++k) {
      const int s = policy == WordPolicy::kSmallestDescent ? k : n - 1 - k;
      if (is_descent(cur, s, Side::kRight)) {
        pick = s;
        break;
      }
    }
    if (pick < 0) break;
    cur = mul(cur, simple_refl_[pick]);
    out.word.push_back(pick);
  }
  std::reverse(out.word.begin(), out.word.end());
  out.omega = std::move(cur);
  return out;
}

std::vector<std::vector<int>> AffineWeylGroup::all_reduced_words(const ExtAffWeylElt& w) const {
  const auto ds = descents(w, Side::kRight);
  if (ds.empty()) return {{}};
  std::vector<std::vector<int>> out;
  for (int s : ds) {
    for (auto& word : all_reduced_words(mul(w, simple_refl_[s]))) {
      word.push_back(s);
      out.push_back(std::move(word));
    }
  }
  return out;
}

bool AffineWeylGroup::in_affine_part(const ExtAffWeylElt& w) const {
  return reduced_word(w).omega == identity();
}

OmegaGroup AffineWeylGroup::omega_group(int radius) const {
  using Mat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  const int r = rd_.rank(), n = rd_.num_simple();
  Mat c(r, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < r; ++i) c(i, j) = rd_.coroot(j)[i];
  }
  const SmithForm snf = smith_normal_form(c);
  // U C V = D, so x -> U x identifies Lambda / Q^vee with Z^r / D Z^n and the
  // classes of the columns of U^-1 generate.
  const Eigen::MatrixXd ud = snf.u.cast<double>();
  const Eigen::MatrixXd uinv_d = ud.inverse();
  Mat uinv(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) uinv(i, j) = std::llround(uinv_d(i, j));
  }
  if (snf.u * uinv != Mat::Identity(r, r)) throw RootDataError("Smith form transform not unimodular");

  OmegaGroup out;
  const int k = static_cast<int>(snf.invariants.size());
  out.free_rank = r - k;
  out.finite = out.free_rank == 0;
  auto omega_of = [&](int col) {
    Coord x(r);
    for (int i = 0; i < r; ++i) x[i] = static_cast<std::int32_t>(uinv(i, col));
    return reduced_word(translation(x)).omega;
  };
  std::vector<ExtAffWeylElt> torsion_gens, free_gens;
  for (int i = 0; i < k; ++i) {
    if (snf.invariants[i] > 1) {
      out.torsion.push_back(snf.invariants[i]);
      torsion_gens.push_back(omega_of(i));
    }
  }
  for (int i = k; i < r; ++i) free_gens.push_back(omega_of(i));
  out.generators = torsion_gens;
  out.generators.insert(out.generators.end(), free_gens.begin(), free_gens.end());

  std::vector<ExtAffWeylElt> torsion_part{identity()};
  for (std::size_t head = 0; head < torsion_part.size(); ++head) {
    for (const auto& g : torsion_gens) {
      auto x = mul(torsion_part[head], g);
      if (std::find(torsion_part.begin(), torsion_part.end(), x) == torsion_part.end()) {
        torsion_part.push_back(x);
      }
    }
  }

  std::vector<ExtAffWeylElt> free_part{identity()};
  for (const auto& g : free_gens) {
    std::vector<ExtAffWeylElt> next;
    const auto ginv = inv(g);
    for (const auto& base : free_part) {
      for (int e = -radius; e <= radius; ++e) {
        ExtAffWeylElt x = base;
        for (int i = 0; i < std::abs(e); ++i) x = mul(x, e > 0 ? g : ginv);
        next.push_back(x);
      }
    }
    free_part = std::move(next);
  }
  for (const auto& f : free_part) {
    for (const auto& t : torsion_part) out.elements.push_back(mul(f, t));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

LemmaEvenResult AffineWeylGroup::lemma_even(const ExtAffWeylElt& w) const {
  LemmaEvenResult res;
  const int nr = rd_.num_roots();
  std::vector<int> orbit_id(nr, -1);
  int next = 0;
  for (int a = 0; a < nr; ++a) {
    if (orbit_id[a] >= 0) continue;
    for (int b = a; orbit_id[b] < 0; b = w0_.act_root(w.w0, b)) orbit_id[b] = next;
    ++next;
  }
  for (int o = 0; o < next; ++o) {
    for (int a = 0; a < nr; ++a) {
      if (orbit_id[a] == o) {
        if (orbit_id[rd_.negative_of(a)] == o) ++res.orbits_stable_under_negation;
        break;
      }
    }
  }
  res.length = length(w);
  res.parity_ok = (res.orbits_stable_under_negation + res.length) % 2 == 0;
  return res;
}

std::vector<ExtAffWeylElt> AffineWeylGroup::enumerate_affine(int max_len) const {
  std::vector<ExtAffWeylElt> out{identity()};
  std::unordered_set<ExtAffWeylElt, ExtAffWeylHash> seen{identity()};
  std::size_t level_begin = 0;
  for (int len = 0; len < max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int s = 0; s < num_simple_affine(); ++s) {
        if (is_descent(out[i], s, Side::kRight)) continue;
        auto x = mul(out[i], simple_refl_[s]);
        if (seen.insert(x).second) out.push_back(std::move(x));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<ExtAffWeylElt> AffineWeylGroup::enumerate(int max_len, int omega_radius) const {
  const auto omega = omega_group(omega_radius);
  const auto affine = enumerate_affine(max_len);
  std::vector<std::pair<int, ExtAffWeylElt>> keyed;
  keyed.reserve(omega.elements.size() * affine.size());
  for (const auto& o : omega.elements) {
    for (const auto& w : affine) {
      auto x = mul(o, w);
      const int len = length(x);
      keyed.emplace_back(len, std::move(x));
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::vector<ExtAffWeylElt> out;
  out.reserve(keyed.size());
  for (auto& [len, x] : keyed) out.push_back(std::move(x));
  return out;
}

}  // namespace prohecke
