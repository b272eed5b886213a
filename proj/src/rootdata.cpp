#include "prohecke/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace prohecke {

namespace {

constexpr int kMaxRoots = 2000;

struct PresetData {
  int rank;
  std::vector<std::vector<int>> roots;
  std::vector<std::vector<int>> coroots;
};

// Simply connected forms use the simple coroots as X_* basis, so simple root
// coordinates are the columns of the Cartan matrix.
const std::vector<std::pair<std::string, PresetData>>& presets() {
  static const std::vector<std::pair<std::string, PresetData>> table = {
      {"SL2", {1, {{2}}, {{1}}}},
      {"PGL2", {1, {{1}}, {{2}}}},
      {"GL2", {2, {{1, -1}}, {{1, -1}}}},
      {"SL3", {2, {{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}}}},
      {"GL3", {3, {{1, -1, 0}, {0, 1, -1}}, {{1, -1, 0}, {0, 1, -1}}}},
      {"Sp4", {2, {{2, -1}, {-2, 2}}, {{1, 0}, {0, 1}}}},
      {"G2sc", {2, {{2, -1}, {-3, 2}}, {{1, 0}, {0, 1}}}},
      {"SL2xSL2", {2, {{2, 0}, {0, 2}}, {{1, 0}, {0, 1}}}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& RootDatum::preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, data] : presets()) out.push_back(name);
    return out;
  }();
  return names;
}

RootDatum RootDatum::preset(std::string_view name) {
  for (const auto& [key, data] : presets()) {
    if (key != name) continue;
    std::vector<Coord> roots, coroots;
    for (const auto& r : data.roots) roots.push_back(make_coord(r));
    for (const auto& c : data.coroots) coroots.push_back(make_coord(c));
    return from_simple(key, data.rank, roots, coroots);
  }
  throw RootDataError("unknown group preset '" + std::string(name) + "'");
}

RootDatum RootDatum::from_simple(std::string name, int rank, const std::vector<Coord>& simple_roots,
                                 const std::vector<Coord>& simple_coroots) {
  if (rank < 1 || rank > kMaxRank) throw RootDataError("rank out of supported range");
  if (simple_roots.size() != simple_coroots.size()) {
    throw RootDataError("simple roots and coroots differ in number");
  }
  const int n = static_cast<int>(simple_roots.size());
  for (int i = 0; i < n; ++i) {
    if (simple_roots[i].size() != rank || simple_coroots[i].size() != rank) {
      throw RootDataError("root coordinates do not match the rank");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (pairing(simple_coroots[i], simple_roots[i]) != 2) {
      throw RootDataError("<alpha^vee, alpha> != 2 for simple root " + std::to_string(i));
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto aij = pairing(simple_coroots[i], simple_roots[j]);
      const auto aji = pairing(simple_coroots[j], simple_roots[i]);
      if (aij > 0 || (aij == 0) != (aji == 0)) {
        throw RootDataError("simple roots do not form a Cartan matrix");
      }
    }
  }

  RootDatum rd;
  rd.name_ = std::move(name);
  rd.rank_ = rank;
  rd.num_simple_ = n;

  std::deque<int> queue;
  for (int i = 0; i < n; ++i) {
    rd.roots_.push_back(simple_roots[i]);
    rd.coroots_.push_back(simple_coroots[i]);
    Coord c = Coord::Zero(n);
    c[i] = 1;
    rd.simple_coeffs_.push_back(c);
    queue.push_back(i);
  }
  while (!queue.empty()) {
    const int b = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      const auto k = static_cast<std::int32_t>(pairing(simple_coroots[i], rd.roots_[b]));
      Coord root = rd.roots_[b] - k * simple_roots[i];
      const auto kc = static_cast<std::int32_t>(pairing(rd.coroots_[b], simple_roots[i]));
      Coord coroot = rd.coroots_[b] - kc * simple_coroots[i];
      if (rd.find_root(root) >= 0) continue;
      Coord coeffs = rd.simple_coeffs_[b];
      coeffs[i] -= k;
      rd.roots_.push_back(root);
      rd.coroots_.push_back(coroot);
      rd.simple_coeffs_.push_back(coeffs);
      queue.push_back(rd.num_roots() - 1);
      if (rd.num_roots() > kMaxRoots) throw RootDataError("root system is not finite");
    }
  }

  const int nr = rd.num_roots();
  rd.positive_.resize(nr);
  rd.negative_.assign(nr, -1);
  for (int i = 0; i < nr; ++i) {
    const auto& c = rd.simple_coeffs_[i];
    const bool nonneg = (c.array() >= 0).all();
    const bool nonpos = (c.array() <= 0).all();
    if (!nonneg && !nonpos) throw RootDataError("simple roots are not a base of the root system");
    rd.positive_[i] = nonneg;
    rd.negative_[i] = rd.find_root(-rd.roots_[i]);
    if (rd.negative_[i] < 0) throw RootDataError("root system not closed under negation");
    if (rd.find_root(2 * rd.roots_[i]) >= 0) throw RootDataError("root system is not reduced");
    if (pairing(rd.coroots_[i], rd.roots_[i]) != 2) throw RootDataError("<beta^vee, beta> != 2");
  }

  // Components of the Dynkin diagram.
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::deque<int> q{i};
    comp[i] = nc;
    while (!q.empty()) {
      const int a = q.front();
      q.pop_front();
      for (int j = 0; j < n; ++j) {
        if (comp[j] < 0 && pairing(simple_coroots[a], simple_roots[j]) != 0) {
          comp[j] = nc;
          q.push_back(j);
        }
      }
    }
    ++nc;
  }
  rd.num_components_ = nc;
  rd.component_.resize(nr);
  for (int i = 0; i < nr; ++i) {
    const auto& c = rd.simple_coeffs_[i];
    for (int j = 0; j < n; ++j) {
      if (c[j] != 0) {
        rd.component_[i] = comp[j];
        break;
      }
    }
  }
  return rd;
}

RootDatum RootDatum::from_explicit(int rank, const std::vector<Coord>& roots,
                                   const std::vector<Coord>& coroots, const std::vector<int>& simple) {
  if (roots.size() != coroots.size()) throw RootDataError("roots and coroots differ in number");
  std::vector<Coord> sr, sc;
  for (int i : simple) {
    if (i < 0 || i >= static_cast<int>(roots.size())) throw RootDataError("simple index out of range");
    sr.push_back(roots[i]);
    sc.push_back(coroots[i]);
  }
  RootDatum rd = from_simple("explicit", rank, sr, sc);
  if (static_cast<int>(roots.size()) != rd.num_roots()) {
    throw RootDataError("root list is not the closure of the simple roots");
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const int j = rd.find_root(roots[i]);
    if (j < 0 || !coord_equal(rd.coroot(j), coroots[i])) {
      throw RootDataError("root/coroot pair " + std::to_string(i) + " is not in the generated system");
    }
  }
  return rd;
}

int RootDatum::find_root(const Coord& chi) const {
  for (int i = 0; i < num_roots(); ++i) {
    if (coord_equal(roots_[i], chi)) return i;
  }
  return -1;
}

int RootDatum::find_coroot(const Coord& xi) const {
  for (int i = 0; i < num_roots(); ++i) {
    if (coord_equal(coroots_[i], xi)) return i;
  }
  return -1;
}

Eigen::MatrixXi RootDatum::cartan() const {
  Eigen::MatrixXi a(num_simple_, num_simple_);
  for (int i = 0; i < num_simple_; ++i) {
    for (int j = 0; j < num_simple_; ++j) a(i, j) = static_cast<int>(pairing(coroots_[i], roots_[j]));
  }
  return a;
}

bool RootDatum::precedes(int alpha, int beta) const {
  return ((simple_coeffs_[beta] - simple_coeffs_[alpha]).array() >= 0).all();
}

bool RootDatum::is_positive_affine(const AffineRoot& a) const {
  if (a.root < 0 || a.root >= num_roots()) throw RootDataError("affine root index out of range");
  return a.h > 0 || (a.h == 0 && positive_[a.root]);
}

std::vector<int> RootDatum::minimal_roots() const {
  std::vector<int> out;
  for (int c = 0; c < num_components_; ++c) {
    std::vector<int> minimal;
    for (int a = 0; a < num_roots(); ++a) {
      if (component_[a] != c) continue;
      bool is_min = true;
      for (int b = 0; b < num_roots() && is_min; ++b) {
        if (b != a && component_[b] == c && precedes(b, a)) is_min = false;
      }
      if (is_min) minimal.push_back(a);
    }
    if (minimal.size() != 1) throw RootDataError("component without a unique minimal root");
    out.push_back(minimal.front());
  }
  return out;
}

std::vector<AffineRoot> RootDatum::pi_aff() const {
  std::vector<AffineRoot> out;
  for (int i = 0; i < num_simple_; ++i) out.push_back({i, 0});
  for (int m : minimal_roots()) out.push_back({m, 1});
  return out;
}

bool RootDatum::is_semisimple() const { return num_simple_ == rank_; }

bool RootDatum::is_simply_connected() const {
  if (!is_semisimple()) return false;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> m(rank_, num_simple_);
  for (int j = 0; j < num_simple_; ++j) {
    for (int i = 0; i < rank_; ++i) m(i, j) = coroots_[j][i];
  }
  const auto snf = smith_normal_form(m);
  return std::all_of(snf.invariants.begin(), snf.invariants.end(),
                     [](std::int64_t d) { return d == 1; });
}

}  // namespace prohecke
