#include <gtest/gtest.h>

#include <map>
#include <random>

#include "prohecke/verify.hpp"

using namespace prohecke;

namespace {

AffineWeylGroup group(const std::string& name) { return AffineWeylGroup(RootDatum::preset(name)); }

// Minimal word length of every W_aff element reachable with at most n letters.
std::map<ExtAffWeylElt, int> word_lengths(const AffineWeylGroup& W, int n) {
  std::map<ExtAffWeylElt, int> seen{{W.identity(), 0}};
  std::vector<ExtAffWeylElt> frontier{W.identity()};
  for (int len = 1; len <= n; ++len) {
    std::vector<ExtAffWeylElt> next;
    for (const auto& w : frontier) {
      for (int s = 0; s < W.num_simple_affine(); ++s) {
        const auto ws = W.mul(w, W.simple_reflection(s));
        if (seen.emplace(ws, len).second) next.push_back(ws);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST(Weyl, FiniteGroupOrders) {
  const std::vector<std::pair<std::string, int>> expected = {
      {"SL2", 2}, {"PGL2", 2}, {"SL3", 6}, {"GL3", 6}, {"Sp4", 8}, {"G2sc", 12}, {"SL2xSL2", 4}};
  for (const auto& [name, n] : expected) EXPECT_EQ(group(name).finite().size(), n) << name;
}

TEST(Weyl, AffineAction) {
  const auto W = group("SL2");
  const AffineRoot a{0, 0};
  EXPECT_EQ(W.act(W.identity(), a), a);
  EXPECT_EQ(W.act(W.translation(make_coord({1})), a), (AffineRoot{0, -2}));
  const auto sa = W.finite_elt(W.finite().generator(0));
  EXPECT_EQ(W.act(sa, a), (AffineRoot{W.roots().negative_of(0), 0}));
}

TEST(Weyl, SimpleReflectionsFixTheirWalls) {
  for (const char* name : {"SL2", "SL3", "Sp4", "G2sc", "PGL2"}) {
    const auto W = group(name);
    for (int s = 0; s < W.num_simple_affine(); ++s) {
      const AffineRoot A = W.pi_aff()[s];
      EXPECT_EQ(W.act(W.simple_reflection(s), A), W.roots().negate(A)) << name;
      EXPECT_EQ(W.mul(W.simple_reflection(s), W.simple_reflection(s)), W.identity());
      EXPECT_EQ(W.length(W.simple_reflection(s)), 1);
    }
  }
}

TEST(Weyl, LengthExamples) {
  const auto W = group("SL2");
  EXPECT_EQ(W.length(W.identity()), 0);
  EXPECT_EQ(W.length(W.simple_reflection(0)), 1);
  const auto t = W.translation(make_coord({1}));
  EXPECT_EQ(W.length(t), 2);
  EXPECT_EQ(brute_force_length(W, t), 2);
  EXPECT_EQ(W.descents(t, Side::kRight).size(), 1u);
  EXPECT_TRUE(W.descents(W.identity(), Side::kLeft).empty());
  EXPECT_EQ(W.descents(W.simple_reflection(0), Side::kLeft), std::vector<int>{0});
  EXPECT_EQ(W.descents(W.simple_reflection(0), Side::kRight), std::vector<int>{0});
}

TEST(Weyl, Pgl2FundamentalCoweightTranslationHasLengthOne) {
  // t of the generator of Lambda = Z flips exactly one positive affine root
  const auto W = group("PGL2");
  const auto t = W.translation(make_coord({1}));
  EXPECT_EQ(brute_force_length(W, t), 1);
  EXPECT_EQ(W.length(t), 1);
  const auto rw = W.reduced_word(t);
  EXPECT_EQ(rw.word.size(), 1u);
  EXPECT_NE(rw.omega, W.identity());
}

TEST(Weyl, ClosedFormLengthMatchesBruteForce) {
  for (const auto& name : RootDatum::preset_names()) {
    const auto W = group(name);
    for (const auto& w : W.enumerate(5)) ASSERT_EQ(W.length(w), brute_force_length(W, w)) << name;
  }
  // arbitrary translations and finite parts, not only short ones
  const auto W = group("Sp4");
  for (int w0 = 0; w0 < W.finite().size(); ++w0) {
    for (int a = -3; a <= 3; ++a) {
      for (int b = -3; b <= 3; ++b) {
        const ExtAffWeylElt w{w0, make_coord({a, b})};
        ASSERT_EQ(W.length(w), brute_force_length(W, w));
      }
    }
  }
}

TEST(Weyl, LengthIsMinimalWordLengthOnAffinePart) {
  for (const char* name : {"SL2", "SL3", "Sp4", "G2sc", "SL2xSL2"}) {
    const auto W = group(name);
    const auto lengths = word_lengths(W, 5);
    for (const auto& [w, n] : lengths) ASSERT_EQ(W.length(w), n) << name;
    EXPECT_EQ(W.enumerate_affine(5).size(), lengths.size()) << name;
  }
}

TEST(Weyl, AffineA2GrowthSeries) {
  const auto W = group("SL3");
  std::vector<int> count(6, 0);
  for (const auto& w : W.enumerate(5)) ++count[W.length(w)];
  EXPECT_EQ(count, (std::vector<int>{1, 3, 6, 9, 12, 15}));
}

TEST(Weyl, ReducedWordsRebuildTheElement) {
  for (const auto& name : RootDatum::preset_names()) {
    const auto W = group(name);
    for (const auto& w : W.enumerate(4)) {
      for (auto policy : {WordPolicy::kSmallestDescent, WordPolicy::kLargestDescent}) {
        const auto rw = W.reduced_word(w, policy);
        auto x = rw.omega;
        for (int s : rw.word) x = W.mul(x, W.simple_reflection(s));
        ASSERT_EQ(x, w) << name;
        ASSERT_EQ(static_cast<int>(rw.word.size()), W.length(w));
        ASSERT_EQ(W.length(rw.omega), 0);
      }
    }
  }
}

TEST(Weyl, AllReducedWordsOfLongestFiniteElement) {
  const auto W = group("SL3");
  int longest = 0;
  for (int u = 0; u < W.finite().size(); ++u) {
    if (W.finite().length(u) > W.finite().length(longest)) longest = u;
  }
  const auto words = W.all_reduced_words(W.finite_elt(longest));
  EXPECT_EQ(words.size(), 2u);
  const auto W2 = group("Sp4");
  int longest2 = 0;
  for (int u = 0; u < W2.finite().size(); ++u) {
    if (W2.finite().length(u) > W2.finite().length(longest2)) longest2 = u;
  }
  EXPECT_EQ(W2.all_reduced_words(W2.finite_elt(longest2)).size(), 2u);
}

TEST(Weyl, GroupLaws) {
  const auto W = group("G2sc");
  const auto xs = W.enumerate(4);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  for (int i = 0; i < 500; ++i) {
    const auto &a = xs[pick(rng)], &b = xs[pick(rng)], &c = xs[pick(rng)];
    ASSERT_EQ(W.mul(W.mul(a, b), c), W.mul(a, W.mul(b, c)));
    ASSERT_EQ(W.mul(a, W.inv(a)), W.identity());
    const AffineRoot A{static_cast<int>(i % W.roots().num_roots()), i % 5 - 2};
    ASSERT_EQ(W.act(W.mul(a, b), A), W.act(a, W.act(b, A)));
    ASSERT_LE(W.length(W.mul(a, b)), W.length(a) + W.length(b));
  }
}

TEST(Weyl, ReflectionFormula) {
  // s_(alpha, h) fixes the affine hyperplane and sends (alpha, h) to its negative
  const auto W = group("SL3");
  for (int a = 0; a < W.roots().num_roots(); ++a) {
    for (int h = -2; h <= 2; ++h) {
      const AffineRoot A{a, h};
      const auto r = W.reflection(A);
      EXPECT_EQ(W.act(r, A), W.roots().negate(A));
      EXPECT_EQ(W.mul(r, r), W.identity());
      EXPECT_EQ(W.length(r) % 2, 1);
    }
  }
}

TEST(Weyl, OmegaGroups) {
  const auto sl2 = group("SL2").omega_group();
  EXPECT_TRUE(sl2.finite);
  EXPECT_EQ(sl2.elements.size(), 1u);

  const auto W = group("PGL2");
  const auto pgl2 = W.omega_group();
  EXPECT_TRUE(pgl2.finite);
  ASSERT_EQ(pgl2.elements.size(), 2u);
  EXPECT_EQ(pgl2.torsion, std::vector<std::int64_t>{2});
  for (const auto& o : pgl2.elements) EXPECT_EQ(W.length(o), 0);

  EXPECT_EQ(group("SL3").omega_group().elements.size(), 1u);
  const auto gl2 = group("GL2").omega_group();
  EXPECT_FALSE(gl2.finite);
  EXPECT_EQ(gl2.free_rank, 1);
  EXPECT_EQ(gl2.generators.size(), 1u);
  for (const auto& o : gl2.elements) EXPECT_EQ(group("GL2").length(o), 0);
}

TEST(Weyl, OmegaNormalizesSimpleReflectionsAndKeepsLength) {
  for (const char* name : {"PGL2", "GL2", "GL3"}) {
    const auto W = group(name);
    const auto om = W.omega_group();
    for (const auto& o : om.elements) {
      for (int s = 0; s < W.num_simple_affine(); ++s) {
        const auto conj = W.mul(W.mul(o, W.simple_reflection(s)), W.inv(o));
        EXPECT_EQ(W.length(conj), 1) << name;
      }
      for (const auto& w : W.enumerate(3)) {
        EXPECT_EQ(W.length(W.mul(o, w)), W.length(w));
        EXPECT_EQ(W.length(W.mul(w, o)), W.length(w));
      }
    }
  }
}

TEST(Weyl, LemmaEvenExamples) {
  const auto W = group("SL3");
  const auto id = W.lemma_even(W.identity());
  EXPECT_EQ(id.orbits_stable_under_negation, 0);
  EXPECT_TRUE(id.parity_ok);
  for (int a = 0; a < W.roots().num_roots(); ++a) {
    const auto r = W.lemma_even(W.finite_elt(W.finite().reflection(a)));
    EXPECT_EQ(r.orbits_stable_under_negation, 1);
    EXPECT_TRUE(r.parity_ok);
  }
  const auto cox = W.mul(W.simple_reflection(0), W.simple_reflection(1));
  EXPECT_TRUE(W.lemma_even(cox).parity_ok);
}

TEST(Weyl, LemmaEvenHoldsOnAffinePart) {
  for (const auto& name : RootDatum::preset_names()) {
    const auto W = group(name);
    for (int u = 0; u < W.finite().size(); ++u) EXPECT_TRUE(W.lemma_even(W.finite_elt(u)).parity_ok) << name;
    for (const auto& w : W.enumerate_affine(4)) ASSERT_TRUE(W.lemma_even(w).parity_ok) << name;
  }
}

TEST(Weyl, LemmaEvenFailsForNontrivialOmegaOfPgl2) {
  // the length-zero element has finite part s_alpha, so N = 1 while l = 0
  const auto W = group("PGL2");
  const auto om = W.omega_group();
  int odd = 0;
  for (const auto& o : om.elements) {
    const auto r = W.lemma_even(o);
    if (o == W.identity()) continue;
    EXPECT_EQ(r.orbits_stable_under_negation, 1);
    EXPECT_EQ(r.length, 0);
    odd += !r.parity_ok;
  }
  EXPECT_EQ(odd, 1);
}
