#include <gtest/gtest.h>

#include <random>

#include "qbb/error.hpp"
#include "qbb/freealg.hpp"

using namespace qbb;

namespace {

// One real and one imaginary index, a_ij = -1.
CartanDatum mixed() { return validate_datum({{2, -1}, {-1, -2}}, std::vector<int>{1, 1}, std::vector<int>{1, 3}); }

FreeElement f(int i, int l) { return FreeElement::letter(i, l, Alphabet::F); }
FreeElement t(int i, int l) { return FreeElement::letter(i, l, Alphabet::T); }

WordId random_word(std::mt19937& rng, FreeAlgebra& alg, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(0, alg.datum().rank() - 1);
  std::vector<Letter> w;
  const int n = len(rng);
  for (int k = 0; k < n; ++k) {
    const int i = idx(rng);
    const int top = alg.datum().is_real(i) ? 1 : 2;
    std::uniform_int_distribution<int> lev(1, top);
    w.push_back(Letter{i, lev(rng)});
  }
  return intern_word(w);
}

// (a # b # c) stored as nested keys.
using Triple = std::map<std::tuple<WordId, WordId, WordId>, RatFunc>;

void add(Triple& t, WordId a, WordId b, WordId c, const RatFunc& v) {
  auto [it, ins] = t.emplace(std::make_tuple(a, b, c), v);
  if (!ins) {
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace

TEST(Words, InterningAndOrder) {
  WordId a = intern_word({{0, 1}, {1, 2}});
  EXPECT_EQ(a, intern_word({{0, 1}, {1, 2}}));
  EXPECT_EQ(concat(letter_word(0, 1), letter_word(1, 2)), a);
  EXPECT_TRUE(degree_lex_less(letter_word(1, 3), a));
  EXPECT_TRUE(degree_lex_less(kEmptyWord, letter_word(0, 1)));
  EXPECT_EQ(remove_letter(a, 0), letter_word(1, 2));
  EXPECT_EQ(word_length(a), 2U);
}

TEST(FreeAlgebra, TwistedProduct) {
  FreeAlgebra alg(mixed());
  const FreeElement one = FreeElement::one(Alphabet::F);
  for (int i = 0; i < 2; ++i) {
    TensorElement lhs = alg.twisted_mul(TensorElement::pure(one, f(i, 1)), TensorElement::pure(f(i, 1), one));
    TensorElement rhs = TensorElement::pure(f(i, 1), f(i, 1));
    rhs *= RatFunc::q_power(-2 * alg.datum().qparen_exp(i));
    EXPECT_EQ(lhs, rhs);
  }
  FreeElement x = f(0, 1) * f(1, 2);
  FreeElement y = f(1, 1);
  EXPECT_EQ(alg.twisted_mul(TensorElement::pure(x, one), TensorElement::pure(y, one)), TensorElement::pure(x * y, one));
  EXPECT_EQ(alg.twisted_mul(TensorElement::pure(one, x), TensorElement::pure(one, y)), TensorElement::pure(one, x * y));
  EXPECT_THROW(alg.twisted_mul(TensorElement::pure(f(0, 1), one), TensorElement::pure(t(0, 1), FreeElement::one(Alphabet::T))),
               Error);
}

TEST(FreeAlgebra, DeltaExamples) {
  FreeAlgebra alg(mixed());
  const FreeElement one = FreeElement::one(Alphabet::F);
  EXPECT_EQ(alg.delta(one), TensorElement::pure(one, one));
  const int qp = alg.datum().qparen_exp(1);
  TensorElement expect = TensorElement::pure(f(1, 2), one) + TensorElement::pure(one, f(1, 2));
  TensorElement mid = TensorElement::pure(f(1, 1), f(1, 1));
  mid *= RatFunc::q_power(-qp);
  expect += mid;
  EXPECT_EQ(alg.delta(f(1, 2)), expect);

  const int aij = alg.datum().sym(0, 1);
  TensorElement e2 = TensorElement::pure(f(0, 1) * f(1, 1), one) + TensorElement::pure(f(0, 1), f(1, 1)) +
                     TensorElement::pure(one, f(0, 1) * f(1, 1));
  TensorElement swapped = TensorElement::pure(f(1, 1), f(0, 1));
  swapped *= RatFunc::q_power(-aij);
  e2 += swapped;
  EXPECT_EQ(alg.delta(f(0, 1) * f(1, 1)), e2);
}

TEST(FreeAlgebra, DeltaIsHomomorphism) {
  FreeAlgebra alg(mixed());
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    WordId x = random_word(rng, alg, 2);
    WordId y = random_word(rng, alg, 2);
    TensorElement lhs = alg.delta_word(concat(x, y));
    TensorElement rhs = alg.twisted_mul(alg.delta_word(x), alg.delta_word(y));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(FreeAlgebra, DeltaCoassociative) {
  FreeAlgebra alg(mixed());
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    WordId w = random_word(rng, alg, 4);
    Triple left;
    Triple right;
    for (const auto& [k, c] : alg.delta_word(w).raw()) {
      const WordId a = TensorElement::first(k);
      const WordId b = TensorElement::second(k);
      for (const auto& [k2, c2] : alg.delta_word(a).raw()) {
        add(left, TensorElement::first(k2), TensorElement::second(k2), b, c * c2);
      }
      for (const auto& [k2, c2] : alg.delta_word(b).raw()) {
        add(right, a, TensorElement::first(k2), TensorElement::second(k2), c * c2);
      }
    }
    EXPECT_EQ(left, right);
  }
}

TEST(FreeAlgebra, Derivations) {
  FreeAlgebra alg(mixed());
  const FreeElement one = FreeElement::one(Alphabet::T);
  EXPECT_TRUE(alg.derivation(Side::Left, 1, 1, one).is_zero());
  for (int i = 0; i < 2; ++i) {
    const int qp = alg.datum().qparen_exp(i);
    FreeElement expect = t(i, 1) * (RatFunc(1) + RatFunc::q_power(-2 * qp));
    EXPECT_EQ(alg.derivation(Side::Left, i, 1, t(i, 1) * t(i, 1)), expect);
    EXPECT_EQ(alg.derivation(Side::Right, i, 1, t(i, 1) * t(i, 1)), expect);
  }
  EXPECT_EQ(alg.derivation(Side::Right, 1, 3, t(1, 3)), one);
  // Leibniz rule for e' on random products.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    WordId x = random_word(rng, alg, 3);
    WordId y = random_word(rng, alg, 3);
    FreeElement fx = FreeElement::word(x, Alphabet::T);
    FreeElement fy = FreeElement::word(y, Alphabet::T);
    for (int i = 0; i < 2; ++i) {
      for (int l = 1; l <= (i == 0 ? 1 : 2); ++l) {
        const int xi = -l * alg.datum().sym_form(alg.degree(x), RootVector::simple(2, i));
        const int yi = -l * alg.datum().sym_form(alg.degree(y), RootVector::simple(2, i));
        FreeElement lhs = alg.derivation(Side::Left, i, l, fx * fy);
        FreeElement rhs = alg.derivation(Side::Left, i, l, fx) * fy +
                          fx * alg.derivation(Side::Left, i, l, fy) * RatFunc::q_power(xi);
        EXPECT_EQ(lhs, rhs);
        FreeElement lhs2 = alg.derivation(Side::Right, i, l, fx * fy);
        FreeElement rhs2 = alg.derivation(Side::Right, i, l, fx) * fy * RatFunc::q_power(yi) +
                           fx * alg.derivation(Side::Right, i, l, fy);
        EXPECT_EQ(lhs2, rhs2);
      }
    }
  }
}

TEST(FreeAlgebra, WordsOfDegree) {
  FreeAlgebra alg(mixed());
  // Compositions of 3 for the imaginary index.
  EXPECT_EQ(alg.words_of_degree(RootVector({0, 3})).size(), 4U);
  // alpha_0 + 2 alpha_1: 3 words with f(1,1)^2 plus 2 with f(1,2).
  EXPECT_EQ(alg.words_of_degree(RootVector({1, 2})).size(), 5U);
  const auto& ws = alg.words_of_degree(RootVector({0, 3}));
  EXPECT_EQ(ws.front(), letter_word(1, 3));
  EXPECT_THROW(alg.words_of_degree(RootVector({0, 4})), Error);
}

TEST(FreeAlgebra, Printing) {
  FreeAlgebra alg(mixed());
  FreeElement x = f(1, 2) - f(1, 1) * f(1, 1) * RatFunc::parse("q/(1+q^2)");
  EXPECT_EQ(x.to_string(alg.datum()), "f(1,2) - (q)/(q^2 + 1)*f(1,1)*f(1,1)");
}
