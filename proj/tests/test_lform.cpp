#include <gtest/gtest.h>

#include <map>
#include <random>

#include "qbb/error.hpp"
#include "qbb/lform.hpp"

using namespace qbb;

namespace {

CartanDatum imaginary1() { return validate_datum({{-2}}, std::vector<int>{1}, std::vector<int>{6}); }
CartanDatum isotropic1() { return validate_datum({{0}}, std::vector<int>{1}, std::vector<int>{6}); }
CartanDatum mixed() { return validate_datum({{2, -1}, {-1, -2}}, std::vector<int>{1, 1}, std::vector<int>{1, 3}); }

WordId w(std::initializer_list<Letter> ls) { return intern_word(std::vector<Letter>(ls)); }

// Pairing computed by splitting off the last letter of x and applying delta to y:
// (x' b, y) = sum (x', y1)(b, y2).
class PeelRightOracle {
 public:
  explicit PeelRightOracle(LForm& form) : form_(form) {}

  RatFunc operator()(WordId x, WordId y) {
    if (x == kEmptyWord || y == kEmptyWord) return RatFunc(x == y ? 1 : 0);
    FreeAlgebra& alg = form_.algebra();
    if (alg.degree(x) != alg.degree(y)) return RatFunc(0);
    const auto key = std::make_pair(x, y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto& xl = word_letters(x);
    const auto& yl = word_letters(y);
    RatFunc out;
    if (xl.size() == 1 && yl.size() == 1) {
      out = form_.nu(xl[0].i, xl[0].l);
    } else if (xl.size() == 1) {
      out = (*this)(y, x);
    } else {
      const std::size_t n = xl.size();
      const WordId head = word_prefix(x, n - 1);
      const WordId last = word_suffix(x, n - 1);
      for (const auto& [k, c] : alg.delta_word(y).raw()) {
        const WordId y1 = TensorElement::first(k);
        const WordId y2 = TensorElement::second(k);
        if (alg.degree(y2) != alg.degree(last)) continue;
        out += c * (*this)(head, y1) * (*this)(last, y2);
      }
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  LForm& form_;
  std::map<std::pair<WordId, WordId>, RatFunc> memo_;
};

}  // namespace

TEST(LForm, HandValues) {
  LForm form(imaginary1(), NuParams::defaults(imaginary1()));
  const int qp = form.datum().qparen_exp(0);
  ASSERT_EQ(qp, -1);
  const RatFunc nu1 = form.nu(0, 1);
  const RatFunc nu2 = form.nu(0, 2);
  EXPECT_EQ(nu1, RatFunc::parse("1+q"));
  EXPECT_EQ(form.pair_words(letter_word(0, 1), letter_word(0, 1)), nu1);
  const WordId f11 = w({{0, 1}, {0, 1}});
  EXPECT_EQ(form.pair_words(letter_word(0, 2), f11), RatFunc::q_power(-qp) * nu1 * nu1);

  const GramData& g = form.gram(RootVector({2}));
  ASSERT_EQ(g.size(), 2);
  EXPECT_EQ(g.words[0], letter_word(0, 2));
  EXPECT_EQ(g.gram[0][0], nu2);
  EXPECT_EQ(g.gram[0][1], RatFunc::q_power(-qp) * nu1 * nu1);
  EXPECT_EQ(g.gram[1][0], g.gram[0][1]);
  EXPECT_EQ(g.gram[1][1], (RatFunc(1) + RatFunc::q_power(-2 * qp)) * nu1 * nu1);
  EXPECT_EQ(g.rank(), 2);
  // Different degrees pair to zero.
  EXPECT_TRUE(form.pair_words(letter_word(0, 2), letter_word(0, 1)).is_zero());
}

TEST(LForm, AgreesWithRightPeelingOracle) {
  for (const CartanDatum& d : {mixed(), isotropic1()}) {
    NuParams nu = NuParams::defaults(d);
    // Non-default parameters so that no accidental symmetry hides a bug.
    nu.set(d.rank() - 1, 2, RatFunc::parse("1+2*q+q^3"));
    LForm form(d, nu);
    PeelRightOracle oracle(form);
    std::vector<RootVector> degrees = d.rank() == 2
                                          ? std::vector<RootVector>{RootVector({1, 2}), RootVector({2, 1}), RootVector({1, 3})}
                                          : std::vector<RootVector>{RootVector({3}), RootVector({4})};
    for (const RootVector& beta : degrees) {
      const auto& ws = form.algebra().words_of_degree(beta);
      for (WordId x : ws) {
        for (WordId y : ws) {
          EXPECT_EQ(form.pair_words(x, y), oracle(x, y));
          EXPECT_EQ(form.pair_words(x, y), form.pair_words(y, x));
        }
      }
    }
  }
}

TEST(LForm, CoproductAdjointOnRandomProducts) {
  CartanDatum d = validate_datum({{2, -1}, {-1, -2}}, std::vector<int>{1, 1}, std::vector<int>{1, 6});
  LForm form(d, NuParams::defaults(d));
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> coin(0, 2);
  FreeAlgebra& alg = form.algebra();
  for (int trial = 0; trial < 30; ++trial) {
    auto rand_word = [&](int len) {
      std::vector<Letter> ls;
      for (int k = 0; k < len; ++k) {
        const int c = coin(rng);
        ls.push_back(c == 0 ? Letter{0, 1} : Letter{1, c});
      }
      return intern_word(ls);
    };
    const WordId y = rand_word(1 + trial % 2);
    const WordId z = rand_word(1);
    const auto& xs = alg.words_of_degree(alg.degree(concat(y, z)));
    const WordId x = xs[static_cast<std::size_t>(trial) % xs.size()];
    // (x, yz) = (delta x, y (x) z).
    RatFunc rhs;
    for (const auto& [k, c] : alg.delta_word(x).raw()) {
      rhs += c * form.pair_words(TensorElement::first(k), y) * form.pair_words(TensorElement::second(k), z);
    }
    EXPECT_EQ(form.pair_words(x, concat(y, z)), rhs);
  }
}

TEST(LForm, RankSequences) {
  LForm im(imaginary1(), NuParams::defaults(imaginary1()));
  LForm iso(isotropic1(), NuParams::defaults(isotropic1()));
  const int partitions[] = {0, 1, 2, 3, 5, 7, 11};
  for (int l = 1; l <= 6; ++l) {
    EXPECT_EQ(im.gram(RootVector({l})).rank(), 1 << (l - 1)) << "imaginary l=" << l;
    EXPECT_EQ(iso.gram(RootVector({l})).rank(), partitions[l]) << "isotropic l=" << l;
  }
  CartanDatum real = validate_datum({{2}}, std::vector<int>{1});
  LForm re(real, NuParams::defaults(real));
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(re.gram(RootVector({n})).rank(), 1);
  EXPECT_THROW(im.gram(RootVector({7})), Error);
}

TEST(LForm, SerreRadicalInTypeA2) {
  CartanDatum d = validate_datum({{2, -1}, {-1, 2}}, std::vector<int>{1, 1});
  LForm form(d, NuParams::defaults(d));
  EXPECT_EQ(form.gram(RootVector({1, 1})).rank(), 2);
  const GramData& g = form.gram(RootVector({2, 1}));
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.rank(), 2);
  for (const FreeElement& v : g.radical_basis()) {
    EXPECT_TRUE(form.in_radical(v));
    EXPECT_FALSE(v.is_zero());
  }
  // The radical element is proportional to f0 f0 f1 - [2] f0 f1 f0 + f1 f0 f0.
  FreeElement serre(Alphabet::F);
  serre.add_term(w({{0, 1}, {0, 1}, {1, 1}}), RatFunc(1));
  serre.add_term(w({{0, 1}, {1, 1}, {0, 1}}), -q_int(2));
  serre.add_term(w({{1, 1}, {0, 1}, {0, 1}}), RatFunc(1));
  EXPECT_TRUE(form.in_radical(serre));
  const FreeElement r = form.reduce(serre);
  EXPECT_TRUE(r.is_zero());
}

TEST(LForm, NuValidation) {
  EXPECT_TRUE(check_nu_assumption(RatFunc::parse("1+q"), "x").empty());
  EXPECT_TRUE(check_nu_assumption(RatFunc::parse("1+2*q+q^5"), "x").empty());
  EXPECT_TRUE(check_nu_assumption(RatFunc::parse("1/(1-q)"), "x").empty());
  EXPECT_EQ(check_nu_assumption(RatFunc::parse("1-q"), "x").size(), 1U);
  EXPECT_EQ(check_nu_assumption(RatFunc::parse("1/(1+q)"), "x").size(), 1U);
  EXPECT_EQ(check_nu_assumption(RatFunc::parse("q"), "x").size(), 1U);
  EXPECT_EQ(check_nu_assumption(RatFunc::parse("q^-1+1"), "x").size(), 1U);
  EXPECT_EQ(check_nu_assumption(RatFunc(0), "x").size(), 1U);
  EXPECT_EQ(check_nu_assumption(RatFunc::parse("1+q/2"), "x").size(), 1U);
}

TEST(LForm, ReduceIsIdempotentAndPreservesPairings) {
  CartanDatum d = isotropic1();
  LForm form(d, NuParams::defaults(d));
  std::mt19937 rng(606);
  std::uniform_int_distribution<int> c(-3, 3);
  const auto& ws = form.algebra().words_of_degree(RootVector({4}));
  for (int trial = 0; trial < 20; ++trial) {
    FreeElement x(Alphabet::F);
    for (WordId u : ws) x.add_term(u, RatFunc(c(rng)));
    FreeElement r = form.reduce(x);
    EXPECT_EQ(form.reduce(r), r);
    for (WordId u : ws) EXPECT_EQ(form.pair(x, FreeElement::word(u, Alphabet::F)), form.pair(r, FreeElement::word(u, Alphabet::F)));
    EXPECT_TRUE(form.in_radical(x - r));
  }
}
