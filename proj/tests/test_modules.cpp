#include <gtest/gtest.h>

#include <random>

#include "qbb/error.hpp"
#include "qbb/modules.hpp"

using namespace qbb;

namespace {

CartanDatum single(int a, int cutoff = 6) {
  return validate_datum({{a}}, std::vector<int>{1}, std::vector<int>{a == 2 ? 1 : cutoff});
}
CartanDatum real_iso() { return validate_datum({{2, -1}, {-1, 0}}, std::vector<int>{1, 1}, std::vector<int>{1, 4}); }
CartanDatum mixed() { return validate_datum({{2, -1}, {-1, -2}}, std::vector<int>{1, 1}, std::vector<int>{1, 4}); }
CartanDatum real_pair() { return validate_datum({{2, -1}, {-1, 2}}, std::vector<int>{1, 1}, std::vector<int>{1, 1}); }

struct Engine {
  explicit Engine(const CartanDatum& d) : form(d, NuParams::defaults(d)), st(form), prim(form), modules(st, prim) {}
  LForm form;
  Straightener st;
  Primitives prim;
  ModuleEngine modules;
};

Weight weight(std::vector<int> h) {
  Weight w = Weight::zero(static_cast<int>(h.size()));
  w.h = std::move(h);
  return w;
}

std::vector<int> quantum_column(const DimTable& t) {
  std::vector<int> out;
  for (const auto& r : t.rows) out.push_back(r.quantum);
  return out;
}

std::vector<int> classical_column(const DimTable& t) {
  std::vector<int> out;
  for (const auto& r : t.rows) out.push_back(r.classical);
  return out;
}

void expect_checks_ok(const std::vector<ModuleCheck>& checks) {
  ASSERT_FALSE(checks.empty());
  for (const auto& c : checks) EXPECT_TRUE(c.ok) << c.name << ": " << c.detail;
}

}  // namespace

TEST(Verma, RankOneDimensions) {
  Engine real(single(2));
  EXPECT_EQ(quantum_column(real.modules.verma_dims(weight({3}), 6)), (std::vector<int>{1, 1, 1, 1, 1, 1, 1}));
  Engine iso(single(0));
  EXPECT_EQ(quantum_column(iso.modules.verma_dims(weight({0}), 5)), (std::vector<int>{1, 1, 2, 3, 5, 7}));
  Engine imag(single(-2));
  EXPECT_EQ(quantum_column(imag.modules.verma_dims(weight({1}), 5)), (std::vector<int>{1, 1, 2, 4, 8, 16}));
}

TEST(Verma, WeightsAndCutoffsAreRecorded) {
  Engine s(single(-2, 2));
  const DimTable t = s.modules.verma_dims(weight({4}), 4);
  ASSERT_EQ(t.rows.size(), 3U);
  EXPECT_EQ(t.rows[2].mu.h, std::vector<int>{4 - 2 * -2});
  ASSERT_EQ(t.omitted.size(), 2U);
  EXPECT_EQ(t.omitted[0].k, std::vector<int>{3});
  EXPECT_EQ(t.omitted[1].k, std::vector<int>{4});
  EXPECT_TRUE(t.assumption.empty());
  try {
    s.modules.verma_dims(weight({0}), s.form.max_ht() + 1);
    FAIL() << "expected DegreeTooLarge";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::DegreeTooLarge);
  }
}

TEST(Quotient, RealRankOne) {
  Engine s(single(2));
  EXPECT_EQ(quantum_column(s.modules.hw_quotient_dims(weight({2}), 5)), (std::vector<int>{1, 1, 1, 0, 0, 0}));
  EXPECT_EQ(quantum_column(s.modules.hw_quotient_dims(weight({1}), 3)), (std::vector<int>{1, 1, 0, 0}));
  EXPECT_EQ(quantum_column(s.modules.hw_quotient_dims(weight({0}), 2)), (std::vector<int>{1, 0, 0}));
  EXPECT_FALSE(s.modules.hw_quotient_dims(weight({1}), 1).assumption.empty());
}

TEST(Quotient, ImaginaryDirections) {
  for (int a : {0, -2}) {
    Engine s(single(a));
    EXPECT_EQ(quantum_column(s.modules.hw_quotient_dims(weight({0}), 5)), (std::vector<int>{1, 0, 0, 0, 0, 0}));
    EXPECT_EQ(quantum_column(s.modules.hw_quotient_dims(weight({2}), 5)), quantum_column(s.modules.verma_dims(weight({2}), 5)));
  }
}

TEST(Quotient, NotDominant) {
  Engine s(mixed());
  try {
    s.modules.hw_quotient_dims(weight({1, -1}), 2);
    FAIL() << "expected NotDominant";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotDominant);
  }
  EXPECT_NO_THROW(s.modules.verma_dims(weight({1, -1}), 2));
}

TEST(Quotient, RealPairAdjoint) {
  // Lambda_1 + Lambda_2 of sl_3 is the adjoint representation: dimension 8, zero weight of multiplicity 2.
  Engine s(real_pair());
  const DimTable t = s.modules.hw_quotient_dims(weight({1, 1}), 5);
  int total = 0;
  for (const auto& r : t.rows) total += r.quantum;
  EXPECT_EQ(total, 8);
  for (const auto& r : t.rows) {
    if (r.beta.k == std::vector<int>{1, 1}) EXPECT_EQ(r.quantum, 2);
  }
}

TEST(CharCompare, Examples) {
  Engine one(single(2));
  const DimTable t = one.modules.char_compare(weight({1}), 4, ModuleMode::Quotient);
  EXPECT_EQ(quantum_column(t), (std::vector<int>{1, 1, 0, 0, 0}));
  EXPECT_EQ(classical_column(t), quantum_column(t));
  EXPECT_TRUE(t.equal());

  Engine iso(single(0));
  EXPECT_TRUE(iso.modules.char_compare(weight({0}), 5, ModuleMode::Verma).equal());

  Engine ri(real_iso());
  for (ModuleMode mode : {ModuleMode::Verma, ModuleMode::Quotient}) {
    const DimTable rt = ri.modules.char_compare(Weight::fundamental(2, 0), 4, mode);
    EXPECT_TRUE(rt.equal()) << mode_name(mode);
  }
}

TEST(CharCompare, RandomDominantWeights) {
  std::mt19937 rng(8080);
  std::uniform_int_distribution<int> coord(0, 2);
  for (const CartanDatum& d : {real_iso(), mixed(), real_pair()}) {
    Engine s(d);
    for (int trial = 0; trial < 4; ++trial) {
      const Weight lambda = weight({coord(rng), coord(rng)});
      const DimTable t = s.modules.char_compare(lambda, 4, ModuleMode::Quotient);
      for (const auto& r : t.rows) {
        EXPECT_EQ(r.quantum, r.classical) << d.root_to_string(r.beta) << " lambda=(" << lambda.h[0] << "," << lambda.h[1] << ")";
      }
    }
  }
}

TEST(CharCompare, QuotientNeverExceedsVerma) {
  Engine s(mixed());
  const Weight lambda = weight({1, 0});
  const DimTable q = s.modules.hw_quotient_dims(lambda, 4);
  const DimTable v = s.modules.verma_dims(lambda, 4);
  ASSERT_EQ(q.rows.size(), v.rows.size());
  for (std::size_t k = 0; k < q.rows.size(); ++k) EXPECT_LE(q.rows[k].quantum, v.rows[k].quantum);
}

TEST(Actions, WeightsShiftsAndSingularVectors) {
  for (const CartanDatum& d : {real_iso(), mixed()}) {
    Engine s(d);
    for (const Weight& lambda : {weight({1, 0}), weight({0, 2}), weight({2, 1})}) expect_checks_ok(s.modules.check_actions(lambda, 3));
    expect_checks_ok(s.modules.check_actions(weight({-1, 1}), 3));
  }
}

TEST(Actions, SlTwoStringValues) {
  // e f^n v_lambda = sum_k phi(lambda - 2k) f^{n-1} v_lambda, k < n, where e f v_mu = phi(mu) v_mu.
  Engine s(single(2));
  auto fpow = [](int n, const RatFunc& c) {
    return FreeElement::word(intern_word(std::vector<Letter>(static_cast<std::size_t>(n), Letter{0, 1})), Alphabet::F, c);
  };
  auto phi = [&](int mu) { return s.modules.e_action(0, 1, fpow(1, RatFunc(1)), weight({mu})).coeff(kEmptyWord); };
  for (int lambda : {0, 1, 3}) {
    for (int n = 1; n <= 4; ++n) {
      RatFunc c;
      for (int k = 0; k < n; ++k) c += phi(lambda - 2 * k);
      EXPECT_EQ(s.modules.e_action(0, 1, fpow(n, RatFunc(1)), weight({lambda})), fpow(n - 1, c)) << lambda << " " << n;
    }
    // The string stops at f^{lambda+1} v_lambda.
    RatFunc c;
    for (int k = 0; k <= lambda; ++k) c += phi(lambda - 2 * k);
    EXPECT_TRUE(c.is_zero());
  }
}
