#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "qbb/error.hpp"
#include "qbb/primitive.hpp"

using namespace qbb;

namespace {

CartanDatum single(int a) { return validate_datum({{a}}, std::vector<int>{1}, std::vector<int>{5}); }
CartanDatum mixed() { return validate_datum({{2, -1}, {-1, -2}}, std::vector<int>{1, 1}, std::vector<int>{1, 3}); }
CartanDatum real_iso() { return validate_datum({{2, -1}, {-1, 0}}, std::vector<int>{1, 1}, std::vector<int>{1, 3}); }

WordId w(std::initializer_list<Letter> ls) { return intern_word(std::vector<Letter>(ls)); }

// All compositions of n, optionally restricted to weakly decreasing ones.
void compositions(int n, bool partitions_only, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  const int top = (partitions_only && !cur.empty()) ? std::min(n, cur.back()) : n;
  for (int k = top; k >= 1; --k) {
    cur.push_back(k);
    compositions(n - k, partitions_only, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int n, bool partitions_only) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(n, partitions_only, cur, out);
  return out;
}

FreeElement t_product(Primitives& p, int i, const std::vector<int>& c) {
  FreeElement out = FreeElement::one(Alphabet::F);
  for (int l : c) out = out * p.t(i, l);
  return out;
}

// Pairing matrix of a family of homogeneous elements of degree beta.
std::vector<std::vector<RatFunc>> pairing_matrix(LForm& form, const std::vector<FreeElement>& xs, const RootVector& beta) {
  const GramData& g = form.gram(beta);
  std::vector<std::vector<RatFunc>> out(xs.size(), std::vector<RatFunc>(xs.size()));
  for (std::size_t a = 0; a < xs.size(); ++a) {
    const std::vector<RatFunc> cert = form.pairing_certificate(xs[a], beta);
    for (std::size_t b = 0; b < xs.size(); ++b) {
      for (const auto& [w, c] : xs[b].terms()) {
        const RatFunc& v = cert[static_cast<std::size_t>(g.index.at(w))];
        if (!v.is_zero()) out[a][b] += c * v;
      }
    }
  }
  return out;
}

std::vector<int> sorted_desc(std::vector<int> c) {
  std::sort(c.rbegin(), c.rend());
  return c;
}

// All t-words of degree beta for the given datum, built from letters up to the cutoffs.
std::vector<WordId> t_words(FreeAlgebra& alg, const RootVector& beta) { return alg.words_of_degree(beta); }

}  // namespace

TEST(Primitive, HandValues) {
  for (int a : {-2, -4, 0}) {
    CartanDatum d = single(a);
    LForm form(d, NuParams::defaults(d));
    Primitives p(form);
    const RatFunc qp = RatFunc::q_power(d.qparen_exp(0));
    EXPECT_EQ(p.t(0, 1), FreeElement::letter(0, 1, Alphabet::F));
    FreeElement t2 = FreeElement::letter(0, 2, Alphabet::F);
    t2.add_term(w({{0, 1}, {0, 1}}), -qp / (RatFunc(1) + qp * qp));
    EXPECT_EQ(p.t(0, 2), t2) << "a=" << a;
    const RatFunc nu1 = form.nu(0, 1);
    EXPECT_EQ(p.tau(0, 1), nu1);
    EXPECT_EQ(p.tau(0, 2), form.nu(0, 2) - nu1 * nu1 / (qp * qp + RatFunc(1)));
    EXPECT_TRUE(form.pair(p.t(0, 2), FreeElement::word(w({{0, 1}, {0, 1}}), Alphabet::F)).is_zero());
    EXPECT_EQ(p.s(0, 2).alphabet(), Alphabet::E);
    EXPECT_EQ(p.s(0, 2).relabeled(Alphabet::F), p.t(0, 2));
    EXPECT_EQ(form.pair(p.s(0, 2), p.s(0, 2)), p.tau(0, 2));
  }
}

TEST(Primitive, TauIndependentOfNuForLevelTwoCoefficient) {
  CartanDatum d = single(-2);
  NuParams nu = NuParams::defaults(d);
  nu.set(0, 1, RatFunc::parse("1+3*q+q^2"));
  nu.set(0, 2, RatFunc::parse("1/(1-q)"));
  LForm form(d, nu);
  LForm plain(d, NuParams::defaults(d));
  Primitives p(form);
  Primitives p0(plain);
  EXPECT_EQ(p.t(0, 2), p0.t(0, 2));
}

TEST(Primitive, PropertiesUpToLevelFour) {
  for (const CartanDatum& d : {single(-2), single(-4), single(0), mixed(), real_iso()}) {
    LForm form(d, NuParams::defaults(d));
    Primitives p(form);
    for (int i = 0; i < d.rank(); ++i) {
      for (int l = 1; l <= std::min(4, d.cutoff(i)); ++l) {
        for (const PropertyCheck& c : p.check_properties(i, l)) {
          EXPECT_TRUE(c.ok) << c.name << " i=" << i << " l=" << l << ": " << c.detail;
        }
        EXPECT_FALSE(p.tau(i, l).is_zero());
        EXPECT_EQ(p.tau(i, l), form.pair(p.t(i, l), p.t(i, l)));
      }
    }
  }
}

TEST(Primitive, NonIsotropicEntriesAreExact) {
  CartanDatum d = single(-2);
  LForm form(d, NuParams::defaults(d));
  Primitives p(form);
  for (int l = 1; l <= 4; ++l) {
    EXPECT_FALSE(p.entry(0, l).canonical_lift);
    for (const PropertyCheck& c : p.check_properties(0, l)) EXPECT_EQ(c.detail, "exact") << c.name << " l=" << l;
  }
}

TEST(Primitive, ZeroTauIsReported) {
  CartanDatum d = single(0);
  NuParams nu = NuParams::defaults(d);
  // nu_2 = nu_1^2 / 2 kills tau_2 for an isotropic index.
  nu.set(0, 2, RatFunc::parse("(1+q)^2/2"));
  LForm form(d, nu);
  Primitives p(form);
  try {
    p.tau(0, 2);
    FAIL() << "expected ZeroTau";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroTau);
  }
}

TEST(Primitive, DividedPowers) {
  CartanDatum d = validate_datum({{2, -2}, {-1, 2}}, std::vector<int>{1, 2});
  LForm form(d, NuParams::defaults(d));
  Primitives p(form);
  FreeAlgebra& alg = form.algebra();
  for (int i = 0; i < 2; ++i) {
    const int r = d.qi_exp(i);
    const FreeElement ti = FreeElement::letter(i, 1, Alphabet::F);
    EXPECT_EQ(p.divided_power(i, 0), FreeElement::one(Alphabet::F));
    EXPECT_EQ(p.divided_power(i, 1), ti);
    EXPECT_EQ(p.divided_power(i, 2), ti * ti * (RatFunc::q_power(r) + RatFunc::q_power(-r)).inverse());
    for (int n = 0; n <= 4; ++n) {
      TensorElement expect(Alphabet::F);
      for (int a = 0; a <= n; ++a) {
        TensorElement term = TensorElement::pure(p.divided_power(i, a), p.divided_power(i, n - a));
        term *= RatFunc::q_power(-r * a * (n - a));
        expect += term;
      }
      EXPECT_EQ(alg.delta(p.divided_power(i, n)), expect) << "i=" << i << " n=" << n;
    }
  }
  CartanDatum m = mixed();
  LForm fm(m, NuParams::defaults(m));
  Primitives pm(fm);
  EXPECT_THROW(pm.divided_power(1, 2), Error);
}

TEST(Primitive, SerreRelations) {
  // Real-real a_ij = -1.
  CartanDatum a2 = validate_datum({{2, -1}, {-1, 2}}, std::vector<int>{1, 1});
  LForm f2(a2, NuParams::defaults(a2));
  Primitives p2(f2);
  EXPECT_TRUE(p2.serre_check(0, 1, 1).ok);
  EXPECT_TRUE(p2.serre_check(1, 0, 1).ok);
  // Commuting pair a_ij = 0.
  CartanDatum a1a1 = validate_datum({{2, 0}, {0, -2}}, std::vector<int>{1, 1}, std::vector<int>{1, 3});
  LForm f11(a1a1, NuParams::defaults(a1a1));
  Primitives p11(f11);
  for (int l = 1; l <= 3; ++l) {
    const SerreResult r = p11.serre_check(0, 1, l);
    EXPECT_TRUE(r.ok) << "l=" << l;
    EXPECT_EQ(r.relation, p11.t(1, l) * p11.t(0, 1) - p11.t(0, 1) * p11.t(1, l));
  }
  // Real-imaginary and real-isotropic neighbours.
  for (const CartanDatum& d : {mixed(), real_iso()}) {
    LForm form(d, NuParams::defaults(d));
    Primitives p(form);
    for (int l = 1; l <= 2; ++l) {
      const SerreResult r = p.serre_check(0, 1, l);
      EXPECT_TRUE(r.ok) << "l=" << l;
      EXPECT_EQ(r.pairings.size(), r.words.size());
      EXPECT_FALSE(r.relation.is_zero());
    }
    EXPECT_THROW(p.serre_check(0, 1, 3), Error);
    EXPECT_THROW(p.serre_check(1, 0, 1), Error);
  }
}

TEST(Primitive, SerreCheckIsNotVacuous) {
  CartanDatum d = mixed();
  LForm form(d, NuParams::defaults(d));
  Primitives p(form);
  // One power short: t_i t_j - t_j t_i is not in the radical.
  FreeElement c = p.t(0, 1) * p.t(1, 1) - p.t(1, 1) * p.t(0, 1);
  EXPECT_FALSE(form.in_radical(c));
  // Wrong middle coefficient.
  FreeElement bad = p.divided_power(0, 2) * p.t(1, 1) - p.t(0, 1) * p.t(1, 1) * p.t(0, 1) * RatFunc(2) +
                    p.t(1, 1) * p.divided_power(0, 2);
  EXPECT_FALSE(form.in_radical(bad));
  // The f-letter version sum (-1)^k [n,k] f^{n-k} f_j f^k also vanishes in the quotient.
  const FreeElement f0 = FreeElement::letter(0, 1, Alphabet::F);
  const FreeElement f12 = FreeElement::letter(1, 2, Alphabet::F);
  FreeElement qserre(Alphabet::F);
  auto power = [&](int k) {
    FreeElement x = FreeElement::one(Alphabet::F);
    for (int s = 0; s < k; ++s) x = x * f0;
    return x;
  };
  for (int k = 0; k <= 3; ++k) {
    FreeElement term = power(3 - k) * f12 * power(k) * q_binomial(3, k);
    if (k % 2 == 0) {
      qserre += term;
    } else {
      qserre -= term;
    }
  }
  EXPECT_TRUE(form.in_radical(qserre));
}

TEST(Primitive, BasisChangeIsUnitriangularAndInvertible) {
  for (const CartanDatum& d : {single(-2), single(0)}) {
    LForm form(d, NuParams::defaults(d));
    Primitives p(form);
    FreeAlgebra& alg = form.algebra();
    for (int l = 1; l <= 5; ++l) {
      const auto& ws = t_words(alg, RootVector({l}));
      for (WordId u : ws) {
        const FreeElement& e = p.expand_t_word(u);
        EXPECT_EQ(e.coeff(u), RatFunc(1));
        for (const auto& [v, c] : e.terms()) {
          if (v != u) EXPECT_GT(word_length(v), word_length(u));
        }
        const FreeElement tu = FreeElement::word(u, Alphabet::T);
        EXPECT_EQ(p.to_t(p.to_f(tu)), tu);
        const FreeElement fu = FreeElement::word(u, Alphabet::F);
        EXPECT_EQ(p.to_f(p.to_t(fu)), fu);
      }
    }
  }
}

TEST(Primitive, PartitionOrthogonality) {
  {
    CartanDatum d = single(0);
    LForm form(d, NuParams::defaults(d));
    Primitives p(form);
    for (int l = 2; l <= 5; ++l) {
      const auto parts = compositions(l, true);
      std::vector<FreeElement> ts;
      for (const auto& c : parts) ts.push_back(t_product(p, 0, c));
      const auto m = pairing_matrix(form, ts, RootVector({l}));
      for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = 0; b < parts.size(); ++b) {
          EXPECT_EQ(m[a][b].is_zero(), a != b) << "l=" << l;
        }
      }
    }
  }
  {
    CartanDatum d = single(-2);
    LForm form(d, NuParams::defaults(d));
    Primitives p(form);
    for (int l = 2; l <= 5; ++l) {
      const auto comps = compositions(l, false);
      std::vector<FreeElement> ts;
      for (const auto& c : comps) ts.push_back(t_product(p, 0, c));
      const auto m = pairing_matrix(form, ts, RootVector({l}));
      for (std::size_t a = 0; a < comps.size(); ++a) {
        for (std::size_t b = 0; b < comps.size(); ++b) {
          if (sorted_desc(comps[a]) == sorted_desc(comps[b])) continue;
          EXPECT_TRUE(m[a][b].is_zero()) << "l=" << l;
        }
      }
    }
  }
}

TEST(Primitive, TWordPairingMatchesExpansion) {
  for (const CartanDatum& d : {mixed(), real_iso()}) {
    LForm form(d, NuParams::defaults(d));
    Primitives p(form);
    for (const RootVector& beta : {RootVector({1, 2}), RootVector({2, 2}), RootVector({0, 3})}) {
      const auto& ws = form.algebra().words_of_degree(beta);
      std::vector<FreeElement> ts;
      for (WordId u : ws) ts.push_back(p.expand_t_word(u));
      const auto m = pairing_matrix(form, ts, beta);
      for (std::size_t a = 0; a < ws.size(); ++a) {
        for (std::size_t b = 0; b < ws.size(); ++b) EXPECT_EQ(p.pair_t_words(ws[a], ws[b]), m[a][b]);
      }
    }
  }
}

TEST(Primitive, AdjunctionWithDerivations) {
  for (const CartanDatum& d : {mixed(), real_iso()}) {
    LForm form(d, NuParams::defaults(d));
    Primitives p(form);
    FreeAlgebra& alg = form.algebra();
    int checked = 0;
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; a + b <= 4 && b <= 3; ++b) {
        if (a + b == 0) continue;
        const RootVector beta({a, b});
        for (int i = 0; i < 2; ++i) {
          for (int l = 1; l <= d.cutoff(i); ++l) {
            const RootVector rest = beta - RootVector::simple(2, i, l);
            if (!rest.is_positive() && !rest.is_zero()) continue;
            const std::vector<WordId> ys = rest.is_zero() ? std::vector<WordId>{kEmptyWord} : alg.words_of_degree(rest);
            const RatFunc tau = p.tau(i, l);
            for (WordId xw : alg.words_of_degree(beta)) {
              const FreeElement x = FreeElement::word(xw, Alphabet::T);
              const FreeElement xf = p.to_f(x);
              const FreeElement dl = p.to_f(alg.derivation(Side::Left, i, l, x));
              const FreeElement dr = p.to_f(alg.derivation(Side::Right, i, l, x));
              for (WordId yw : ys) {
                const FreeElement yf = p.to_f(FreeElement::word(yw, Alphabet::T));
                EXPECT_EQ(form.pair(p.t(i, l) * yf, xf), tau * form.pair(yf, dl));
                EXPECT_EQ(form.pair(yf * p.t(i, l), xf), tau * form.pair(yf, dr));
                ++checked;
              }
            }
          }
        }
      }
    }
    EXPECT_GT(checked, 100);
  }
}

TEST(Primitive, DerivationsPreserveRadical) {
  for (const CartanDatum& d : {mixed(), real_iso()}) {
    LForm form(d, NuParams::defaults(d));
    Primitives p(form);
    FreeAlgebra& alg = form.algebra();
    int radical_vectors = 0;
    for (const RootVector& beta : {RootVector({2, 1}), RootVector({3, 1}), RootVector({2, 2}), RootVector({1, 3}), RootVector({0, 3})}) {
      for (const FreeElement& v : form.gram(beta).radical_basis()) {
        ++radical_vectors;
        const FreeElement vt = p.to_t(v);
        for (int i = 0; i < 2; ++i) {
          for (int l = 1; l <= d.cutoff(i); ++l) {
            EXPECT_TRUE(form.in_radical(p.to_f(alg.derivation(Side::Right, i, l, vt))));
            EXPECT_TRUE(form.in_radical(p.to_f(alg.derivation(Side::Left, i, l, vt))));
          }
        }
      }
    }
    EXPECT_GT(radical_vectors, 0);
  }
}

TEST(Primitive, NondegeneracyCriterion) {
  CartanDatum d = mixed();
  LForm form(d, NuParams::defaults(d));
  Primitives p(form);
  FreeAlgebra& alg = form.algebra();
  std::mt19937 rng(8128);
  std::uniform_int_distribution<int> coef(-2, 2);
  const RootVector beta({2, 1});
  const GramData& g = form.gram(beta);
  const auto radical = g.radical_basis();
  ASSERT_FALSE(radical.empty());
  int hypothesis_held = 0;
  for (int trial = 0; trial < 40; ++trial) {
    // Half the samples are radical combinations, half are generic.
    FreeElement x(Alphabet::F);
    if (trial % 2 == 0) {
      for (const FreeElement& v : radical) x += v * RatFunc(coef(rng));
    } else {
      for (WordId u : g.words) x.add_term(u, RatFunc(coef(rng)));
    }
    const FreeElement xt = p.to_t(x);
    bool all_in = true;
    for (int i = 0; i < 2 && all_in; ++i) {
      for (int l = 1; l <= d.cutoff(i); ++l) {
        if (!form.in_radical(p.to_f(alg.derivation(Side::Right, i, l, xt)))) {
          all_in = false;
          break;
        }
      }
    }
    if (all_in) {
      ++hypothesis_held;
      EXPECT_TRUE(form.in_radical(x));
    }
  }
  EXPECT_GE(hypothesis_held, 20);
}
