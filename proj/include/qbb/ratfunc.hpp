#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qbb/laurent.hpp"

namespace qbb {

// Element of Q(q), always kept as num/den with gcd 1, den monic and den.low() == 0.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Laurent& p) : num_(p) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Laurent& num, const Laurent& den);

  static RatFunc q_power(int e) { return RatFunc(Laurent::q_power(e)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // Multiply by q^k.
  RatFunc shifted(int k) const {
    RatFunc r = *this;
    r.num_ = num_.shifted(k);
    return r;
  }
  RatFunc inverse() const;
  RatFunc pow(int n) const;
  // q -> q^{-1}.
  RatFunc bar() const;
  // q -> q^k, k != 0.
  RatFunc substitute_power(int k) const;

  // Value at a rational point; DivisionByZero if the denominator vanishes there.
  Rational evaluate(const Rational& x) const;
  // Order of vanishing at q = 1 (negative for a pole). Zero has no order: OutOfRange.
  int valuation_at_one() const;
  bool is_regular_at_one() const;
  // f(1) for f regular at 1, else NotRegular.
  Rational limit_at_one() const;
  std::optional<Rational> try_limit_at_one() const;
  // Rational constant if this is one.
  std::optional<Rational> as_rational() const;

  std::size_t hash() const { return num_.hash() * 31U + den_.hash(); }

  // Round-trips through parse().
  std::string to_string() const;
  static RatFunc parse(std::string_view text);

 private:
  void canonicalize();

  Laurent num_;
  Laurent den_{1};
};

struct RatFuncHash {
  std::size_t operator()(const RatFunc& f) const { return f.hash(); }
};

// [n]_i with q_i = q^r.
RatFunc q_int(int n, int r = 1);
// [n]_i!.
RatFunc q_factorial(int n, int r = 1);
// q-binomial [n over k]_i.
RatFunc q_binomial(int n, int k, int r = 1);

enum class QIntMode { Integer, Factorial, Binomial };
// Single entry point for the three q-numbers; k is ignored unless mode is Binomial.
RatFunc q_int_binom(QIntMode mode, int n, int k, int r);

}  // namespace qbb
