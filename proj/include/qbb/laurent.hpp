#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qbb {

using Rational = mpq_class;
using Integer = mpz_class;

// Laurent polynomial in q with rational coefficients.
//
// Stored densely: coefficient of q^(low + k) is coeffs[k]. The vector is
// trimmed so that both ends are nonzero; the zero polynomial has no
// coefficients and low == 0.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor)
  Laurent(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Laurent monomial(const Rational& c, int exponent);
  static Laurent q_power(int exponent) { return monomial(1, exponent); }
  static Laurent from_coeffs(int low, std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return coeffs_.size() <= 1 && (is_zero() || low_ == 0); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  std::size_t term_count() const;

  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  // Degree span high - low; -1 for zero.
  int span() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int exponent) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& trailing() const { return coeffs_.front(); }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent& operator*=(const Rational& c);
  Laurent operator-() const;

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator*(Laurent a, const Rational& c) { return a *= c; }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // Multiply by q^k.
  Laurent shifted(int k) const;
  // q -> q^{-1}.
  Laurent bar() const;
  // q -> q^k for k != 0.
  Laurent substitute_power(int k) const;
  Laurent pow(unsigned n) const;

  Rational evaluate(const Rational& x) const;
  Rational value_at_one() const;
  // Multiplicity of the root q = 1; the zero polynomial reports -1.
  int order_at_one() const;
  // Exact division by (q - 1)^k; throws if not divisible.
  Laurent divide_by_q_minus_one(int k) const;

  // Polynomial (nonnegative exponents) division with remainder.
  // Requires low() >= 0 for both operands and a nonzero divisor.
  static std::pair<Laurent, Laurent> divmod(const Laurent& a, const Laurent& b);
  // Exact quotient a / b in the Laurent ring; throws when b does not divide a.
  static Laurent exact_div(const Laurent& a, const Laurent& b);
  // Monic gcd of a and b viewed in Q[q, q^-1] (so q-power factors are units);
  // result has low() == 0.
  static Laurent gcd(const Laurent& a, const Laurent& b);

  // Content-normalised integer image: (scale, primitive integer polynomial)
  // with this == scale * q^low * sum p_k q^k.
  std::vector<Integer> primitive_integer_coeffs(Rational* scale) const;

  // Hash suitable for unordered containers.
  std::size_t hash() const;

  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

}  // namespace qbb
