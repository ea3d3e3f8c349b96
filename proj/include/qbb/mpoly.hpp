#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbb/laurent.hpp"

namespace qbb {

// Polynomial in variables x_0, x_1, ... with rational coefficients.
// Exponent vectors are trimmed of trailing zeros so that equal monomials
// compare equal regardless of how many variables were in play.
class MPoly {
 public:
  using Monomial = std::vector<int>;

  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static MPoly variable(int index, int power = 1);
  static MPoly monomial(Monomial m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;
  int degree() const;
  int num_vars() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly operator-() const;
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    return r *= b;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned n) const;
  // Exact quotient by x_index^power; nullopt if some monomial is not divisible.
  std::optional<MPoly> divide_by_variable(int index, int power = 1) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  // Names default to x0, x1, ...
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  static void trim(Monomial& m);
  std::map<Monomial, Rational> terms_;
};

}  // namespace qbb
