#include "qbb/laurent.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qbb/error.hpp"

namespace qbb {

namespace {

using IntPoly = std::vector<Integer>;  // ascending coefficients

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  trim_int(p);
  // Drop factors of q: both gcd arguments have nonzero constant terms.
  std::size_t lead_zeros = 0;
  while (lead_zeros < p.size() && p[lead_zeros] == 0) ++lead_zeros;
  if (lead_zeros > 0) p.erase(p.begin(), p.begin() + static_cast<long>(lead_zeros));
  if (p.empty()) return;
  Integer g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0).
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim_int(a);
  }
  return a;
}

}  // namespace

Laurent::Laurent(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

Laurent::Laurent(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Laurent Laurent::monomial(const Rational& c, int exponent) {
  Laurent r;
  if (c != 0) {
    r.low_ = exponent;
    r.coeffs_.push_back(c);
  }
  return r;
}

Laurent Laurent::from_coeffs(int low, std::vector<Rational> coeffs) {
  Laurent r;
  r.low_ = low;
  r.coeffs_ = std::move(coeffs);
  r.trim();
  return r;
}

bool Laurent::is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }

std::size_t Laurent::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

Rational Laurent::coeff(int exponent) const {
  if (exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

void Laurent::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t z = 0;
  while (z < coeffs_.size() && coeffs_[z] == 0) ++z;
  if (z > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(z));
    low_ += static_cast<int>(z);
  }
  if (coeffs_.empty()) low_ = 0;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  if (static_cast<int>(coeffs_.size()) < hi - lo + 1) coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + k] += o.coeffs_[k];
  }
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Laurent r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  Rational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      r.coeffs_[i + j] += t;
    }
  }
  r.trim();
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent& Laurent::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

Laurent Laurent::bar() const {
  if (is_zero()) return {};
  Laurent r;
  r.low_ = -high();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

Laurent Laurent::substitute_power(int k) const {
  if (k == 0) throw Error(ErrorCode::OutOfRange, "substitute_power needs k != 0");
  if (k < 0) return substitute_power(-k).bar();
  if (is_zero() || k == 1) return *this;
  Laurent r;
  r.low_ = low_ * k;
  r.coeffs_.assign(static_cast<std::size_t>(span()) * static_cast<std::size_t>(k) + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * static_cast<std::size_t>(k)] = coeffs_[i];
  return r;
}

Laurent Laurent::pow(unsigned n) const {
  Laurent result(1);
  Laurent base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Rational Laurent::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0 && low_ < 0) throw Error(ErrorCode::DivisionByZero, "negative power of q at q = 0");
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  if (low_ != 0) {
    Rational p = 1;
    Rational base = low_ > 0 ? x : Rational(1) / x;
    for (int k = 0; k < std::abs(low_); ++k) p *= base;
    acc *= p;
  }
  return acc;
}

Rational Laurent::value_at_one() const {
  Rational s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

int Laurent::order_at_one() const {
  if (is_zero()) return -1;
  int order = 0;
  std::vector<Rational> p = coeffs_;
  while (true) {
    Rational s = 0;
    for (const auto& c : p) s += c;
    if (s != 0) return order;
    // Synthetic division by (q - 1), highest degree first.
    std::vector<Rational> quotient(p.size() - 1);
    Rational carry = 0;
    for (std::size_t k = p.size() - 1; k >= 1; --k) {
      carry += p[k];
      quotient[k - 1] = carry;
    }
    p = std::move(quotient);
    ++order;
  }
}

Laurent Laurent::divide_by_q_minus_one(int k) const {
  std::vector<Rational> p = coeffs_;
  for (int step = 0; step < k; ++step) {
    Rational s = 0;
    for (const auto& c : p) s += c;
    if (p.empty() || s != 0) throw Error(ErrorCode::NotRegular, "not divisible by (q - 1)");
    std::vector<Rational> quotient(p.size() - 1);
    Rational carry = 0;
    for (std::size_t j = p.size() - 1; j >= 1; --j) {
      carry += p[j];
      quotient[j - 1] = carry;
    }
    p = std::move(quotient);
  }
  return from_coeffs(low_, std::move(p));
}

std::pair<Laurent, Laurent> Laurent::divmod(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.low_ < 0 || b.low_ < 0) throw Error(ErrorCode::OutOfRange, "divmod expects polynomials");
  if (a.is_zero() || a.high() < b.high()) return {Laurent(), a};
  // Work with dense ascending coefficient arrays starting at exponent 0.
  std::vector<Rational> rem(static_cast<std::size_t>(a.high()) + 1, Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) rem[static_cast<std::size_t>(a.low_) + k] = a.coeffs_[k];
  const int db = b.high();
  std::vector<Rational> den(static_cast<std::size_t>(db) + 1, Rational(0));
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) den[static_cast<std::size_t>(b.low_) + k] = b.coeffs_[k];
  const Rational inv_lead = Rational(1) / den.back();
  std::vector<Rational> quot(static_cast<std::size_t>(a.high() - db) + 1, Rational(0));
  for (int d = a.high(); d >= db; --d) {
    const Rational& top = rem[static_cast<std::size_t>(d)];
    if (top == 0) continue;
    Rational f = top * inv_lead;
    const int s = d - db;
    for (int k = 0; k <= db; ++k) {
      if (den[static_cast<std::size_t>(k)] != 0) rem[static_cast<std::size_t>(k + s)] -= f * den[static_cast<std::size_t>(k)];
    }
    quot[static_cast<std::size_t>(s)] = f;
  }
  return {from_coeffs(0, std::move(quot)), from_coeffs(0, std::move(rem))};
}

Laurent Laurent::exact_div(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "Laurent division by zero");
  if (a.is_zero()) return {};
  // Normalise both to polynomials with nonzero constant term, track the shift.
  const int shift = a.low_ - b.low_;
  Laurent pa = a.shifted(-a.low_);
  Laurent pb = b.shifted(-b.low_);
  auto [quot, rem] = divmod(pa, pb);
  if (!rem.is_zero()) throw Error(ErrorCode::InconsistentSystem, "inexact Laurent division");
  return quot.shifted(shift);
}

std::vector<Integer> Laurent::primitive_integer_coeffs(Rational* scale) const {
  std::vector<Integer> out;
  if (is_zero()) {
    if (scale != nullptr) *scale = 0;
    return out;
  }
  Integer l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c.get_num() * (l / c.get_den()));
  Integer g = content(out);
  if (out.back() < 0) g = -g;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (scale != nullptr) {
    *scale = Rational(g, l);
    scale->canonicalize();
  }
  return out;
}

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
  auto monic_poly = [](const Laurent& p) {
    Laurent r = p.shifted(-p.low_);
    r *= Rational(1) / r.leading();
    return r;
  };
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return monic_poly(b);
  if (b.is_zero()) return monic_poly(a);
  if (a.is_monomial() || b.is_monomial()) return Laurent(1);
  IntPoly pa = a.primitive_integer_coeffs(nullptr);
  IntPoly pb = b.primitive_integer_coeffs(nullptr);
  make_primitive(pa);
  make_primitive(pb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (pb.size() > 1) {
    IntPoly r = pseudo_remainder(pa, pb);
    make_primitive(r);
    if (r.empty()) break;
    pa = std::move(pb);
    pb = std::move(r);
  }
  if (pb.size() == 1) return Laurent(1);
  std::vector<Rational> coeffs;
  coeffs.reserve(pb.size());
  for (const auto& c : pb) coeffs.emplace_back(c);
  Laurent g = from_coeffs(0, std::move(coeffs));
  g *= Rational(1) / g.leading();
  return g;
}

std::size_t Laurent::hash() const {
  std::size_t h = std::hash<int>{}(low_);
  for (const auto& c : coeffs_) {
    const std::size_t hc = mpz_get_ui(c.get_num_mpz_t()) * 1000003U + mpz_get_ui(c.get_den_mpz_t());
    h ^= hc + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
  }
  return h;
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    Rational c = coeffs_[static_cast<std::size_t>(e - low_)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace qbb
