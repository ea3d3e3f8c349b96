#include "qbb/ratfunc.hpp"

#include <cctype>
#include <limits>

#include "qbb/error.hpp"

namespace qbb {

RatFunc::RatFunc(const Laurent& num, const Laurent& den) : num_(num), den_(den) { canonicalize(); }

void RatFunc::canonicalize() {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  if (den_.is_one()) return;
  if (den_.is_monomial()) {
    num_ = num_.shifted(-den_.low()) * (Rational(1) / den_.leading());
    den_ = Laurent(1);
    return;
  }
  const int shift = den_.low();
  if (shift != 0) {
    num_ = num_.shifted(-shift);
    den_ = den_.shifted(-shift);
  }
  Laurent g = Laurent::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = Laurent::exact_div(num_, g);
    den_ = Laurent::exact_div(den_, g);
  }
  // Dividing by g may leave a q-power in den when num had negative exponents.
  if (den_.low() != 0) {
    num_ = num_.shifted(-den_.low());
    den_ = den_.shifted(-den_.low());
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = Laurent(1);
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    canonicalize();
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    canonicalize();
    return *this;
  }
  Laurent g = Laurent::gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  } else {
    Laurent a = Laurent::exact_div(den_, g);
    Laurent b = Laurent::exact_div(o.den_, g);
    num_ = num_ * b + o.num_ * a;
    den_ = a * o.den_;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) {
    num_ = Laurent();
    den_ = Laurent(1);
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(n));
  r.den_ = den_.pow(static_cast<unsigned>(n));
  return r;
}

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

RatFunc RatFunc::substitute_power(int k) const {
  return RatFunc(num_.substitute_power(k), den_.substitute_power(k));
}

Rational RatFunc::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes at " + x.get_str());
  return num_.evaluate(x) / d;
}

int RatFunc::valuation_at_one() const {
  if (is_zero()) throw Error(ErrorCode::OutOfRange, "valuation of zero");
  return num_.order_at_one() - den_.order_at_one();
}

bool RatFunc::is_regular_at_one() const { return den_.value_at_one() != 0; }

Rational RatFunc::limit_at_one() const {
  const Rational d = den_.value_at_one();
  if (d == 0) throw Error(ErrorCode::NotRegular, to_string() + " has a pole at q = 1");
  return num_.value_at_one() / d;
}

std::optional<Rational> RatFunc::try_limit_at_one() const {
  const Rational d = den_.value_at_one();
  if (d == 0) return std::nullopt;
  return num_.value_at_one() / d;
}

std::optional<Rational> RatFunc::as_rational() const {
  if (!den_.is_one() || !num_.is_constant()) return std::nullopt;
  return num_.is_zero() ? Rational(0) : num_.leading();
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc run() {
    RatFunc value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Accepts ASCII '-' and U+2212.
  bool take_minus() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool take(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc = term();
    while (true) {
      if (take('+')) {
        acc += term();
      } else if (take_minus()) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    while (true) {
      if (take('*')) {
        acc *= unary();
      } else if (take('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (take_minus()) return -unary();
    if (take('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (!take('^')) return base;
    bool negative = false;
    if (take_minus()) negative = true;
    else take('+');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    int e = std::stoi(digits);
    if (negative) e = -e;
    if (e < 0 && base.is_zero()) fail("negative power of zero");
    return base.pow(e);
  }

  RatFunc primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (!take(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'q') {
      ++pos_;
      return RatFunc::q_power(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFunc(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(std::string_view text) { return Parser(text).run(); }

RatFunc q_int(int n, int r) {
  if (n < 0 || r < 1) throw Error(ErrorCode::OutOfRange, "q-integer needs n >= 0 and r >= 1");
  Laurent out;
  for (int k = 0; k < n; ++k) out += Laurent::q_power(r * (n - 1 - 2 * k));
  return RatFunc(out);
}

RatFunc q_factorial(int n, int r) {
  if (n < 0 || r < 1) throw Error(ErrorCode::OutOfRange, "q-factorial needs n >= 0 and r >= 1");
  RatFunc out(1);
  for (int k = 2; k <= n; ++k) out *= q_int(k, r);
  return out;
}

RatFunc q_binomial(int n, int k, int r) {
  if (n < 0 || k < 0 || k > n || r < 1) {
    throw Error(ErrorCode::OutOfRange, "q-binomial needs 0 <= k <= n and r >= 1");
  }
  // Pascal recursion keeps every intermediate a Laurent polynomial.
  std::vector<Laurent> row{Laurent(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<Laurent> next(static_cast<std::size_t>(m) + 1);
    next[0] = Laurent(1);
    next[static_cast<std::size_t>(m)] = Laurent(1);
    for (int j = 1; j < m; ++j) {
      // [m,j] = q^{-j}[m-1,j] + q^{m-j}[m-1,j-1], in q_i.
      next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)].shifted(-r * j) +
                                          row[static_cast<std::size_t>(j - 1)].shifted(r * (m - j));
    }
    row = std::move(next);
  }
  return RatFunc(row[static_cast<std::size_t>(k)]);
}

RatFunc q_int_binom(QIntMode mode, int n, int k, int r) {
  switch (mode) {
    case QIntMode::Integer: return q_int(n, r);
    case QIntMode::Factorial: return q_factorial(n, r);
    case QIntMode::Binomial: return q_binomial(n, k, r);
  }
  throw Error(ErrorCode::OutOfRange, "unknown q-number mode");
}

}  // namespace qbb
