#include "qbb/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qbb {

void MPoly::trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

MPoly::MPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, Rational(c));
}

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::variable(int index, int power) {
  Monomial m(static_cast<std::size_t>(index) + 1, 0);
  m[static_cast<std::size_t>(index)] = power;
  return monomial(std::move(m), 1);
}

MPoly MPoly::monomial(Monomial m, const Rational& c) {
  MPoly p;
  trim(m);
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

Rational MPoly::coeff(const Monomial& m) const {
  Monomial key = m;
  trim(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

int MPoly::num_vars() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.size());
  return static_cast<int>(n);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  MPoly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t k = 0; k < ma.size(); ++k) m[k] += ma[k];
      for (std::size_t k = 0; k < mb.size(); ++k) m[k] += mb[k];
      out += monomial(std::move(m), ca * cb);
    }
  }
  return *this = std::move(out);
}

MPoly MPoly::pow(unsigned n) const {
  MPoly r(1);
  for (unsigned k = 0; k < n; ++k) r *= *this;
  return r;
}

std::optional<MPoly> MPoly::divide_by_variable(int index, int power) const {
  MPoly out;
  const auto idx = static_cast<std::size_t>(index);
  for (const auto& [m, c] : terms_) {
    if (m.size() <= idx || m[idx] < power) return std::nullopt;
    Monomial q = m;
    q[idx] -= power;
    out += monomial(std::move(q), c);
  }
  return out;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t k = 0; k < m.size(); ++k) {
      for (int e = 0; e < m[k]; ++e) t *= point.at(k);
    }
    total += t;
  }
  return total;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then reverse lexicographic on exponents.
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    int dx = 0;
    int dy = 0;
    for (int e : x.first) dx += e;
    for (int e : y.first) dy += e;
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  for (const auto& [m, c0] : sorted) {
    Rational c = c0;
    const bool negative = c < 0;
    if (negative) c = -c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    bool wrote = false;
    if (c != 1 || m.empty()) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (wrote) os << "*";
      os << (k < names.size() ? names[k] : "x" + std::to_string(k));
      if (m[k] != 1) os << "^" << m[k];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace qbb
