#include "qbb/linalg.hpp"

#include "qbb/error.hpp"

namespace qbb {

std::vector<int> rref_in_place(RMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t sel = row;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[row], m[sel]);
    const RatFunc inv = m[row][c].inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!m[row][j].is_zero()) m[row][j] *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][c].is_zero()) continue;
      const RatFunc f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!m[row][j].is_zero()) m[i][j] -= f * m[row][j];
      }
    }
    pivots.push_back(static_cast<int>(c));
    ++row;
  }
  return pivots;
}

ColumnBasis column_basis(const RMatrix& g) {
  ColumnBasis out;
  if (g.empty()) return out;
  RMatrix m = g;
  out.pivots = rref_in_place(m);
  m.resize(out.pivots.size());
  out.coords = std::move(m);
  return out;
}

std::vector<int> pivot_columns(QMatrix m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t sel = row;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[row], m[sel]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[row][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++row;
  }
  return pivots;
}

QMatrix evaluate(const RMatrix& g, const Rational& point) {
  QMatrix out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[i].reserve(g[i].size());
    for (const auto& x : g[i]) out[i].push_back(x.evaluate(point));
  }
  return out;
}

namespace {

// Scale a row of rational functions by a common factor so that every entry
// becomes a polynomial in q.
std::vector<Laurent> polynomialize(const std::vector<RatFunc>& row) {
  Laurent l(1);
  for (const auto& x : row) {
    if (x.is_zero() || x.den().is_one()) continue;
    Laurent g = Laurent::gcd(l, x.den());
    l = l * Laurent::exact_div(x.den(), g);
  }
  std::vector<Laurent> out;
  out.reserve(row.size());
  int low = 0;
  bool any = false;
  for (const auto& x : row) {
    Laurent v = x.is_zero() ? Laurent() : x.num() * Laurent::exact_div(l, x.den());
    if (!v.is_zero()) {
      low = any ? std::min(low, v.low()) : v.low();
      any = true;
    }
    out.push_back(std::move(v));
  }
  if (any && low != 0) {
    for (auto& v : out) v = v.shifted(-low);
  }
  return out;
}

}  // namespace

std::optional<RMatrix> solve_fraction_free(const RMatrix& a, const RMatrix& b) {
  const std::size_t n = a.size();
  if (n == 0) return RMatrix{};
  const std::size_t extra = b.empty() ? 0 : b[0].size();
  const std::size_t cols = n + extra;
  std::vector<std::vector<Laurent>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<RatFunc> row = a[i];
    row.insert(row.end(), b[i].begin(), b[i].end());
    m[i] = polynomialize(row);
  }
  Laurent prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t sel = k + 1;
      while (sel < n && m[sel][k].is_zero()) ++sel;
      if (sel == n) return std::nullopt;
      std::swap(m[k], m[sel]);
    }
    const Laurent p = m[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Laurent mik = m[i][k];
      for (std::size_t j = 0; j < cols; ++j) {
        Laurent v = p * m[i][j];
        if (!mik.is_zero() && !m[k][j].is_zero()) v -= mik * m[k][j];
        m[i][j] = prev.is_one() ? std::move(v) : Laurent::exact_div(v, prev);
      }
    }
    prev = p;
  }
  RMatrix x(n, std::vector<RatFunc>(extra));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < extra; ++j) {
      if (!m[k][n + j].is_zero()) x[k][j] = RatFunc(m[k][n + j], m[k][k]);
    }
  }
  return x;
}

ColumnBasis column_basis_symmetric(const RMatrix& g) {
  const std::size_t n = g.size();
  if (n == 0) return {};
  static const std::vector<Rational> points{Rational(2), Rational(3), Rational(5, 2), Rational(7),
                                            Rational(11, 3), Rational(13), Rational(17, 5)};
  for (const auto& point : points) {
    QMatrix ev;
    try {
      ev = evaluate(g, point);
    } catch (const Error&) {
      continue;
    }
    std::vector<int> p = pivot_columns(ev);
    if (p.size() == n) {
      ColumnBasis out;
      out.pivots = p;
      out.coords.assign(n, std::vector<RatFunc>(n));
      for (std::size_t k = 0; k < n; ++k) out.coords[k][k] = RatFunc(1);
      return out;
    }
    if (p.empty()) {
      bool all_zero = true;
      for (const auto& row : g)
        for (const auto& x : row) all_zero = all_zero && x.is_zero();
      if (all_zero) return {};
      continue;
    }
    const std::size_t r = p.size();
    RMatrix a(r, std::vector<RatFunc>(r));
    RMatrix b(r);
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t c = 0; c < r; ++c) a[k][c] = g[static_cast<std::size_t>(p[k])][static_cast<std::size_t>(p[c])];
      b[k] = g[static_cast<std::size_t>(p[k])];
    }
    auto x = solve_fraction_free(a, b);
    if (!x) continue;
    // Pivots must be the first independent columns: column j only uses pivots before it.
    bool lex_first = true;
    for (std::size_t j = 0; j < n && lex_first; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        if (static_cast<std::size_t>(p[k]) > j && !(*x)[k][j].is_zero()) {
          lex_first = false;
          break;
        }
      }
    }
    if (!lex_first) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        RatFunc s;
        for (std::size_t k = 0; k < r; ++k) {
          if (!(*x)[k][j].is_zero()) s += g[i][static_cast<std::size_t>(p[k])] * (*x)[k][j];
        }
        ok = s == g[i][j];
      }
    }
    if (!ok) continue;
    return ColumnBasis{std::move(p), std::move(*x)};
  }
  return column_basis(g);
}

std::vector<std::vector<RatFunc>> kernel(const RMatrix& m) {
  std::vector<std::vector<RatFunc>> out;
  if (m.empty()) return out;
  const std::size_t cols = m[0].size();
  RMatrix r = m;
  std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<RatFunc> v(cols);
    v[j] = RatFunc(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[static_cast<std::size_t>(pivots[k])] = -r[k][j];
    out.push_back(std::move(v));
  }
  return out;
}

RMatrix transpose(const RMatrix& m) {
  if (m.empty()) return {};
  RMatrix t(m[0].size(), std::vector<RatFunc>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RMatrix multiply(const RMatrix& a, const RMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  RMatrix c(a.size(), std::vector<RatFunc>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

}  // namespace qbb
