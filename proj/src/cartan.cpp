#include "qbb/cartan.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <queue>

#include "qbb/error.hpp"

namespace qbb {

RootVector RootVector::simple(int n, int i, int mult) {
  RootVector r = zero(n);
  r.k[static_cast<std::size_t>(i)] = mult;
  return r;
}

int RootVector::ht() const { return std::accumulate(k.begin(), k.end(), 0); }

bool RootVector::is_zero() const {
  return std::all_of(k.begin(), k.end(), [](int x) { return x == 0; });
}

bool RootVector::is_positive() const {
  return std::all_of(k.begin(), k.end(), [](int x) { return x >= 0; });
}

RootVector& RootVector::operator+=(const RootVector& o) {
  for (std::size_t i = 0; i < k.size(); ++i) k[i] += o.k[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  for (std::size_t i = 0; i < k.size(); ++i) k[i] -= o.k[i];
  return *this;
}

RootVector RootVector::operator-() const {
  RootVector r = *this;
  for (auto& x : r.k) x = -x;
  return r;
}

RootVector operator*(int c, RootVector a) {
  for (auto& x : a.k) x *= c;
  return a;
}

Weight Weight::zero(int n) {
  return Weight{std::vector<int>(static_cast<std::size_t>(n), 0), std::vector<int>(static_cast<std::size_t>(n), 0)};
}

Weight Weight::fundamental(int n, int i) {
  Weight w = zero(n);
  w.h[static_cast<std::size_t>(i)] = 1;
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    h[i] += o.h[i];
    d[i] += o.d[i];
  }
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    h[i] -= o.h[i];
    d[i] -= o.d[i];
  }
  return *this;
}

Coweight Coweight::zero(int n) {
  return Coweight{std::vector<int>(static_cast<std::size_t>(n), 0), std::vector<int>(static_cast<std::size_t>(n), 0)};
}

bool Coweight::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; }) &&
         std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
}

Coweight& Coweight::operator+=(const Coweight& o) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] += o.a[i];
    b[i] += o.b[i];
  }
  return *this;
}

Coweight Coweight::operator-() const { return -1 * *this; }

Coweight operator*(int c, Coweight x) {
  for (auto& v : x.a) v *= c;
  for (auto& v : x.b) v *= c;
  return x;
}

IndexKind CartanDatum::kind(int i) const {
  if (is_real(i)) return IndexKind::Real;
  return is_isotropic(i) ? IndexKind::Isotropic : IndexKind::Imaginary;
}

std::vector<int> CartanDatum::real_indices() const {
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i)
    if (is_real(i)) out.push_back(i);
  return out;
}

std::vector<int> CartanDatum::imaginary_indices() const {
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i)
    if (is_imaginary(i)) out.push_back(i);
  return out;
}

std::vector<int> CartanDatum::isotropic_indices() const {
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i)
    if (is_isotropic(i)) out.push_back(i);
  return out;
}

int CartanDatum::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

int CartanDatum::sym_form(const RootVector& x, const RootVector& y) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x.k[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += x.k[static_cast<std::size_t>(i)] * y.k[static_cast<std::size_t>(j)] * sym(i, j);
  }
  return s;
}

int CartanDatum::pair(const Weight& lambda, const Coweight& h) {
  int s = 0;
  for (std::size_t i = 0; i < h.a.size(); ++i) s += h.a[i] * lambda.h[i] + h.b[i] * lambda.d[i];
  return s;
}

int CartanDatum::alpha_of(int j, const Coweight& h) const {
  int s = h.b[static_cast<std::size_t>(j)];
  for (int i = 0; i < rank(); ++i) s += h.a[static_cast<std::size_t>(i)] * a(i, j);
  return s;
}

int CartanDatum::pair(const RootVector& beta, const Coweight& h) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) {
    if (beta.k[static_cast<std::size_t>(j)] != 0) s += beta.k[static_cast<std::size_t>(j)] * alpha_of(j, h);
  }
  return s;
}

Weight CartanDatum::root_as_weight(const RootVector& beta) const {
  Weight w = Weight::zero(rank());
  for (int i = 0; i < rank(); ++i) {
    int v = 0;
    for (int j = 0; j < rank(); ++j) v += beta.k[static_cast<std::size_t>(j)] * a(i, j);
    w.h[static_cast<std::size_t>(i)] = v;
    w.d[static_cast<std::size_t>(i)] = beta.k[static_cast<std::size_t>(i)];
  }
  return w;
}

Weight CartanDatum::simple_root_weight(int i) const { return root_as_weight(RootVector::simple(rank(), i)); }

Coweight CartanDatum::K(int i, int m) const {
  Coweight c = Coweight::zero(rank());
  c.a[static_cast<std::size_t>(i)] = m * r(i);
  return c;
}

Coweight CartanDatum::h(int i) const {
  Coweight c = Coweight::zero(rank());
  c.a[static_cast<std::size_t>(i)] = 1;
  return c;
}

Weight CartanDatum::simple_reflection(int i, const Weight& lambda) const {
  if (!is_real(i)) throw Error(ErrorCode::NotRealIndex, "index " + std::to_string(i) + " is not real");
  Weight alpha = simple_root_weight(i);
  const int c = lambda.h[static_cast<std::size_t>(i)];
  Weight out = lambda;
  for (int j = 0; j < rank(); ++j) {
    out.h[static_cast<std::size_t>(j)] -= c * alpha.h[static_cast<std::size_t>(j)];
    out.d[static_cast<std::size_t>(j)] -= c * alpha.d[static_cast<std::size_t>(j)];
  }
  return out;
}

RootVector CartanDatum::simple_reflection(int i, const RootVector& beta) const {
  if (!is_real(i)) throw Error(ErrorCode::NotRealIndex, "index " + std::to_string(i) + " is not real");
  int c = 0;
  for (int j = 0; j < rank(); ++j) c += beta.k[static_cast<std::size_t>(j)] * a(i, j);
  RootVector out = beta;
  out.k[static_cast<std::size_t>(i)] -= c;
  return out;
}

std::string CartanDatum::root_to_string(const RootVector& beta) const {
  std::string s;
  for (int i = 0; i < rank(); ++i) {
    const int c = beta.k[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? "+" : "";
    if (c == -1) s += "-";
    else if (c != 1) s += std::to_string(c) + "*";
    s += "a" + names_[static_cast<std::size_t>(i)];
  }
  return s.empty() ? "0" : s;
}

std::optional<std::vector<int>> infer_symmetrizer(const std::vector<std::vector<int>>& a, std::string* why) {
  const std::size_t n = a.size();
  std::vector<mpq_class> r(n, 0);
  std::vector<int> component(n, -1);
  int comp = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    r[root] = 1;
    component[root] = comp;
    std::queue<std::size_t> todo;
    todo.push(root);
    while (!todo.empty()) {
      const std::size_t i = todo.front();
      todo.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || (a[i][j] == 0 && a[j][i] == 0)) continue;
        if (a[i][j] == 0 || a[j][i] == 0) {
          if (why != nullptr) {
            *why = "a[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + std::to_string(a[i][j]) + " but a[" +
                   std::to_string(j) + "][" + std::to_string(i) + "] = " + std::to_string(a[j][i]);
          }
          return std::nullopt;
        }
        mpq_class rj = r[i] * a[i][j] / a[j][i];
        if (component[j] < 0) {
          component[j] = comp;
          r[j] = rj;
          todo.push(j);
        } else if (r[j] != rj) {
          if (why != nullptr) {
            *why = "cycle through indices " + std::to_string(i) + " and " + std::to_string(j) +
                   " forces inconsistent ratios";
          }
          return std::nullopt;
        }
      }
    }
    ++comp;
  }
  std::vector<int> out(n, 0);
  for (int c = 0; c < comp; ++c) {
    mpz_class l = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r[i].get_den_mpz_t());
    mpz_class g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] != c) continue;
      mpz_class v = r[i].get_num() * (l / r[i].get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] != c) continue;
      mpz_class v = r[i].get_num() * (l / r[i].get_den()) / g;
      if (v <= 0 || !v.fits_sint_p()) {
        if (why != nullptr) *why = "no positive integer symmetrizer";
        return std::nullopt;
      }
      out[i] = static_cast<int>(v.get_si());
    }
  }
  return out;
}

CartanDatum validate_datum(const std::vector<std::vector<int>>& a, const std::optional<std::vector<int>>& r,
                           const std::optional<std::vector<int>>& cutoffs,
                           const std::optional<std::vector<std::string>>& names, int default_cutoff) {
  std::vector<Diagnostic> diags;
  const std::size_t n = a.size();
  if (n == 0) diags.push_back({ErrorCode::ValidationError, "matrix A is empty"});
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) {
      diags.push_back({ErrorCode::ValidationError, "matrix A is not square (row " + std::to_string(i) + ")"});
    }
  }
  if (!diags.empty()) throw ValidationFailure(diags);

  for (std::size_t i = 0; i < n; ++i) {
    const int d = a[i][i];
    if (d % 2 != 0) {
      diags.push_back({ErrorCode::OddDiagonal, "a[" + std::to_string(i) + "][" + std::to_string(i) + "] = " +
                                                   std::to_string(d) + " is odd"});
    } else if (d > 2) {
      diags.push_back({ErrorCode::OddDiagonal, "a[" + std::to_string(i) + "][" + std::to_string(i) + "] = " +
                                                   std::to_string(d) + " is not in {2, 0, -2, -4, ...}"});
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && a[i][j] > 0) {
        diags.push_back({ErrorCode::PositiveOffDiagonal, "a[" + std::to_string(i) + "][" + std::to_string(j) +
                                                             "] = " + std::to_string(a[i][j]) + " > 0"});
      }
    }
  }

  std::vector<int> sym;
  if (r) {
    if (r->size() != n) {
      diags.push_back({ErrorCode::ValidationError, "symmetrizer has " + std::to_string(r->size()) + " entries, expected " +
                                                       std::to_string(n)});
    } else {
      sym = *r;
      for (std::size_t i = 0; i < n; ++i) {
        if (sym[i] < 1) diags.push_back({ErrorCode::ValidationError, "r[" + std::to_string(i) + "] must be positive"});
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (sym[i] * a[i][j] != sym[j] * a[j][i]) {
            diags.push_back({ErrorCode::NotSymmetrizable, "r[" + std::to_string(i) + "]*a[" + std::to_string(i) + "][" +
                                                              std::to_string(j) + "] != r[" + std::to_string(j) + "]*a[" +
                                                              std::to_string(j) + "][" + std::to_string(i) + "]"});
          }
        }
      }
    }
  } else {
    std::string why;
    auto inferred = infer_symmetrizer(a, &why);
    if (inferred) sym = *inferred;
    else diags.push_back({ErrorCode::NotSymmetrizable, why});
  }

  std::vector<int> cut(n, 1);
  if (cutoffs && cutoffs->size() != n) {
    diags.push_back({ErrorCode::ValidationError, "cutoff list has " + std::to_string(cutoffs->size()) +
                                                     " entries, expected " + std::to_string(n)});
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const bool real = a[i][i] == 2;
      const int c = cutoffs ? (*cutoffs)[i] : (real ? 1 : default_cutoff);
      if (real && c != 1) {
        diags.push_back({ErrorCode::ValidationError, "real index " + std::to_string(i) + " must have cutoff 1"});
      } else if (c < 1) {
        diags.push_back({ErrorCode::ValidationError, "cutoff for index " + std::to_string(i) + " must be >= 1"});
      }
      cut[i] = c;
    }
  }

  std::vector<std::string> labels;
  if (names) {
    labels = *names;
    if (labels.size() != n) {
      diags.push_back({ErrorCode::ValidationError, "index list has " + std::to_string(labels.size()) +
                                                       " names, expected " + std::to_string(n)});
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        if (labels[i] == labels[j]) diags.push_back({ErrorCode::ValidationError, "duplicate index name " + labels[i]});
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }

  if (!diags.empty()) throw ValidationFailure(diags);

  CartanDatum out;
  out.names_ = std::move(labels);
  out.a_ = a;
  out.r_ = std::move(sym);
  out.cutoff_ = std::move(cut);
  return out;
}

}  // namespace qbb
