#include "qbb/primitive.hpp"

#include <algorithm>

namespace qbb {

namespace {

bool all_zero(const std::vector<RatFunc>& v) {
  return std::all_of(v.begin(), v.end(), [](const RatFunc& x) { return x.is_zero(); });
}

std::vector<WordId> words_or_empty(FreeAlgebra& alg, const RootVector& beta) {
  if (beta.is_zero()) return {kEmptyWord};
  return alg.words_of_degree(beta);
}

}  // namespace

PrimitiveEntry Primitives::compute(int i, int l) {
  const CartanDatum& d = datum();
  if (i < 0 || i >= d.rank() || l < 1 || l > d.cutoff(i)) {
    throw Error(ErrorCode::OutOfRange, "no generator (" + std::to_string(i) + "," + std::to_string(l) + ")");
  }
  PrimitiveEntry e;
  const WordId top = letter_word(i, l);
  e.t = FreeElement::word(top, Alphabet::F);
  if (l > 1) {
    for (int m = 1; m < l; ++m) entry(i, m);
    const RootVector beta = RootVector::simple(d.rank(), i, l);
    if (beta.ht() > form_.max_ht()) {
      throw Error(ErrorCode::DegreeTooLarge,
                  "height " + std::to_string(beta.ht()) + " exceeds max_ht " + std::to_string(form_.max_ht()));
    }
    // Lower words, read as t-words; they span the same space as the lower f-words.
    std::vector<WordId> lower;
    for (WordId w : form_.algebra().words_of_degree(beta)) {
      if (w != top) lower.push_back(w);
    }
    const std::size_t n = lower.size();
    RMatrix gt(n, std::vector<RatFunc>(n));
    std::vector<RatFunc> rhs(n);
    const FreeElement f_top = FreeElement::word(top, Alphabet::F);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        gt[a][b] = pair_t_words(lower[a], lower[b]);
        gt[b][a] = gt[a][b];
      }
      rhs[a] = -form_.pair(f_top, expand_t_word(lower[a]));
    }
    // Solve block by block over the connected components of the nonzero pattern.
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
          if (comp[v] < 0 && !gt[u][v].is_zero()) {
            comp[v] = ncomp;
            stack.push_back(v);
          }
        }
      }
      ++ncomp;
    }
    std::vector<RatFunc> y(n);
    for (int c = 0; c < ncomp; ++c) {
      std::vector<std::size_t> idx;
      for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] == c) idx.push_back(s);
      }
      const std::size_t m = idx.size();
      RMatrix block(m, std::vector<RatFunc>(m));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) block[a][b] = gt[idx[a]][idx[b]];
      }
      const ColumnBasis cb = column_basis_symmetric(block);
      if (cb.rank() < static_cast<int>(m)) e.canonical_lift = true;
      const std::size_t r = cb.pivots.size();
      if (r == 0) continue;
      RMatrix app(r, std::vector<RatFunc>(r));
      RMatrix col(r, std::vector<RatFunc>(1));
      for (std::size_t a = 0; a < r; ++a) {
        const auto pa = static_cast<std::size_t>(cb.pivots[a]);
        for (std::size_t b = 0; b < r; ++b) app[a][b] = block[pa][static_cast<std::size_t>(cb.pivots[b])];
        col[a][0] = rhs[idx[pa]];
      }
      std::optional<RMatrix> sol = solve_fraction_free(app, col);
      if (!sol) throw Error(ErrorCode::InconsistentSystem, "singular pivot block");
      for (std::size_t a = 0; a < r; ++a) y[idx[static_cast<std::size_t>(cb.pivots[a])]] = (*sol)[a][0];
      // The pivot rows were solved; the remaining rows must follow.
      for (std::size_t a = 0; a < m; ++a) {
        RatFunc s;
        for (std::size_t b = 0; b < r; ++b) {
          const auto pb = static_cast<std::size_t>(cb.pivots[b]);
          if (!block[a][pb].is_zero()) s += block[a][pb] * (*sol)[b][0];
        }
        if (s != rhs[idx[a]]) {
          throw Error(ErrorCode::InconsistentSystem, "orthogonality system for t(" + std::to_string(i) + "," +
                                                         std::to_string(l) + ") has no solution");
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!y[a].is_zero()) e.t += expand_t_word(lower[a]) * y[a];
    }
  }
  e.tau = form_.pair(e.t, FreeElement::word(top, Alphabet::F));
  return e;
}

RatFunc Primitives::pair_t_words(WordId x, WordId y) {
  if (x == kEmptyWord || y == kEmptyWord) return RatFunc(x == y ? 1 : 0);
  FreeAlgebra& alg = form_.algebra();
  if (alg.degree(x) != alg.degree(y)) return RatFunc(0);
  const std::uint64_t key = TensorElement::key(x, y);
  if (auto it = t_pair_cache_.find(key); it != t_pair_cache_.end()) return it->second;
  const Letter a = word_letters(x).front();
  const WordId rest = word_suffix(x, 1);
  const RatFunc tau_a = entry(a.i, a.l).tau;
  RatFunc out;
  const FreeElement dy = alg.derivation(Side::Left, a.i, a.l, FreeElement::word(y, Alphabet::T));
  for (const auto& [w, c] : dy.terms()) {
    RatFunc p = pair_t_words(rest, w);
    if (!p.is_zero()) out += c * p;
  }
  out *= tau_a;
  t_pair_cache_.emplace(key, out);
  t_pair_cache_.emplace(TensorElement::key(y, x), out);
  return out;
}

const PrimitiveEntry& Primitives::entry(int i, int l) {
  const Letter key{i, l};
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  PrimitiveEntry e = compute(i, l);
  return entries_.emplace(key, std::move(e)).first->second;
}

RatFunc Primitives::tau(int i, int l) {
  const RatFunc& v = entry(i, l).tau;
  if (v.is_zero()) {
    throw Error(ErrorCode::ZeroTau, "tau(" + std::to_string(i) + "," + std::to_string(l) + ") vanishes");
  }
  return v;
}

const FreeElement& Primitives::expand_t_word(WordId w) {
  if (auto it = expansion_cache_.find(w); it != expansion_cache_.end()) return it->second;
  FreeElement out = FreeElement::one(Alphabet::F);
  for (const Letter& x : word_letters(w)) out = out * t(x.i, x.l);
  return expansion_cache_.emplace(w, std::move(out)).first->second;
}

FreeElement Primitives::to_f(const FreeElement& x) {
  if (x.alphabet() != Alphabet::T && x.alphabet() != Alphabet::S) {
    throw Error(ErrorCode::AlphabetMismatch, "expected a t- or s-alphabet element");
  }
  FreeElement out(Alphabet::F);
  for (const auto& [w, c] : x.terms()) out += expand_t_word(w) * c;
  return x.alphabet() == Alphabet::S ? out.relabeled(Alphabet::E) : out;
}

FreeElement Primitives::to_t(const FreeElement& x) {
  if (x.alphabet() != Alphabet::F && x.alphabet() != Alphabet::E) {
    throw Error(ErrorCode::AlphabetMismatch, "expected an f- or e-alphabet element");
  }
  // f_w = t_w - sum_{u > w} c_u f_u, where expand(t_w) = f_w + sum c_u f_u.
  auto word_inverse = [this](auto&& self, WordId w) -> const FreeElement& {
    if (auto it = inverse_cache_.find(w); it != inverse_cache_.end()) return it->second;
    FreeElement out = FreeElement::word(w, Alphabet::T);
    for (const auto& [u, c] : expand_t_word(w).terms()) {
      if (u == w) continue;
      out -= self(self, u) * c;
    }
    return inverse_cache_.emplace(w, std::move(out)).first->second;
  };
  FreeElement out(Alphabet::T);
  for (const auto& [w, c] : x.terms()) out += word_inverse(word_inverse, w) * c;
  return x.alphabet() == Alphabet::E ? out.relabeled(Alphabet::S) : out;
}

FreeElement Primitives::divided_power(int i, int n) {
  const CartanDatum& d = datum();
  if (!d.is_real(i)) throw Error(ErrorCode::NotRealIndex, "divided powers need a real index");
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative divided power");
  FreeElement out = FreeElement::one(Alphabet::F);
  const FreeElement f = FreeElement::letter(i, 1, Alphabet::F);
  for (int k = 0; k < n; ++k) out = out * f;
  return out * q_factorial(n, d.qi_exp(i)).inverse();
}

FreeElement Primitives::serre_relation(int i, int j, int l) {
  const CartanDatum& d = datum();
  if (!d.is_real(i)) throw Error(ErrorCode::NotRealIndex, "Serre relations need a real index i");
  if (j == i) throw Error(ErrorCode::OutOfRange, "Serre relation needs j != i");
  const int n = 1 - l * d.a(i, j);
  const FreeElement& tj = t(j, l);
  FreeElement out(Alphabet::F);
  for (int p = 0; p <= n; ++p) {
    FreeElement term = divided_power(i, p) * tj * divided_power(i, n - p);
    if (p % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

SerreResult Primitives::serre_check(int i, int j, int l) {
  SerreResult res;
  res.relation = serre_relation(i, j, l);
  const CartanDatum& d = datum();
  res.degree = RootVector::simple(d.rank(), i, 1 - l * d.a(i, j)) + RootVector::simple(d.rank(), j, l);
  const GramData& g = form_.gram(res.degree);
  res.words = g.words;
  res.pairings = form_.pairing_certificate(res.relation, res.degree);
  res.ok = all_zero(res.pairings);
  return res;
}

std::vector<PropertyCheck> Primitives::check_properties(int i, int l) {
  const PrimitiveEntry& e = entry(i, l);
  const CartanDatum& d = datum();
  const WordId top = letter_word(i, l);
  std::vector<PropertyCheck> out;

  PropertyCheck orth{"orthogonality", true, "exact"};
  for (WordId z : form_.algebra().words_of_degree(RootVector::simple(d.rank(), i, l))) {
    if (z == top) continue;
    if (!form_.pair(e.t, FreeElement::word(z, Alphabet::F)).is_zero()) {
      orth.ok = false;
      orth.detail = "nonzero pairing with a lower word";
      break;
    }
  }
  out.push_back(orth);

  PropertyCheck norm{"normalization", e.t.coeff(top) == RatFunc(1), "exact"};
  for (const auto& [w, c] : e.t.terms()) {
    if (w == top) continue;
    for (const Letter& x : word_letters(w)) {
      if (x.i != i || x.l >= l) norm.ok = false;
    }
  }
  if (!norm.ok) norm.detail = "leading coefficient or support wrong";
  out.push_back(norm);

  PropertyCheck eta{"eta-invariance", true, "exact"};
  const FreeElement diff = e.t.bar() - e.t;
  if (!diff.is_zero()) {
    eta.ok = form_.in_radical(diff);
    eta.detail = eta.ok ? "mod radical" : "bar(t) - t is not in the radical";
  }
  out.push_back(eta);

  PropertyCheck prim{"delta-primitivity", true, "exact"};
  const FreeElement one = FreeElement::one(Alphabet::F);
  TensorElement dd = form_.algebra().delta(e.t) - TensorElement::pure(e.t, one) - TensorElement::pure(one, e.t);
  if (!dd.is_zero()) {
    prim.ok = tensor_in_radical(form_, dd);
    prim.detail = prim.ok ? "mod radical" : "delta(t) - t(x)1 - 1(x)t is not in the radical";
  }
  out.push_back(prim);
  return out;
}

bool tensor_in_radical(LForm& form, const TensorElement& x) {
  FreeAlgebra& alg = form.algebra();
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::map<Key, std::vector<std::pair<std::uint64_t, RatFunc>>> groups;
  for (const auto& [k, c] : x.raw()) {
    groups[{alg.degree(TensorElement::first(k)).k, alg.degree(TensorElement::second(k)).k}].emplace_back(k, c);
  }
  for (const auto& [deg, terms] : groups) {
    const std::vector<WordId> us = words_or_empty(alg, RootVector(deg.first));
    const std::vector<WordId> vs = words_or_empty(alg, RootVector(deg.second));
    // y[u][b] = sum over terms a (x) b of c (a, u).
    std::vector<std::unordered_map<WordId, RatFunc>> y(us.size());
    for (const auto& [k, c] : terms) {
      const WordId a = TensorElement::first(k);
      const WordId b = TensorElement::second(k);
      for (std::size_t u = 0; u < us.size(); ++u) {
        RatFunc p = form.pair_words(a, us[u]);
        if (p.is_zero()) continue;
        y[u][b] += c * p;
      }
    }
    for (std::size_t u = 0; u < us.size(); ++u) {
      for (WordId v : vs) {
        RatFunc s;
        for (const auto& [b, c] : y[u]) {
          if (c.is_zero()) continue;
          RatFunc p = form.pair_words(b, v);
          if (!p.is_zero()) s += c * p;
        }
        if (!s.is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace qbb
