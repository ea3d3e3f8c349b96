#include "qbb/lform.hpp"

namespace qbb {

NuParams NuParams::defaults(const CartanDatum& datum) {
  NuParams p;
  for (int i = 0; i < datum.rank(); ++i) {
    for (int l = 1; l <= datum.cutoff(i); ++l) p.set(i, l, RatFunc(1) + RatFunc::q_power(l * datum.r(i)));
  }
  return p;
}

RatFunc NuParams::nu(const CartanDatum& datum, int i, int l) const {
  auto it = values_.find(Letter{i, l});
  if (it != values_.end()) return it->second;
  return RatFunc(1) + RatFunc::q_power(l * datum.r(i));
}

std::vector<Rational> series_at_zero(const RatFunc& f, int terms) {
  if (f.num().low() < 0 && !f.is_zero()) throw Error(ErrorCode::NotRegular, "pole at q = 0");
  const Laurent& n = f.num();
  const Laurent& d = f.den();
  const Rational d0 = d.coeff(0);
  std::vector<Rational> c(static_cast<std::size_t>(terms), Rational(0));
  for (int k = 0; k < terms; ++k) {
    Rational v = n.coeff(k);
    for (int j = 1; j <= k && j <= d.high(); ++j) v -= d.coeff(j) * c[static_cast<std::size_t>(k - j)];
    c[static_cast<std::size_t>(k)] = v / d0;
  }
  return c;
}

std::vector<Diagnostic> check_nu_assumption(const RatFunc& nu, const std::string& label, int series_terms) {
  std::vector<Diagnostic> out;
  auto bad = [&](const std::string& why) {
    out.push_back({ErrorCode::ValidationError, "nu " + label + " = " + nu.to_string() + " " + why});
  };
  if (nu.is_zero()) {
    bad("must be nonzero");
    return out;
  }
  if (nu.num().low() < 0) {
    bad("has a pole at q = 0");
    return out;
  }
  std::vector<Rational> coeffs;
  if (nu.is_laurent()) {
    for (int e = 0; e <= nu.num().high(); ++e) coeffs.push_back(nu.num().coeff(e));
  } else {
    coeffs = series_at_zero(nu, series_terms);
  }
  if (coeffs.empty() || coeffs[0] != 1) {
    bad("must have constant term 1");
    return out;
  }
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    if (coeffs[k] < 0 || coeffs[k].get_den() != 1) {
      bad("has series coefficient " + coeffs[k].get_str() + " at q^" + std::to_string(k) +
          ", outside the nonnegative integers");
      break;
    }
  }
  return out;
}

std::vector<WordId> GramData::pivot_words() const {
  std::vector<WordId> out;
  for (int p : basis.pivots) out.push_back(words[static_cast<std::size_t>(p)]);
  return out;
}

std::vector<FreeElement> GramData::radical_basis(Alphabet a) const {
  std::vector<FreeElement> out;
  std::vector<bool> is_pivot(words.size(), false);
  for (int p : basis.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (std::size_t j = 0; j < words.size(); ++j) {
    if (is_pivot[j]) continue;
    FreeElement v = FreeElement::word(words[j], a);
    for (std::size_t k = 0; k < basis.pivots.size(); ++k) {
      v.add_term(words[static_cast<std::size_t>(basis.pivots[k])], -basis.coords[k][j]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

LForm::LForm(const CartanDatum& datum, NuParams nu) : alg_(datum), nu_(std::move(nu)) {}

RatFunc LForm::pair_words(WordId x, WordId y) {
  if (x == kEmptyWord || y == kEmptyWord) return (x == y) ? RatFunc(1) : RatFunc(0);
  const std::uint64_t key = TensorElement::key(x, y);
  if (auto it = pair_cache_.find(key); it != pair_cache_.end()) return it->second;
  if (auto it = pair_cache_.find(TensorElement::key(y, x)); it != pair_cache_.end()) return it->second;

  RatFunc result;
  if (alg_.degree(x) == alg_.degree(y)) {
    const auto& ylet = word_letters(y);
    const auto& xlet = word_letters(x);
    if (ylet.size() == 1) {
      if (xlet.size() == 1) {
        result = nu(ylet[0].i, ylet[0].l);
      } else {
        result = pair_words(y, x);
      }
    } else {
      const Letter a = ylet[0];
      const WordId aw = letter_word(a.i, a.l);
      const WordId rest = word_suffix(y, 1);
      const TensorElement& d = alg_.delta_word(x);
      for (const auto& [k, c] : d.raw()) {
        const WordId x1 = TensorElement::first(k);
        if (x1 == kEmptyWord) continue;
        // x1 must have degree l alpha_i: all letters index a.i, levels summing to a.l.
        int total = 0;
        bool ok = true;
        for (const auto& b : word_letters(x1)) {
          if (b.i != a.i) {
            ok = false;
            break;
          }
          total += b.l;
        }
        if (!ok || total != a.l) continue;
        RatFunc p1 = pair_words(x1, aw);
        if (p1.is_zero()) continue;
        RatFunc p2 = pair_words(TensorElement::second(k), rest);
        if (p2.is_zero()) continue;
        result += c * p1 * p2;
      }
    }
  }
  pair_cache_.emplace(key, result);
  return result;
}

RatFunc LForm::pair(const FreeElement& x, const FreeElement& y) {
  RatFunc s;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      RatFunc p = pair_words(a, b);
      if (!p.is_zero()) s += ca * cb * p;
    }
  }
  return s;
}

RatFunc LForm::pair_tensor(const TensorElement& x, const TensorElement& y) {
  RatFunc s;
  for (const auto& [ka, ca] : x.raw()) {
    for (const auto& [kb, cb] : y.raw()) {
      RatFunc p1 = pair_words(TensorElement::first(ka), TensorElement::first(kb));
      if (p1.is_zero()) continue;
      RatFunc p2 = pair_words(TensorElement::second(ka), TensorElement::second(kb));
      if (p2.is_zero()) continue;
      s += ca * cb * p1 * p2;
    }
  }
  return s;
}

const GramData& LForm::gram(const RootVector& beta) {
  if (auto it = gram_cache_.find(beta.k); it != gram_cache_.end()) return *it->second;
  if (beta.ht() > max_ht_) {
    throw Error(ErrorCode::DegreeTooLarge,
                "height " + std::to_string(beta.ht()) + " exceeds max_ht " + std::to_string(max_ht_));
  }
  auto g = std::make_unique<GramData>();
  g->beta = beta;
  g->words = alg_.words_of_degree(beta);
  const std::size_t n = g->words.size();
  for (std::size_t j = 0; j < n; ++j) g->index.emplace(g->words[j], static_cast<int>(j));
  g->gram.assign(n, std::vector<RatFunc>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      g->gram[a][b] = pair_words(g->words[a], g->words[b]);
      g->gram[b][a] = g->gram[a][b];
    }
  }
  g->basis = column_basis_symmetric(g->gram);
  return *gram_cache_.emplace(beta.k, std::move(g)).first->second;
}

std::map<std::vector<int>, FreeElement> LForm::homogeneous_parts(const FreeElement& x) const {
  std::map<std::vector<int>, FreeElement> parts;
  for (const auto& [w, c] : x.terms()) {
    auto [it, inserted] = parts.try_emplace(alg_.degree(w).k, x.alphabet());
    it->second.add_term(w, c);
  }
  return parts;
}

std::vector<RatFunc> LForm::reduce_coords(const FreeElement& x, const RootVector& beta) {
  const GramData& g = gram(beta);
  std::vector<RatFunc> coords(static_cast<std::size_t>(g.rank()));
  for (const auto& [w, c] : x.terms()) {
    auto it = g.index.find(w);
    if (it == g.index.end()) throw Error(ErrorCode::OutOfRange, "word outside the requested degree");
    const auto j = static_cast<std::size_t>(it->second);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      const RatFunc& r = g.basis.coords[k][j];
      if (!r.is_zero()) coords[k] += c * r;
    }
  }
  return coords;
}

FreeElement LForm::reduce(const FreeElement& x) {
  FreeElement out(x.alphabet());
  for (const auto& [deg, part] : homogeneous_parts(x)) {
    RootVector beta(deg);
    if (beta.is_zero()) {
      out += part;
      continue;
    }
    const std::vector<RatFunc> coords = reduce_coords(part, beta);
    const GramData& g = gram(beta);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      out.add_term(g.words[static_cast<std::size_t>(g.basis.pivots[k])], coords[k]);
    }
  }
  return out;
}

std::vector<RatFunc> LForm::pairing_certificate(const FreeElement& x, const RootVector& beta) {
  const GramData& g = gram(beta);
  std::vector<RatFunc> out(g.words.size());
  for (const auto& [w, c] : x.terms()) {
    auto it = g.index.find(w);
    if (it == g.index.end()) throw Error(ErrorCode::OutOfRange, "word outside the requested degree");
    const auto j = static_cast<std::size_t>(it->second);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!g.gram[j][i].is_zero()) out[i] += c * g.gram[j][i];
    }
  }
  return out;
}

bool LForm::in_radical(const FreeElement& x) {
  for (const auto& [deg, part] : homogeneous_parts(x)) {
    RootVector beta(deg);
    if (beta.is_zero()) {
      if (!part.is_zero()) return false;
      continue;
    }
    for (const auto& v : pairing_certificate(part, beta)) {
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace qbb
