#include "qbb/modules.hpp"

#include <algorithm>

#include "qbb/error.hpp"

namespace qbb {

namespace {

constexpr const char* kQuotientAssumption =
    "irreducibility of the quantum quotient is assumed; only its classical counterpart is known to be V(lambda)";

WordId power_word(int i, int n) { return intern_word(std::vector<Letter>(static_cast<std::size_t>(n), Letter{i, 1})); }

void require_dominant(const Weight& lambda) {
  for (std::size_t i = 0; i < lambda.h.size(); ++i) {
    if (lambda.h[i] < 0) {
      throw Error(ErrorCode::NotDominant, "lambda(h_" + std::to_string(i) + ") = " + std::to_string(lambda.h[i]) + " is negative");
    }
  }
}

// All delta with 0 <= delta <= bound coordinatewise.
std::vector<RootVector> sub_degrees(const RootVector& bound) {
  std::vector<RootVector> out{RootVector::zero(static_cast<int>(bound.k.size()))};
  for (std::size_t i = 0; i < bound.k.size(); ++i) {
    std::vector<RootVector> next;
    for (const RootVector& d : out) {
      for (int c = 0; c <= bound.k[i]; ++c) {
        RootVector e = d;
        e.k[i] = c;
        next.push_back(e);
      }
    }
    out = std::move(next);
  }
  return out;
}

ClassicalVector sandwich(WordId x, const ClassicalVector& r, WordId y) {
  ClassicalVector out;
  for (const auto& [w, c] : r) out[concat(concat(x, w), y)] += c;
  return out;
}

}  // namespace

bool DimTable::equal() const {
  return std::all_of(rows.begin(), rows.end(), [](const WeightRow& r) { return r.classical == r.quantum; });
}

std::string mode_name(ModuleMode m) { return m == ModuleMode::Verma ? "verma" : "quotient"; }

ModuleEngine::ModuleEngine(Straightener& st, Primitives& prim) : st_(st), prim_(prim) {}

int ModuleEngine::toral_value(const Weight& lambda, const std::vector<int>& key) {
  const std::size_t n = lambda.h.size();
  int v = 0;
  for (std::size_t k = 0; k < n; ++k) v += key[k] * lambda.h[k] + key[n + k] * lambda.d[k];
  return v;
}

std::vector<RootVector> ModuleEngine::degrees(int depth, std::vector<RootVector>* omitted) const {
  const CartanDatum& d = datum();
  const int n = d.rank();
  std::vector<RootVector> out;
  for (int ht = 0; ht <= depth; ++ht) {
    std::vector<RootVector> level;
    RootVector cur = RootVector::zero(n);
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == n - 1) {
        cur.k[static_cast<std::size_t>(i)] = left;
        level.push_back(cur);
        return;
      }
      for (int c = left; c >= 0; --c) {
        cur.k[static_cast<std::size_t>(i)] = c;
        self(self, i + 1, left - c);
      }
    };
    rec(rec, 0, ht);
    for (const RootVector& beta : level) {
      bool within = true;
      for (int i = 0; i < n; ++i) {
        if (d.is_imaginary(i) && beta.k[static_cast<std::size_t>(i)] > d.cutoff(i)) within = false;
      }
      if (within) {
        out.push_back(beta);
      } else if (omitted != nullptr) {
        omitted->push_back(beta);
      }
    }
  }
  return out;
}

std::vector<std::pair<FreeElement, RootVector>> ModuleEngine::quantum_generators(const Weight& lambda) {
  require_dominant(lambda);
  const CartanDatum& d = datum();
  std::vector<std::pair<FreeElement, RootVector>> out;
  for (int i = 0; i < d.rank(); ++i) {
    const int v = lambda.h[static_cast<std::size_t>(i)];
    if (d.is_real(i)) {
      out.emplace_back(FreeElement::word(power_word(i, v + 1), Alphabet::F), RootVector::simple(d.rank(), i, v + 1));
    } else if (v == 0) {
      for (int k = 1; k <= d.cutoff(i); ++k) out.emplace_back(prim_.t(i, k), RootVector::simple(d.rank(), i, k));
    }
  }
  return out;
}

std::vector<std::pair<ClassicalVector, RootVector>> ModuleEngine::classical_generators(const Weight& lambda) const {
  require_dominant(lambda);
  const CartanDatum& d = datum();
  std::vector<std::pair<ClassicalVector, RootVector>> out;
  for (int i = 0; i < d.rank(); ++i) {
    const int v = lambda.h[static_cast<std::size_t>(i)];
    if (d.is_real(i)) {
      out.emplace_back(ClassicalVector{{power_word(i, v + 1), Rational(1)}}, RootVector::simple(d.rank(), i, v + 1));
    } else if (v == 0) {
      for (int k = 1; k <= d.cutoff(i); ++k) {
        out.emplace_back(ClassicalVector{{letter_word(i, k), Rational(1)}}, RootVector::simple(d.rank(), i, k));
      }
    }
  }
  return out;
}

void ModuleEngine::quantum_row(WeightRow& row, const Weight& lambda, ModuleMode mode) {
  LForm& form = st_.form();
  const GramData& g = form.gram(row.beta);
  const std::vector<WordId> pivots = g.pivot_words();
  if (mode == ModuleMode::Verma) {
    row.quantum = g.rank();
    row.basis = pivots;
    return;
  }
  std::vector<std::vector<RatFunc>> sub;
  for (const auto& [gen, gamma] : quantum_generators(lambda)) {
    const RootVector rest = row.beta - gamma;
    if (!rest.is_positive()) continue;
    for (WordId b : form.gram(rest).pivot_words()) {
      sub.push_back(form.reduce_coords(FreeElement::word(b, Alphabet::F) * gen, row.beta));
    }
  }
  const std::size_t r = pivots.size();
  if (sub.empty()) {
    row.quantum = static_cast<int>(r);
    row.basis = pivots;
    return;
  }
  // Columns: the submodule vectors, then the unit vectors of the pivot basis.
  RMatrix m(r, std::vector<RatFunc>(sub.size() + r));
  for (std::size_t c = 0; c < sub.size(); ++c) {
    for (std::size_t k = 0; k < r; ++k) m[k][c] = sub[c][k];
  }
  for (std::size_t k = 0; k < r; ++k) m[k][sub.size() + k] = RatFunc(1);
  const ColumnBasis cb = column_basis(m);
  row.basis.clear();
  for (int p : cb.pivots) {
    if (static_cast<std::size_t>(p) >= sub.size()) row.basis.push_back(pivots[static_cast<std::size_t>(p) - sub.size()]);
  }
  row.quantum = static_cast<int>(row.basis.size());
}

const std::vector<std::pair<ClassicalVector, RootVector>>& ModuleEngine::classical_relations() {
  if (relations_ready_) return relations_;
  const CartanDatum& d = datum();
  const int n = d.rank();
  auto levels = [&](int i) { return d.is_real(i) ? 1 : d.cutoff(i); };
  for (int i = 0; i < n; ++i) {
    if (!d.is_real(i)) continue;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int l = 1; l <= levels(j); ++l) {
        const int m = 1 - l * d.a(i, j);
        ClassicalVector rel;
        Rational binom = 1;
        for (int k = 0; k <= m; ++k) {
          const WordId w = concat(concat(power_word(i, m - k), letter_word(j, l)), power_word(i, k));
          rel[w] += (k % 2 == 0) ? binom : Rational(-binom);
          binom = binom * (m - k) / (k + 1);
        }
        relations_.emplace_back(rel, RootVector::simple(n, i, m) + RootVector::simple(n, j, l));
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (d.a(i, j) != 0) continue;
      for (int k = 1; k <= levels(i); ++k) {
        for (int l = (i == j ? k + 1 : 1); l <= levels(j); ++l) {
          const WordId a = letter_word(i, k);
          const WordId b = letter_word(j, l);
          ClassicalVector rel{{concat(a, b), Rational(1)}};
          rel[concat(b, a)] -= Rational(1);
          relations_.emplace_back(rel, RootVector::simple(n, i, k) + RootVector::simple(n, j, l));
        }
      }
    }
  }
  relations_ready_ = true;
  return relations_;
}

std::vector<ClassicalVector> ModuleEngine::classical_ideal(const RootVector& beta) {
  auto it = ideal_cache_.find(beta);
  if (it != ideal_cache_.end()) return it->second;
  FreeAlgebra& alg = st_.form().algebra();
  std::vector<ClassicalVector> out;
  for (const auto& [rel, gamma] : classical_relations()) {
    const RootVector rest = beta - gamma;
    if (!rest.is_positive()) continue;
    for (const RootVector& left : sub_degrees(rest)) {
      const std::vector<WordId> xs = alg.words_of_degree(left);
      const std::vector<WordId>& ys = alg.words_of_degree(rest - left);
      for (WordId x : xs) {
        for (WordId y : ys) out.push_back(sandwich(x, rel, y));
      }
    }
  }
  return ideal_cache_.emplace(beta, std::move(out)).first->second;
}

int ModuleEngine::classical_dim(const RootVector& beta, const Weight& lambda, ModuleMode mode) {
  FreeAlgebra& alg = st_.form().algebra();
  const std::vector<WordId> words = alg.words_of_degree(beta);
  std::vector<ClassicalVector> rows = classical_ideal(beta);
  if (mode == ModuleMode::Quotient) {
    for (const auto& [gen, gamma] : classical_generators(lambda)) {
      const RootVector rest = beta - gamma;
      if (!rest.is_positive()) continue;
      for (WordId x : alg.words_of_degree(rest)) rows.push_back(sandwich(x, gen, kEmptyWord));
    }
  }
  if (rows.empty()) return static_cast<int>(words.size());
  std::unordered_map<WordId, std::size_t> index;
  for (std::size_t k = 0; k < words.size(); ++k) index[words[k]] = k;
  QMatrix m(rows.size(), std::vector<Rational>(words.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [w, c] : rows[r]) m[r][index.at(w)] += c;
  }
  return static_cast<int>(words.size() - pivot_columns(std::move(m)).size());
}

DimTable ModuleEngine::table(const Weight& lambda, int depth, ModuleMode mode, bool classical) {
  if (depth > st_.form().max_ht()) {
    throw Error(ErrorCode::DegreeTooLarge, "depth " + std::to_string(depth) + " exceeds max_ht " + std::to_string(st_.form().max_ht()));
  }
  if (mode == ModuleMode::Quotient) require_dominant(lambda);
  DimTable t;
  t.lambda = lambda;
  t.mode = mode;
  t.depth = depth;
  if (mode == ModuleMode::Quotient) t.assumption = kQuotientAssumption;
  for (const RootVector& beta : degrees(depth, &t.omitted)) {
    WeightRow row;
    row.beta = beta;
    row.mu = lambda - datum().root_as_weight(beta);
    quantum_row(row, lambda, mode);
    if (classical) row.classical = classical_dim(beta, lambda, mode);
    t.rows.push_back(std::move(row));
  }
  return t;
}

DimTable ModuleEngine::verma_dims(const Weight& lambda, int depth) { return table(lambda, depth, ModuleMode::Verma, false); }

DimTable ModuleEngine::hw_quotient_dims(const Weight& lambda, int depth) {
  return table(lambda, depth, ModuleMode::Quotient, false);
}

DimTable ModuleEngine::char_compare(const Weight& lambda, int depth, ModuleMode mode) { return table(lambda, depth, mode, true); }

FreeElement ModuleEngine::apply(const NormalForm& a, const FreeElement& x, const Weight& lambda) {
  const NormalForm prod = st_.multiply(a, st_.from_free(x));
  FreeElement out(Alphabet::F);
  for (const auto& [m, c] : prod.terms()) {
    if (m.e == kEmptyWord) out.add_term(m.f, c * RatFunc::q_power(toral_value(lambda, m.h)));
  }
  return out;
}

FreeElement ModuleEngine::e_action(int i, int l, const FreeElement& x, const Weight& lambda) {
  return apply(st_.e(i, l), x, lambda);
}

std::vector<ModuleCheck> ModuleEngine::check_actions(const Weight& lambda, int depth) {
  const CartanDatum& d = datum();
  const int n = d.rank();
  LForm& form = st_.form();
  std::vector<Letter> letters;
  for (int i = 0; i < n; ++i) {
    for (int l = 1; l <= (d.is_real(i) ? 1 : d.cutoff(i)); ++l) letters.push_back(Letter{i, l});
  }
  std::vector<Coweight> units;
  for (int k = 0; k < 2 * n; ++k) {
    Coweight h = Coweight::zero(n);
    (k < n ? h.a : h.b)[static_cast<std::size_t>(k % n)] = 1;
    units.push_back(h);
  }
  const DimTable verma = verma_dims(lambda, depth);

  ModuleCheck toral{"toral action is q^{mu(h)} on weight spaces", true, ""};
  ModuleCheck shift{"e_il maps V_mu to V_{mu + l alpha_i}", true, ""};
  for (const WeightRow& row : verma.rows) {
    for (WordId w : row.basis) {
      const FreeElement x = FreeElement::word(w, Alphabet::F);
      for (const Coweight& h : units) {
        const FreeElement got = apply(st_.toral(h), x, lambda);
        if (got != form.reduce(x) * RatFunc::q_power(CartanDatum::pair(row.mu, h)) && toral.ok) {
          toral.ok = false;
          toral.detail = word_string(w, Alphabet::F, d);
        }
      }
      for (const Letter& a : letters) {
        const RootVector target = row.beta - RootVector::simple(n, a.i, a.l);
        const FreeElement y = e_action(a.i, a.l, x, lambda);
        for (const auto& [v, c] : y.terms()) {
          if ((!target.is_positive() || form.algebra().degree(v) != target) && shift.ok) {
            shift.ok = false;
            shift.detail = word_string(w, Alphabet::F, d);
          }
        }
      }
    }
  }

  ModuleCheck top{"e_il v_lambda = 0", true, ""};
  for (const Letter& a : letters) {
    if (!e_action(a.i, a.l, FreeElement::one(Alphabet::F), lambda).is_zero()) top.ok = false;
  }

  std::vector<ModuleCheck> out{toral, shift, top};
  bool dominant = std::all_of(lambda.h.begin(), lambda.h.end(), [](int v) { return v >= 0; });
  if (dominant) {
    ModuleCheck singular{"quotient generators are singular vectors", true, ""};
    for (const auto& [g, gamma] : quantum_generators(lambda)) {
      if (gamma.ht() > form.max_ht()) continue;
      for (const Letter& a : letters) {
        if (!form.reduce(e_action(a.i, a.l, g, lambda)).is_zero() && singular.ok) {
          singular.ok = false;
          singular.detail = "e(" + d.names()[static_cast<std::size_t>(a.i)] + "," + std::to_string(a.l) + ") on " + g.to_string(d);
        }
      }
    }
    out.push_back(singular);
  }
  return out;
}

}  // namespace qbb
