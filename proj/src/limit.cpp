#include "qbb/limit.hpp"

#include <algorithm>
#include <functional>

#include "qbb/error.hpp"

namespace qbb {

A1Scalar A1Scalar::check(const RatFunc& f) { return A1Scalar{f, f.is_regular_at_one()}; }

Rational A1Scalar::limit() const {
  if (!regular) throw Error(ErrorCode::RegularityFailure, value.to_string() + " is not regular at q = 1");
  return value.limit_at_one();
}

bool A1Scalar::in_J1() const { return regular && value.limit_at_one() == 0; }

namespace {

RatFunc q_minus_one() { return RatFunc::q_power(1) - RatFunc(1); }

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Lagrange basis polynomial in variable var for the node a among 0..d.
MPoly lagrange(int var, int a, int d) {
  MPoly p(1);
  for (int b = 0; b <= d; ++b) {
    if (b == a) continue;
    p *= (MPoly::variable(var) - MPoly(b)) * MPoly(Rational(1) / Rational(a - b));
  }
  return p;
}

}  // namespace

MPoly toral_limit(const ToralTerms& terms) {
  if (terms.empty()) return MPoly();
  const std::size_t nvars = terms.front().first.size();
  int d = 0;
  std::vector<int> active;
  for (const auto& [key, c] : terms) {
    if (c.is_zero()) continue;
    d = std::max(d, -c.valuation_at_one());
  }
  for (std::size_t k = 0; k < nvars; ++k) {
    if (std::any_of(terms.begin(), terms.end(), [&](const auto& t) { return t.first[k] != 0; })) active.push_back(static_cast<int>(k));
  }
  std::vector<std::vector<MPoly>> basis;
  for (int v : active) {
    std::vector<MPoly> row;
    for (int a = 0; a <= d; ++a) row.push_back(lagrange(v, a, d));
    basis.push_back(std::move(row));
  }
  MPoly out;
  std::vector<int> mu(nvars, 0);
  std::vector<int> node(active.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < active.size(); ++k) mu[static_cast<std::size_t>(active[k])] = node[k];
    RatFunc sum;
    for (const auto& [key, c] : terms) sum += c.shifted(dot(key, mu));
    const auto value = sum.try_limit_at_one();
    if (!value) {
      std::string at;
      for (int m : mu) at += (at.empty() ? "" : ",") + std::to_string(m);
      throw Error(ErrorCode::NotRegular, sum.to_string() + " at weight (" + at + ")");
    }
    if (*value != 0) {
      MPoly term(*value);
      for (std::size_t k = 0; k < active.size(); ++k) term *= basis[k][static_cast<std::size_t>(node[k])];
      out += term;
    }
    std::size_t k = 0;
    while (k < node.size() && node[k] == d) node[k++] = 0;
    if (k == node.size()) break;
    ++node[k];
  }
  return out;
}

void ClassicalElement::add_term(WordId f, WordId e, const MPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.emplace(std::make_pair(f, e), p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ClassicalElement& ClassicalElement::operator+=(const ClassicalElement& o) {
  for (const auto& [k, p] : o.terms_) add_term(k.first, k.second, p);
  return *this;
}

ClassicalElement& ClassicalElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, p] : terms_) p *= MPoly(c);
  return *this;
}

namespace {

std::vector<std::string> toral_names(const CartanDatum& datum, int copies) {
  std::vector<std::string> names;
  for (int c = 0; c < copies; ++c) {
    const std::string suffix = copies == 1 ? "" : (c == 0 ? "_1" : "_2");
    for (const auto& n : datum.names()) names.push_back("h(" + n + ")" + suffix);
    for (const auto& n : datum.names()) names.push_back("d(" + n + ")" + suffix);
  }
  return names;
}

}  // namespace

std::string ClassicalElement::to_string(const CartanDatum& datum) const {
  if (is_zero()) return "0";
  std::vector<std::pair<std::pair<WordId, WordId>, MPoly>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    if (x.first.first != y.first.first) return degree_lex_less(x.first.first, y.first.first);
    return degree_lex_less(x.first.second, y.first.second);
  });
  const auto names = toral_names(datum, 1);
  std::string out;
  for (const auto& [k, p] : v) {
    if (!out.empty()) out += " + ";
    std::string body = "(" + p.to_string(names) + ")";
    if (k.first != kEmptyWord) body = word_string(k.first, Alphabet::F, datum) + "*" + body;
    if (k.second != kEmptyWord) body += "*" + word_string(k.second, Alphabet::E, datum);
    out += body;
  }
  return out;
}

A1Form::A1Form(Straightener& st, Primitives& prim) : st_(st), prim_(prim) {}

RatFunc A1Form::rescaling(int i, int l) {
  return prim_.tau(i, l) * (RatFunc::q_power(2 * datum().r(i)) - RatFunc(1));
}

NormalForm A1Form::T(int i, int l) const { return st_.f(i, l); }
NormalForm A1Form::s(int i, int l) const { return st_.e(i, l); }

NormalForm A1Form::qh(const Coweight& h, int n) const {
  const RatFunc inv = RatFunc(1) / q_minus_one();
  return st_.toral(h) * (inv.shifted(n)) - st_.one() * inv;
}

NormalForm A1Form::k_difference(int i, int l) const {
  const RatFunc inv = RatFunc(1) / (RatFunc::q_power(2 * datum().r(i)) - RatFunc(1));
  return (st_.K(i, l) - st_.K(i, -l)) * inv;
}

void A1Form::mul_mono_into(NormalForm& out, const Mono& x, const Mono& y, const RatFunc& c) {
  const NormalForm& mid = mul_st(x.e, y.f);
  for (const auto& [m, cm] : mid.terms()) {
    const int shift = -toral_weight(datum(), m.f, x.h) - toral_weight(datum(), m.e, y.h);
    std::vector<int> h = x.h;
    for (std::size_t k = 0; k < h.size(); ++k) h[k] += m.h[k] + y.h[k];
    out.add_term(Mono{concat(x.f, m.f), std::move(h), concat(m.e, y.e)}, (c * cm).shifted(shift));
  }
}

NormalForm A1Form::multiply(const NormalForm& a, const NormalForm& b) {
  NormalForm out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) mul_mono_into(out, x, y, cx * cy);
  }
  return out;
}

NormalForm A1Form::commutator(const NormalForm& a, const NormalForm& b) { return multiply(a, b) - multiply(b, a); }

const NormalForm& A1Form::mul_st(WordId s_word, WordId t_word) {
  const auto key = std::make_pair(s_word, t_word);
  if (auto it = st_cache_.find(key); it != st_cache_.end()) return it->second;
  const std::vector<int> zero = toral_key(Coweight::zero(datum().rank()));
  NormalForm out;
  if (s_word == kEmptyWord || t_word == kEmptyWord) {
    out = NormalForm::mono(Mono{t_word, zero, s_word});
  } else {
    // s = s' x, T = y T': s T = (s' y) x T' + s' [x, y] T'.
    const auto& sl = word_letters(s_word);
    const Letter x = sl.back();
    const Letter y = word_letters(t_word).front();
    const WordId s_rest = word_prefix(s_word, sl.size() - 1);
    const NormalForm tail = NormalForm::mono(Mono{word_suffix(t_word, 1), zero, kEmptyWord});
    NormalForm first;
    for (const auto& [m, c] : mul_st(s_rest, letter_word(y.i, y.l)).terms()) {
      first.add_term(Mono{m.f, m.h, concat(m.e, letter_word(x.i, x.l))}, c);
    }
    out = multiply(first, tail);
    if (x == y) out += multiply(multiply(NormalForm::mono(Mono{kEmptyWord, zero, s_rest}), k_difference(x.i, x.l)), tail);
  }
  return st_cache_.emplace(key, std::move(out)).first->second;
}

FreeElement A1Form::expand_word(WordId w, bool upper) {
  const auto key = std::make_pair(w, upper);
  if (auto it = expand_cache_.find(key); it != expand_cache_.end()) return it->second;
  FreeElement out = FreeElement::one(Alphabet::F);
  RatFunc scale(1);
  for (const Letter& x : word_letters(w)) {
    out = out * prim_.t(x.i, x.l);
    if (!upper) scale *= rescaling(x.i, x.l);
  }
  out *= RatFunc(1) / scale;
  if (upper) out = out.relabeled(Alphabet::E);
  return expand_cache_.emplace(key, std::move(out)).first->second;
}

NormalForm A1Form::expand(const NormalForm& a) {
  NormalForm out;
  for (const auto& [m, c] : a.terms()) {
    const FreeElement lower = expand_word(m.f, false);
    const FreeElement upper = expand_word(m.e, true);
    for (const auto& [wf, cf] : lower.terms()) {
      for (const auto& [we, ce] : upper.terms()) out.add_term(Mono{wf, m.h, we}, c * cf * ce);
    }
  }
  return st_.reduce(out);
}

namespace {

std::map<std::pair<WordId, WordId>, ToralTerms> group_by_words(const NormalForm& a) {
  std::map<std::pair<WordId, WordId>, ToralTerms> groups;
  for (const auto& [m, c] : a.terms()) groups[{m.f, m.e}].emplace_back(m.h, c);
  return groups;
}

}  // namespace

bool A1Form::is_regular(const NormalForm& a, std::string* witness) const {
  for (const auto& [words, terms] : group_by_words(a)) {
    try {
      toral_limit(terms);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NotRegular) throw;
      if (witness != nullptr) {
        NormalForm part;
        for (const auto& [h, c] : terms) part.add_term(Mono{words.first, h, words.second}, c);
        *witness = part.to_string(datum()) + ": " + err.what();
      }
      return false;
    }
  }
  return true;
}

ClassicalElement A1Form::limit(const NormalForm& a) const {
  ClassicalElement out;
  for (const auto& [words, terms] : group_by_words(a)) {
    try {
      out.add_term(words.first, words.second, toral_limit(terms));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NotRegular) throw;
      throw Error(ErrorCode::RegularityFailure, err.what());
    }
  }
  return out;
}

ClassicalTensor A1Form::limit(const NormalTensor& t) const {
  std::map<std::tuple<WordId, WordId, WordId, WordId>, ToralTerms> groups;
  for (const auto& [k, c] : t.terms()) {
    std::vector<int> key = k.first.h;
    key.insert(key.end(), k.second.h.begin(), k.second.h.end());
    groups[{k.first.f, k.first.e, k.second.f, k.second.e}].emplace_back(std::move(key), c);
  }
  ClassicalTensor out;
  for (const auto& [words, terms] : groups) {
    MPoly p;
    try {
      p = toral_limit(terms);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NotRegular) throw;
      throw Error(ErrorCode::RegularityFailure, err.what());
    }
    if (!p.is_zero()) out.emplace(words, std::move(p));
  }
  return out;
}

namespace {

std::string gen_name(const CartanDatum& d, const char* sym, int i, int l) {
  return std::string(sym) + "(" + d.names()[static_cast<std::size_t>(i)] + "," + std::to_string(l) + ")";
}

std::vector<std::pair<std::string, Coweight>> coweight_basis(const CartanDatum& d) {
  std::vector<std::pair<std::string, Coweight>> out;
  const int n = d.rank();
  for (int k = 0; k < n; ++k) {
    Coweight h = Coweight::zero(n);
    h.a[static_cast<std::size_t>(k)] = 1;
    out.emplace_back("h(" + d.names()[static_cast<std::size_t>(k)] + ")", h);
  }
  for (int k = 0; k < n; ++k) {
    Coweight h = Coweight::zero(n);
    h.b[static_cast<std::size_t>(k)] = 1;
    out.emplace_back("d(" + d.names()[static_cast<std::size_t>(k)] + ")", h);
  }
  return out;
}

ClassicalElement classical_word(WordId f, WordId e, const MPoly& p = MPoly(1)) {
  ClassicalElement x;
  x.add_term(f, e, p);
  return x;
}

LimitCheck run_check(const std::string& relation, const std::function<std::string()>& body) {
  LimitCheck c{relation, false, ""};
  try {
    c.witness = body();
    c.ok = c.witness.empty();
    if (c.ok) c.witness = "ok";
  } catch (const Error& err) {
    c.witness = err.what();
  }
  return c;
}

// Level sums per index stay within the imaginary cutoffs and the form's height bound.
bool computable(const CartanDatum& d, const std::vector<int>& level, int max_ht) {
  int ht = 0;
  for (int i = 0; i < d.rank(); ++i) {
    const int m = level[static_cast<std::size_t>(i)];
    ht += m;
    if (d.is_imaginary(i) && m > d.cutoff(i)) return false;
  }
  return ht <= max_ht;
}

WordId power_word(int i, int l, int n) {
  std::vector<Letter> ls(static_cast<std::size_t>(n), Letter{i, l});
  return intern_word(ls);
}

}  // namespace

std::vector<LimitCheck> check_classical_relations(A1Form& a1, int max_level) {
  const CartanDatum& d = a1.datum();
  Straightener& st = a1.straightener();
  const int n = d.rank();
  std::vector<LimitCheck> out;
  auto top = [&](int i) { return std::min(max_level, d.cutoff(i)); };

  for (int i = 0; i < n; ++i) {
    for (int l = 1; l <= top(i); ++l) {
      for (int j = 0; j < n; ++j) {
        for (int k = 1; k <= top(j); ++k) {
          const std::string rel = "[" + gen_name(d, "s", i, l) + ", " + gen_name(d, "T", j, k) + "]";
          out.push_back(run_check(rel, [&]() -> std::string {
            const NormalForm q_side = st.commutator(a1.expand(a1.s(i, l)), a1.expand(a1.T(j, k)));
            const bool match = i == j && l == k;
            const NormalForm expected = match ? a1.k_difference(i, l) : NormalForm();
            if (q_side != st.reduce(expected)) return "quantum commutator " + q_side.to_string(d);
            ClassicalElement want;
            if (match) want.add_term(kEmptyWord, kEmptyWord, MPoly::variable(i) * MPoly(l));
            const ClassicalElement got = a1.limit(q_side);
            if (!(got == want)) return "limit " + got.to_string(d);
            return "";
          }));
        }
      }
    }
  }

  const auto basis = coweight_basis(d);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const auto& [hname, h] = basis[b];
    for (int j = 0; j < n; ++j) {
      for (int l = 1; l <= top(j); ++l) {
        for (bool upper : {true, false}) {
          const NormalForm g = upper ? a1.s(j, l) : a1.T(j, l);
          const std::string rel = "[hbar " + hname + ", " + gen_name(d, upper ? "s" : "T", j, l) + "]";
          out.push_back(run_check(rel, [&]() -> std::string {
            const NormalForm sym = a1.commutator(a1.qh(h), g);
            const NormalForm q_side = st.commutator(a1.expand(a1.qh(h)), a1.expand(g));
            if (a1.expand(sym) != q_side) return "symbolic straightening disagrees with U_q";
            const int w = l * d.alpha_of(j, h) * (upper ? 1 : -1);
            const WordId word = letter_word(j, l);
            const ClassicalElement want = upper ? classical_word(kEmptyWord, word, MPoly(w)) : classical_word(word, kEmptyWord, MPoly(w));
            const ClassicalElement got = a1.limit(sym);
            if (!(got == want)) return "limit " + got.to_string(d);
            return "";
          }));
        }
      }
    }
    for (std::size_t c = b + 1; c < basis.size(); ++c) {
      out.push_back(run_check("[hbar " + hname + ", hbar " + basis[c].first + "]", [&]() -> std::string {
        const NormalForm x = st.commutator(a1.qh(h), a1.qh(basis[c].second));
        return x.is_zero() ? "" : x.to_string(d);
      }));
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (d.a(i, j) != 0) continue;
      for (int k = 1; k <= top(i); ++k) {
        for (int l = (i == j ? k + 1 : 1); l <= top(j); ++l) {
          std::vector<int> level(static_cast<std::size_t>(n), 0);
          level[static_cast<std::size_t>(i)] += k;
          level[static_cast<std::size_t>(j)] += l;
          if (!computable(d, level, st.form().max_ht())) continue;
          for (bool upper : {false, true}) {
            const char* sym = upper ? "s" : "T";
            const NormalForm x = upper ? a1.s(i, k) : a1.T(i, k);
            const NormalForm y = upper ? a1.s(j, l) : a1.T(j, l);
            out.push_back(run_check("[" + gen_name(d, sym, i, k) + ", " + gen_name(d, sym, j, l) + "]", [&]() -> std::string {
              const NormalForm z = st.commutator(a1.expand(x), a1.expand(y));
              return z.is_zero() ? "" : z.to_string(d);
            }));
          }
        }
      }
    }
  }

  for (int i : d.real_indices()) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int l = 1; l <= top(j); ++l) {
        const int m = 1 - l * d.a(i, j);
        if (m + l > st.form().max_ht()) continue;
        for (bool upper : {false, true}) {
          const std::string rel = std::string(upper ? "serre+ " : "serre- ") + d.names()[static_cast<std::size_t>(i)] + " " +
                                  gen_name(d, upper ? "s" : "T", j, l);
          out.push_back(run_check(rel, [&]() -> std::string {
            // sum_p (-1)^p [m p]_i X_i^p X_jl X_i^{m-p}
            NormalForm rel_q;
            ClassicalElement want;
            for (int p = 0; p <= m; ++p) {
              const WordId w = concat(concat(power_word(i, 1, p), letter_word(j, l)), power_word(i, 1, m - p));
              RatFunc c = q_binomial(m, p, d.r(i));
              if (p % 2 == 1) c = -c;
              rel_q.add_term(upper ? Mono{kEmptyWord, toral_key(Coweight::zero(n)), w} : Mono{w, toral_key(Coweight::zero(n)), kEmptyWord}, c);
              Rational b = 1;
              for (int k = 0; k < p; ++k) b = b * (m - k) / (k + 1);
              if (p % 2 == 1) b = -b;
              if (upper) {
                want.add_term(kEmptyWord, w, MPoly(b));
              } else {
                want.add_term(w, kEmptyWord, MPoly(b));
              }
            }
            const NormalForm image = a1.expand(rel_q);
            if (!image.is_zero()) return "relation is nonzero in U_q: " + image.to_string(d);
            std::string why;
            if (!a1.is_regular(rel_q, &why)) return why;
            const ClassicalElement got = a1.limit(rel_q);
            if (!(got == want)) return "limit " + got.to_string(d);
            return "";
          }));
        }
      }
    }
  }
  return out;
}

std::vector<LimitCheck> check_a1_closure(A1Form& a1, int max_level, int max_length) {
  const CartanDatum& d = a1.datum();
  Straightener& st = a1.straightener();
  const int n = d.rank();
  struct Gen {
    std::string name;
    NormalForm x;
    int index;
    int level;
  };
  std::vector<Gen> gens;
  for (int i = 0; i < n; ++i) {
    for (int l = 1; l <= std::min(max_level, d.cutoff(i)); ++l) {
      gens.push_back({gen_name(d, "s", i, l), a1.s(i, l), i, l});
      gens.push_back({gen_name(d, "T", i, l), a1.T(i, l), i, l});
    }
  }
  for (const auto& [hname, h] : coweight_basis(d)) {
    gens.push_back({"q^" + hname, a1.toral(h), 0, 0});
    gens.push_back({"(q^" + hname + ";0)", a1.qh(h), 0, 0});
  }

  std::vector<LimitCheck> out;
  out.push_back(run_check("(q^h;n) = q^n (q^h;0) + (q^n-1)/(q-1)", [&]() -> std::string {
    for (const auto& [hname, h] : coweight_basis(d)) {
      for (int m = -3; m <= 3; ++m) {
        const RatFunc c = (RatFunc::q_power(m) - RatFunc(1)) / (RatFunc::q_power(1) - RatFunc(1));
        if (a1.qh(h, m) != a1.qh(h) * RatFunc::q_power(m) + st.one() * c) return hname + " n=" + std::to_string(m);
      }
    }
    return "";
  }));
  out.push_back(run_check("(K^l - K^-l)/(q_i^2 - 1) in A1", [&]() -> std::string {
    for (int i = 0; i < n; ++i) {
      for (int l = 1; l <= d.cutoff(i); ++l) {
        std::string why;
        if (!a1.is_regular(a1.k_difference(i, l), &why)) return why;
        // Unrescaled K^l - K^-l has limit 0 and is not a multiple of a unit.
        if (!a1.limit(st.K(i, l) - st.K(i, -l)).is_zero()) return "K^l - K^-l does not vanish at q = 1";
      }
    }
    return "";
  }));

  for (int len = 1; len <= max_length; ++len) {
    std::size_t count = 0;
    std::string failure;
    std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
    while (failure.empty()) {
      int level = 0;
      std::vector<int> per_index(static_cast<std::size_t>(n), 0);
      for (std::size_t k : idx) {
        level += gens[k].level;
        per_index[static_cast<std::size_t>(gens[k].index)] += gens[k].level;
      }
      if (level <= max_level && computable(d, per_index, st.form().max_ht())) {
        NormalForm sym = a1.multiply(st.one(), st.one());
        NormalForm q_side = st.one();
        std::string label;
        for (std::size_t k : idx) {
          sym = a1.multiply(sym, gens[k].x);
          q_side = st.multiply(q_side, a1.expand(gens[k].x));
          label += (label.empty() ? "" : "*") + gens[k].name;
        }
        try {
          std::string why;
          if (!a1.is_regular(sym, &why)) {
            failure = label + ": " + why;
          } else if (a1.expand(sym) != q_side) {
            failure = label + ": symbolic straightening disagrees with U_q";
          }
        } catch (const Error& err) {
          failure = label + ": " + err.what();
        }
        ++count;
      }
      std::size_t k = 0;
      while (k < idx.size() && idx[k] + 1 == gens.size()) idx[k++] = 0;
      if (k == idx.size()) break;
      ++idx[k];
    }
    LimitCheck c{"A1 closure, products of " + std::to_string(len) + " generators", failure.empty(), ""};
    c.witness = failure.empty() ? std::to_string(count) + " products regular" : failure;
    out.push_back(c);
  }
  return out;
}

std::vector<LimitCheck> check_hopf_limits(A1Form& a1, int max_level) {
  const CartanDatum& d = a1.datum();
  Straightener& st = a1.straightener();
  const int n = d.rank();
  const NormalForm one = st.one();
  std::vector<LimitCheck> out;

  auto expand_tensor = [&](const NormalTensor& t) {
    NormalTensor e;
    for (const auto& [k, c] : t.terms()) {
      NormalTensor piece = NormalTensor::pure(a1.expand(NormalForm::mono(k.first)), a1.expand(NormalForm::mono(k.second)));
      piece *= c;
      e += piece;
    }
    return e;
  };
  auto tensor_string = [&](const ClassicalTensor& t) {
    std::string s;
    for (const auto& [k, p] : t) {
      s += (s.empty() ? "" : " + ") + std::string("(") + p.to_string(toral_names(d, 2)) + ")[" +
           word_string(std::get<0>(k), Alphabet::F, d) + "," + word_string(std::get<1>(k), Alphabet::E, d) + " # " +
           word_string(std::get<2>(k), Alphabet::F, d) + "," + word_string(std::get<3>(k), Alphabet::E, d) + "]";
    }
    return s.empty() ? std::string("0") : s;
  };

  for (int i = 0; i < n; ++i) {
    for (int l = 1; l <= std::min(max_level, d.cutoff(i)); ++l) {
      const WordId w = letter_word(i, l);
      for (bool upper : {false, true}) {
        const NormalForm x = upper ? a1.s(i, l) : a1.T(i, l);
        const std::string name = gen_name(d, upper ? "s" : "T", i, l);
        out.push_back(run_check("Delta " + name, [&]() -> std::string {
          const NormalTensor formula = upper ? NormalTensor::pure(x, st.K(i, -l)) + NormalTensor::pure(one, x)
                                             : NormalTensor::pure(x, one) + NormalTensor::pure(st.K(i, l), x);
          if (st.coproduct(a1.expand(x)) != st.reduce(expand_tensor(formula))) return "quantum coproduct differs";
          const ClassicalTensor got = a1.limit(formula);
          const ClassicalTensor want = upper ? ClassicalTensor{{{kEmptyWord, w, kEmptyWord, kEmptyWord}, MPoly(1)},
                                                               {{kEmptyWord, kEmptyWord, kEmptyWord, w}, MPoly(1)}}
                                             : ClassicalTensor{{{w, kEmptyWord, kEmptyWord, kEmptyWord}, MPoly(1)},
                                                               {{kEmptyWord, kEmptyWord, w, kEmptyWord}, MPoly(1)}};
          return got == want ? "" : "limit " + tensor_string(got);
        }));
        out.push_back(run_check("S " + name, [&]() -> std::string {
          const NormalForm formula = (upper ? a1.multiply(x, st.K(i, l)) : a1.multiply(st.K(i, -l), x)) * RatFunc(-1);
          if (st.antipode(a1.expand(x)) != a1.expand(formula)) return "quantum antipode differs";
          const ClassicalElement got = a1.limit(formula);
          const ClassicalElement want = upper ? classical_word(kEmptyWord, w, MPoly(-1)) : classical_word(w, kEmptyWord, MPoly(-1));
          return got == want ? "" : "limit " + got.to_string(d);
        }));
        out.push_back(run_check("epsilon " + name, [&]() -> std::string {
          const RatFunc e = st.counit(a1.expand(x));
          return e.is_zero() ? "" : e.to_string();
        }));
      }
    }
  }

  const auto basis = coweight_basis(d);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const auto& [hname, h] = basis[b];
    const NormalForm x = a1.qh(h);
    const std::string name = "(q^" + hname + ";0)";
    out.push_back(run_check("Delta " + name, [&]() -> std::string {
      const NormalTensor formula = NormalTensor::pure(x, one) + NormalTensor::pure(a1.toral(h), x);
      NormalTensor direct = NormalTensor::pure(a1.toral(h), a1.toral(h)) - NormalTensor::pure(one, one);
      direct *= RatFunc(1) / q_minus_one();
      if (!(formula == direct)) return "group-like expansion differs";
      if (st.coproduct(x) != formula) return "quantum coproduct differs";
      const ClassicalTensor got = a1.limit(formula);
      const int v = static_cast<int>(b);
      const ClassicalTensor want{{{kEmptyWord, kEmptyWord, kEmptyWord, kEmptyWord}, MPoly::variable(v) + MPoly::variable(v + 2 * n)}};
      return got == want ? "" : "limit " + tensor_string(got);
    }));
    out.push_back(run_check("S " + name, [&]() -> std::string {
      Coweight neg = -h;
      if (st.antipode(x) != a1.qh(neg)) return "quantum antipode differs";
      const ClassicalElement got = a1.limit(a1.qh(neg));
      return got == classical_word(kEmptyWord, kEmptyWord, -MPoly::variable(static_cast<int>(b))) ? "" : "limit " + got.to_string(d);
    }));
    out.push_back(run_check("epsilon " + name, [&]() -> std::string {
      const RatFunc e = st.counit(x);
      return e.is_zero() ? "" : e.to_string();
    }));
  }
  return out;
}

}  // namespace qbb
