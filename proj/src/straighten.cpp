#include "qbb/straighten.hpp"

#include <algorithm>
#include <functional>

#include "qbb/error.hpp"

namespace qbb {

std::vector<int> toral_key(const Coweight& h) {
  std::vector<int> k = h.a;
  k.insert(k.end(), h.b.begin(), h.b.end());
  return k;
}

Coweight key_coweight(const std::vector<int>& key) {
  const auto n = static_cast<long>(key.size() / 2);
  return Coweight{std::vector<int>(key.begin(), key.begin() + n), std::vector<int>(key.begin() + n, key.end())};
}

int toral_weight(const CartanDatum& d, WordId w, const std::vector<int>& h) {
  const int n = d.rank();
  int total = 0;
  for (const Letter& x : word_letters(w)) {
    int v = h[static_cast<std::size_t>(n + x.i)];
    for (int i = 0; i < n; ++i) v += h[static_cast<std::size_t>(i)] * d.a(i, x.i);
    total += x.l * v;
  }
  return total;
}

namespace {

void add_keys(std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
}

std::vector<int> negated(std::vector<int> a) {
  for (auto& x : a) x = -x;
  return a;
}

bool mono_less(const Mono& x, const Mono& y) {
  if (x.f != y.f) return degree_lex_less(x.f, y.f);
  if (x.h != y.h) return x.h < y.h;
  return degree_lex_less(x.e, y.e);
}

}  // namespace

NormalForm NormalForm::mono(Mono m, const RatFunc& c) {
  NormalForm x;
  x.add_term(m, c);
  return x;
}

RatFunc NormalForm::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc() : it->second;
}

bool NormalForm::is_toral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.f == kEmptyWord && t.first.e == kEmptyWord; });
}

void NormalForm::add_term(const Mono& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NormalForm& NormalForm::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::vector<std::pair<Mono, RatFunc>> NormalForm::sorted_terms() const {
  std::vector<std::pair<Mono, RatFunc>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return mono_less(x.first, y.first); });
  return out;
}

std::string toral_to_string(const std::vector<int>& key, const CartanDatum& datum) {
  const int n = datum.rank();
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += "*";
    out += s;
  };
  for (int i = 0; i < n; ++i) {
    const int a = key[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    const std::string& name = datum.names()[static_cast<std::size_t>(i)];
    if (a % datum.r(i) == 0) {
      const int m = a / datum.r(i);
      append("K(" + name + ")" + (m == 1 ? "" : "^" + std::to_string(m)));
    } else {
      append("q^(" + std::to_string(a) + "*h(" + name + "))");
    }
  }
  for (int j = 0; j < n; ++j) {
    const int b = key[static_cast<std::size_t>(n + j)];
    if (b != 0) append("q^(" + std::to_string(b) + "*d(" + datum.names()[static_cast<std::size_t>(j)] + "))");
  }
  return out.empty() ? "1" : out;
}

std::string mono_to_string(const Mono& m, const CartanDatum& datum) {
  const std::string toral = toral_to_string(m.h, datum);
  std::string out;
  for (const std::string& s : {m.f == kEmptyWord ? std::string() : word_string(m.f, Alphabet::F, datum),
                               toral == "1" ? std::string() : toral,
                               m.e == kEmptyWord ? std::string() : word_string(m.e, Alphabet::E, datum)}) {
    if (s.empty()) continue;
    if (!out.empty()) out += "*";
    out += s;
  }
  return out.empty() ? "1" : out;
}

std::string NormalForm::to_string(const CartanDatum& datum) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    out += format_term(c, mono_to_string(m, datum), first);
    first = false;
  }
  return out;
}

void NormalTensor::add_term(const Mono& a, const Mono& b, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(std::make_pair(a, b), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalTensor& NormalTensor::operator+=(const NormalTensor& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

NormalTensor& NormalTensor::operator-=(const NormalTensor& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

NormalTensor& NormalTensor::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

NormalTensor NormalTensor::pure(const NormalForm& a, const NormalForm& b) {
  NormalTensor t;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) t.add_term(ma, mb, ca * cb);
  }
  return t;
}

std::string NormalTensor::to_string(const CartanDatum& datum) const {
  if (is_zero()) return "0";
  std::vector<std::pair<std::pair<Mono, Mono>, RatFunc>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    if (x.first.first != y.first.first) return mono_less(x.first.first, y.first.first);
    return mono_less(x.first.second, y.first.second);
  });
  std::string out;
  bool first = true;
  for (const auto& [k, c] : v) {
    out += coeff_prefix(c, first) + "(" + mono_to_string(k.first, datum) + " # " + mono_to_string(k.second, datum) + ")";
    first = false;
  }
  return out;
}

ThetaTable::ThetaTable(const std::vector<RatFunc>& nu) {
  // theta_m = -sum_{p=1}^{m} nu_p theta_{m-p}.
  theta_.assign(nu.size() + 1, RatFunc());
  theta_[0] = RatFunc(1);
  for (std::size_t m = 1; m <= nu.size(); ++m) {
    for (std::size_t p = 1; p <= m; ++p) theta_[m] -= nu[p - 1] * theta_[m - p];
  }
}

MPoly theta_symbolic(int m) {
  MPoly out;
  std::function<void(int, const MPoly&)> walk = [&](int left, const MPoly& value) {
    if (left == 0) {
      out += value;
      return;
    }
    for (int part = 1; part <= left; ++part) walk(left - part, -(value * MPoly::variable(part - 1)));
  };
  walk(m, MPoly(1));
  return out;
}

namespace {

void kpoly_add(KPoly& a, int power, const MPoly& c) {
  if (c.is_zero()) return;
  MPoly& slot = a[power];
  slot += c;
  if (slot.is_zero()) a.erase(power);
}

}  // namespace

KPoly alpha_recursive(int n) {
  std::vector<KPoly> alpha(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    KPoly a;
    const MPoly nu_m = MPoly::variable(m - 1);
    kpoly_add(a, m, nu_m);
    kpoly_add(a, -m, -nu_m);
    for (int j = 1; j < m; ++j) {
      for (const auto& [p, c] : alpha[static_cast<std::size_t>(m - j)]) kpoly_add(a, p - j, -(MPoly::variable(j - 1) * c));
    }
    alpha[static_cast<std::size_t>(m)] = a;
  }
  return alpha[static_cast<std::size_t>(n)];
}

KPoly alpha_closed(int n) {
  KPoly a;
  for (int r = 1; r <= n; ++r) {
    const MPoly c = MPoly::variable(r - 1) * theta_symbolic(n - r);
    kpoly_add(a, 2 * r - n, c);
    kpoly_add(a, -n, -c);
  }
  return a;
}

Straightener::Straightener(LForm& form) : form_(form) {}

std::vector<int> Straightener::zero_key() const { return std::vector<int>(2 * static_cast<std::size_t>(datum().rank()), 0); }

std::vector<int> Straightener::k_key(int i, int m) const { return toral_key(datum().K(i, m)); }

NormalForm Straightener::scalar(const RatFunc& c) const { return NormalForm::mono(Mono{kEmptyWord, zero_key(), kEmptyWord}, c); }

NormalForm Straightener::f(int i, int l) const { return f_word(letter_word(i, l)); }
NormalForm Straightener::e(int i, int l) const { return e_word(letter_word(i, l)); }
NormalForm Straightener::f_word(WordId w) const { return NormalForm::mono(Mono{w, zero_key(), kEmptyWord}); }
NormalForm Straightener::e_word(WordId w) const { return NormalForm::mono(Mono{kEmptyWord, zero_key(), w}); }
NormalForm Straightener::toral(const Coweight& h) const { return NormalForm::mono(Mono{kEmptyWord, toral_key(h), kEmptyWord}); }
NormalForm Straightener::K(int i, int m) const { return NormalForm::mono(Mono{kEmptyWord, k_key(i, m), kEmptyWord}); }

NormalForm Straightener::from_free(const FreeElement& x) const {
  NormalForm out;
  const bool e_side = x.alphabet() == Alphabet::E || x.alphabet() == Alphabet::S;
  if (x.alphabet() == Alphabet::T || x.alphabet() == Alphabet::S) {
    throw Error(ErrorCode::AlphabetMismatch, "expand t/s elements to f/e words first");
  }
  for (const auto& [w, c] : x.terms()) {
    out.add_term(e_side ? Mono{kEmptyWord, zero_key(), w} : Mono{w, zero_key(), kEmptyWord}, c);
  }
  return out;
}

void Straightener::mul_mono_into(NormalForm& out, const Mono& x, const Mono& y, const RatFunc& c) {
  // f1 q^h1 (e1 f2) q^h2 e2 with e1 f2 = sum f' q^h' e'.
  const NormalForm& mid = mul_ef(x.e, y.f);
  for (const auto& [m, cm] : mid.terms()) {
    const int shift = -toral_weight(datum(), m.f, x.h) - toral_weight(datum(), m.e, y.h);
    std::vector<int> h = x.h;
    add_keys(h, m.h);
    add_keys(h, y.h);
    out.add_term(Mono{concat(x.f, m.f), std::move(h), concat(m.e, y.e)}, (c * cm).shifted(shift));
  }
}

NormalForm Straightener::multiply_free(const NormalForm& a, const NormalForm& b) {
  NormalForm out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) mul_mono_into(out, x, y, cx * cy);
  }
  return out;
}

const NormalForm& Straightener::mul_ef(WordId e, WordId f) {
  const auto key = std::make_pair(e, f);
  if (auto it = ef_cache_.find(key); it != ef_cache_.end()) return it->second;
  NormalForm out;
  if (e == kEmptyWord || f == kEmptyWord) {
    out = NormalForm::mono(Mono{f, zero_key(), e});
  } else {
    // e = e' x, f = y f': e f = (e' y) x f' + e' [x, y] f'.
    const auto& el = word_letters(e);
    const Letter x = el.back();
    const Letter y = word_letters(f).front();
    const WordId e_rest = word_prefix(e, el.size() - 1);
    const WordId f_rest = word_suffix(f, 1);
    const NormalForm tail = f_word(f_rest);

    NormalForm first;
    for (const auto& [m, c] : mul_ef(e_rest, letter_word(y.i, y.l)).terms()) {
      first.add_term(Mono{m.f, m.h, concat(m.e, letter_word(x.i, x.l))}, c);
    }
    out = multiply_free(first, tail);
    const NormalForm bracket = cross_commutator(x.i, x.l, y.i, y.l);
    if (!bracket.is_zero()) out += multiply_free(multiply_free(e_word(e_rest), bracket), tail);
  }
  return ef_cache_.emplace(key, std::move(out)).first->second;
}

const FreeElement& Straightener::reduced_word(WordId w) {
  if (auto it = reduce_cache_.find(w); it != reduce_cache_.end()) return it->second;
  FreeElement r = w == kEmptyWord ? FreeElement::one(Alphabet::F) : form_.reduce(FreeElement::word(w, Alphabet::F));
  return reduce_cache_.emplace(w, std::move(r)).first->second;
}

NormalForm Straightener::reduce(const NormalForm& a) {
  NormalForm out;
  for (const auto& [m, c] : a.terms()) {
    const FreeElement& rf = reduced_word(m.f);
    const FreeElement& re = reduced_word(m.e);
    for (const auto& [wf, cf] : rf.terms()) {
      for (const auto& [we, ce] : re.terms()) out.add_term(Mono{wf, m.h, we}, c * cf * ce);
    }
  }
  return out;
}

NormalForm Straightener::multiply(const NormalForm& a, const NormalForm& b) { return reduce(multiply_free(a, b)); }

NormalForm Straightener::commutator(const NormalForm& a, const NormalForm& b) {
  return reduce(multiply_free(a, b) - multiply_free(b, a));
}

const ThetaTable& Straightener::theta(int i) {
  if (auto it = theta_cache_.find(i); it != theta_cache_.end()) return it->second;
  std::vector<RatFunc> nu;
  for (int l = 1; l <= datum().cutoff(i); ++l) nu.push_back(form_.nu(i, l));
  return theta_cache_.emplace(i, ThetaTable(nu)).first->second;
}

NormalForm Straightener::commutator_closed(int i, int l, int k) {
  const auto key = std::make_tuple(i, l, k);
  if (auto it = closed_cache_.find(key); it != closed_cache_.end()) return it->second;
  const CartanDatum& d = datum();
  if (l < 1 || k < 1 || l > d.cutoff(i) || k > d.cutoff(i)) throw Error(ErrorCode::OutOfRange, "level outside the cutoff");
  const ThetaTable& th = theta(i);
  const int qp = d.qparen_exp(i);
  const int t = k - l;
  NormalForm out;
  for (int p = 1; p <= std::min(k, l); ++p) {
    const WordId fw = k == p ? kEmptyWord : letter_word(i, k - p);
    const WordId ew = l == p ? kEmptyWord : letter_word(i, l - p);
    for (int r = 1; r <= p; ++r) {
      const RatFunc c = form_.nu(i, r) * th[p - r];
      // X^a f_{k-p} with X = q_(i)^t K_i, moved to f_{k-p} K_i^a.
      for (const auto& [a, sign] : {std::pair<int, int>{2 * r - p, 1}, std::pair<int, int>{-p, -1}}) {
        const int exponent = qp * (t * a - 2 * a * (k - p));
        out.add_term(Mono{fw, k_key(i, a), ew}, (sign > 0 ? c : -c).shifted(exponent));
      }
    }
  }
  return closed_cache_.emplace(key, std::move(out)).first->second;
}

NormalForm Straightener::commutator_recursive(int i, int l, int k) {
  const auto key = std::make_tuple(i, l, k);
  if (auto it = recursive_cache_.find(key); it != recursive_cache_.end()) return it->second;
  const CartanDatum& d = datum();
  if (l < 1 || k < 1 || l > d.cutoff(i) || k > d.cutoff(i)) throw Error(ErrorCode::OutOfRange, "level outside the cutoff");
  const int qp = d.qparen_exp(i);
  // sum_n q_(i)^{n(s-m)} nu_n K^-n e_s f_m = sum_n q_(i)^{n(m-s)} nu_n K^n f_m e_s  (m = k-n, s = l-n)
  // solved for e_l f_k - f_k e_l; K^a f_m = q_(i)^{-2am} f_m K^a.
  NormalForm out;
  auto add_left_toral = [&](int a, const NormalForm& x, const RatFunc& c) {
    for (const auto& [m, cm] : x.terms()) {
      std::vector<int> h = m.h;
      add_keys(h, k_key(i, a));
      int fl = 0;
      for (const Letter& y : word_letters(m.f)) fl += y.l;
      out.add_term(Mono{m.f, std::move(h), m.e}, (c * cm).shifted(-2 * qp * a * fl));
    }
  };
  for (int n = 1; n <= std::min(k, l); ++n) {
    const int m = k - n;
    const int s = l - n;
    const WordId fw = m == 0 ? kEmptyWord : letter_word(i, m);
    const WordId ew = s == 0 ? kEmptyWord : letter_word(i, s);
    const RatFunc nu = form_.nu(i, n);
    const NormalForm fe = NormalForm::mono(Mono{fw, zero_key(), ew});
    add_left_toral(n, fe, nu.shifted(qp * n * (m - s)));
    // e_s f_m in normal order.
    NormalForm ef = fe;
    if (m > 0 && s > 0) ef += commutator_recursive(i, s, m);
    add_left_toral(-n, ef, -nu.shifted(qp * n * (s - m)));
  }
  return recursive_cache_.emplace(key, std::move(out)).first->second;
}

NormalForm Straightener::cross_commutator(int i, int l, int j, int k) {
  if (i != j) return NormalForm();
  return commutator_closed(i, l, k);
}

RatFunc Straightener::counit(const NormalForm& x) const {
  RatFunc s;
  for (const auto& [m, c] : x.terms()) {
    if (m.f == kEmptyWord && m.e == kEmptyWord) s += c;
  }
  return s;
}

NormalForm Straightener::eta(const NormalForm& x) const {
  NormalForm out;
  for (const auto& [m, c] : x.terms()) out.add_term(Mono{m.f, negated(m.h), m.e}, c.bar());
  return out;
}

NormalForm Straightener::omega(const NormalForm& x) {
  NormalForm out;
  for (const auto& [m, c] : x.terms()) {
    NormalForm piece = multiply_free(e_word(m.f), NormalForm::mono(Mono{kEmptyWord, negated(m.h), kEmptyWord}));
    piece = multiply_free(piece, f_word(m.e));
    out += piece * c;
  }
  return reduce(out);
}

const NormalTensor& Straightener::coproduct_letter(const Letter& x, bool e_side) {
  const auto key = std::make_pair(x, e_side);
  if (auto it = coproduct_cache_.find(key); it != coproduct_cache_.end()) return it->second;
  const int qp = datum().qparen_exp(x.i);
  NormalTensor t;
  for (int m = 0; m <= x.l; ++m) {
    const int n = x.l - m;
    const WordId wm = m == 0 ? kEmptyWord : letter_word(x.i, m);
    const WordId wn = n == 0 ? kEmptyWord : letter_word(x.i, n);
    if (e_side) {
      // q_(i)^{mn} e_m (x) K^-m e_n
      t.add_term(Mono{kEmptyWord, zero_key(), wm}, Mono{kEmptyWord, k_key(x.i, -m), wn}, RatFunc::q_power(qp * m * n));
    } else {
      // q_(i)^{-mn} f_m K^n (x) f_n
      t.add_term(Mono{wm, k_key(x.i, n), kEmptyWord}, Mono{wn, zero_key(), kEmptyWord}, RatFunc::q_power(-qp * m * n));
    }
  }
  return coproduct_cache_.emplace(key, std::move(t)).first->second;
}

NormalTensor Straightener::tensor_multiply(const NormalTensor& a, const NormalTensor& b) {
  NormalTensor out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      NormalForm left;
      mul_mono_into(left, ka.first, kb.first, RatFunc(1));
      NormalForm right;
      mul_mono_into(right, ka.second, kb.second, RatFunc(1));
      const RatFunc c = ca * cb;
      for (const auto& [ml, cl] : left.terms()) {
        for (const auto& [mr, cr] : right.terms()) out.add_term(ml, mr, c * cl * cr);
      }
    }
  }
  return out;
}

NormalTensor Straightener::reduce(const NormalTensor& t) {
  NormalTensor out;
  for (const auto& [k, c] : t.terms()) {
    const NormalForm a = reduce(NormalForm::mono(k.first));
    const NormalForm b = reduce(NormalForm::mono(k.second));
    for (const auto& [ma, ca] : a.terms()) {
      for (const auto& [mb, cb] : b.terms()) out.add_term(ma, mb, c * ca * cb);
    }
  }
  return out;
}

NormalTensor Straightener::coproduct(const NormalForm& x) {
  NormalTensor out;
  for (const auto& [m, c] : x.terms()) {
    NormalTensor acc;
    const Mono toral{kEmptyWord, m.h, kEmptyWord};
    acc.add_term(toral, toral, RatFunc(1));
    // Delta(f-word) Delta(q^h) Delta(e-word).
    NormalTensor fpart;
    fpart.add_term(Mono{kEmptyWord, zero_key(), kEmptyWord}, Mono{kEmptyWord, zero_key(), kEmptyWord}, RatFunc(1));
    for (const Letter& y : word_letters(m.f)) fpart = tensor_multiply(fpart, coproduct_letter(y, false));
    acc = tensor_multiply(fpart, acc);
    for (const Letter& y : word_letters(m.e)) acc = tensor_multiply(acc, coproduct_letter(y, true));
    acc *= c;
    out += acc;
  }
  return reduce(out);
}

const NormalForm& Straightener::antipode_letter(const Letter& x, bool e_side) {
  const auto key = std::make_pair(x, e_side);
  if (auto it = antipode_cache_.find(key); it != antipode_cache_.end()) return it->second;
  const int qp = datum().qparen_exp(x.i);
  NormalForm out;
  for (int m = 0; m < x.l; ++m) {
    const int n = x.l - m;
    const NormalForm s_m = m == 0 ? one() : antipode_letter(Letter{x.i, m}, e_side);
    if (e_side) {
      // S(e_l) = - sum_{m<l} q_(i)^{mn} S(e_m) K^-m e_n K^l
      NormalForm piece = multiply_free(s_m, K(x.i, -m));
      piece = multiply_free(piece, e(x.i, n));
      piece = multiply_free(piece, K(x.i, x.l));
      out -= piece * RatFunc::q_power(qp * m * n);
    } else {
      // S(f_l) = - sum_{m<l} q_(i)^{-mn} K^-n S(f_m) f_n
      NormalForm piece = multiply_free(K(x.i, -n), s_m);
      piece = multiply_free(piece, f(x.i, n));
      out -= piece * RatFunc::q_power(-qp * m * n);
    }
  }
  return antipode_cache_.emplace(key, std::move(out)).first->second;
}

NormalForm Straightener::antipode(const NormalForm& x) {
  NormalForm out;
  for (const auto& [m, c] : x.terms()) {
    // S(f q^h e) = S(e) S(q^h) S(f), each word reversed.
    NormalForm acc = one();
    const auto& el = word_letters(m.e);
    for (auto it = el.rbegin(); it != el.rend(); ++it) acc = multiply_free(acc, antipode_letter(*it, true));
    acc = multiply_free(acc, NormalForm::mono(Mono{kEmptyWord, negated(m.h), kEmptyWord}));
    const auto& fl = word_letters(m.f);
    for (auto it = fl.rbegin(); it != fl.rend(); ++it) acc = multiply_free(acc, antipode_letter(*it, false));
    out += acc * c;
  }
  return reduce(out);
}

NormalForm Straightener::antipode_contract(const NormalTensor& t, bool left) {
  NormalForm out;
  for (const auto& [k, c] : t.terms()) {
    const NormalForm a = NormalForm::mono(k.first);
    const NormalForm b = NormalForm::mono(k.second);
    out += (left ? multiply_free(antipode(a), b) : multiply_free(a, antipode(b))) * c;
  }
  return reduce(out);
}

NormalForm Straightener::counit_contract(const NormalTensor& t, bool left) {
  NormalForm out;
  for (const auto& [k, c] : t.terms()) {
    const Mono& drop = left ? k.first : k.second;
    const Mono& keep = left ? k.second : k.first;
    if (drop.f == kEmptyWord && drop.e == kEmptyWord) out.add_term(keep, c);
  }
  return reduce(out);
}

}  // namespace qbb
