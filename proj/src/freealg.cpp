#include "qbb/freealg.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "qbb/error.hpp"

namespace qbb {

namespace {

struct LettersHash {
  std::size_t operator()(const std::vector<Letter>& w) const {
    std::size_t h = w.size();
    for (const auto& x : w) h = h * 1000003U + static_cast<std::size_t>(x.i) * 131U + static_cast<std::size_t>(x.l);
    return h;
  }
};

class WordTable {
 public:
  WordTable() {
    words_.emplace_back();
    index_.emplace(std::vector<Letter>{}, kEmptyWord);
  }

  WordId intern(const std::vector<Letter>& w) {
    {
      std::shared_lock lock(mu_);
      auto it = index_.find(w);
      if (it != index_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto it = index_.find(w);
    if (it != index_.end()) return it->second;
    const auto id = static_cast<WordId>(words_.size());
    words_.push_back(w);
    index_.emplace(w, id);
    return id;
  }

  const std::vector<Letter>& letters(WordId id) {
    std::shared_lock lock(mu_);
    return words_.at(id);
  }

  WordId concat(WordId a, WordId b) {
    if (a == kEmptyWord) return b;
    if (b == kEmptyWord) return a;
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32U) | b;
    {
      std::shared_lock lock(mu_);
      auto it = concat_.find(key);
      if (it != concat_.end()) return it->second;
    }
    std::vector<Letter> w = letters(a);
    const auto& tail = letters(b);
    w.insert(w.end(), tail.begin(), tail.end());
    const WordId id = intern(w);
    std::unique_lock lock(mu_);
    concat_.emplace(key, id);
    return id;
  }

 private:
  std::shared_mutex mu_;
  std::deque<std::vector<Letter>> words_;
  std::unordered_map<std::vector<Letter>, WordId, LettersHash> index_;
  std::unordered_map<std::uint64_t, WordId> concat_;
};

WordTable& table() {
  static WordTable t;
  return t;
}

}  // namespace

std::string coeff_prefix(const RatFunc& c, bool first) {
  std::string out;
  const bool negative = c.num().leading() < 0;
  const RatFunc a = negative ? -c : c;
  if (!first) out += negative ? " - " : " + ";
  else if (negative) out += "-";
  if (a.is_one()) return out;
  if (!a.is_laurent() || a.num().term_count() == 1) return out + a.to_string() + "*";
  return out + "(" + a.to_string() + ")*";
}

std::string format_term(const RatFunc& c, const std::string& body, bool first) {
  if (body != "1") return coeff_prefix(c, first) + body;
  const bool negative = c.num().leading() < 0;
  const RatFunc a = negative ? -c : c;
  const std::string text = a.is_laurent() && a.num().term_count() > 1 && !first ? "(" + a.to_string() + ")" : a.to_string();
  if (first) return (negative ? "-" : "") + text;
  return (negative ? " - " : " + ") + text;
}

WordId intern_word(const std::vector<Letter>& letters) { return table().intern(letters); }
const std::vector<Letter>& word_letters(WordId w) { return table().letters(w); }
WordId letter_word(int i, int l) { return intern_word({Letter{i, l}}); }
WordId concat(WordId a, WordId b) { return table().concat(a, b); }
std::size_t word_length(WordId w) { return word_letters(w).size(); }

bool degree_lex_less(WordId a, WordId b) {
  if (a == b) return false;
  const auto& x = word_letters(a);
  const auto& y = word_letters(b);
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

WordId remove_letter(WordId w, std::size_t k) {
  std::vector<Letter> x = word_letters(w);
  x.erase(x.begin() + static_cast<long>(k));
  return intern_word(x);
}

WordId word_prefix(WordId w, std::size_t k) {
  const auto& x = word_letters(w);
  return intern_word(std::vector<Letter>(x.begin(), x.begin() + static_cast<long>(k)));
}

WordId word_suffix(WordId w, std::size_t k) {
  const auto& x = word_letters(w);
  return intern_word(std::vector<Letter>(x.begin() + static_cast<long>(k), x.end()));
}

std::string alphabet_symbol(Alphabet a) {
  switch (a) {
    case Alphabet::F: return "f";
    case Alphabet::T: return "t";
    case Alphabet::E: return "e";
    case Alphabet::S: return "s";
  }
  return "?";
}

FreeElement FreeElement::word(WordId w, Alphabet a, const RatFunc& c) {
  FreeElement x(a);
  x.add_term(w, c);
  return x;
}

RatFunc FreeElement::coeff(WordId w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

std::vector<std::pair<WordId, RatFunc>> FreeElement::sorted_terms() const {
  std::vector<std::pair<WordId, RatFunc>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return degree_lex_less(x.first, y.first); });
  return out;
}

void FreeElement::add_term(WordId w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) alphabet_ = o.alphabet_;
  else if (alphabet_ != o.alphabet_) throw Error(ErrorCode::AlphabetMismatch, "adding elements of different alphabets");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) { return *this += -o; }

FreeElement& FreeElement::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

FreeElement FreeElement::operator-() const {
  FreeElement r = *this;
  for (auto& [w, v] : r.terms_) v = -v;
  return r;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  if (!a.is_zero() && !b.is_zero() && a.alphabet_ != b.alphabet_) {
    throw Error(ErrorCode::AlphabetMismatch, "multiplying elements of different alphabets");
  }
  FreeElement out(a.is_zero() ? b.alphabet_ : a.alphabet_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(concat(wa, wb), ca * cb);
  }
  return out;
}

bool operator==(const FreeElement& a, const FreeElement& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
}

FreeElement FreeElement::relabeled(Alphabet a) const {
  FreeElement r = *this;
  r.alphabet_ = a;
  return r;
}

FreeElement FreeElement::bar() const {
  FreeElement r(alphabet_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, c.bar());
  return r;
}

std::string word_string(WordId w, Alphabet a, const CartanDatum& datum) {
  const auto& x = word_letters(w);
  if (x.empty()) return "1";
  std::string s;
  const std::string sym = alphabet_symbol(a);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k > 0) s += "*";
    s += sym + "(" + datum.names()[static_cast<std::size_t>(x[k].i)] + "," + std::to_string(x[k].l) + ")";
  }
  return s;
}

std::string FreeElement::to_string(const CartanDatum& datum) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : sorted_terms()) {
    out += format_term(c, word_string(w, alphabet_, datum), first);
    first = false;
  }
  return out;
}

TensorElement TensorElement::pure(const FreeElement& x, const FreeElement& y) {
  if (!x.is_zero() && !y.is_zero() && x.alphabet() != y.alphabet()) {
    throw Error(ErrorCode::AlphabetMismatch, "tensor factors in different alphabets");
  }
  TensorElement t(x.is_zero() ? y.alphabet() : x.alphabet());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) t.add_term(a, b, ca * cb);
  }
  return t;
}

void TensorElement::add_term(WordId a, WordId b, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key(a, b), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatFunc TensorElement::coeff(WordId a, WordId b) const {
  auto it = terms_.find(key(a, b));
  return it == terms_.end() ? RatFunc() : it->second;
}

std::vector<std::pair<std::pair<WordId, WordId>, RatFunc>> TensorElement::sorted_terms() const {
  std::vector<std::pair<std::pair<WordId, WordId>, RatFunc>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back({{first(k), second(k)}, c});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.first != y.first.first) return degree_lex_less(x.first.first, y.first.first);
    return degree_lex_less(x.first.second, y.first.second);
  });
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) alphabet_ = o.alphabet_;
  else if (alphabet_ != o.alphabet_) throw Error(ErrorCode::AlphabetMismatch, "adding tensors of different alphabets");
  for (const auto& [k, c] : o.terms_) add_term(first(k), second(k), c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  TensorElement n = o;
  n *= RatFunc(-1);
  return *this += n;
}

TensorElement& TensorElement::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
}

std::string TensorElement::to_string(const CartanDatum& datum) const {
  if (is_zero()) return "0";
  std::string out;
  bool first_term = true;
  for (const auto& [ab, c] : sorted_terms()) {
    out += coeff_prefix(c, first_term) + "(" + word_string(ab.first, alphabet_, datum) + " # " +
           word_string(ab.second, alphabet_, datum) + ")";
    first_term = false;
  }
  return out;
}

RootVector FreeAlgebra::degree(WordId w) const {
  RootVector beta = RootVector::zero(datum_.rank());
  for (const auto& x : word_letters(w)) beta.k[static_cast<std::size_t>(x.i)] += x.l;
  return beta;
}

bool FreeAlgebra::is_valid_letter(const Letter& x) const {
  if (x.i < 0 || x.i >= datum_.rank() || x.l < 1) return false;
  return x.l <= datum_.cutoff(x.i);
}

int FreeAlgebra::twist_exponent(WordId x2, WordId y1) const {
  if (x2 == kEmptyWord || y1 == kEmptyWord) return 0;
  int s = 0;
  for (const auto& a : word_letters(x2)) {
    for (const auto& b : word_letters(y1)) s += a.l * b.l * datum_.sym(a.i, b.i);
  }
  return -s;
}

TensorElement FreeAlgebra::twisted_mul(const TensorElement& a, const TensorElement& b) const {
  if (!a.is_zero() && !b.is_zero() && a.alphabet() != b.alphabet()) {
    throw Error(ErrorCode::AlphabetMismatch, "twisted product of tensors in different alphabets");
  }
  TensorElement out(a.is_zero() ? b.alphabet() : a.alphabet());
  for (const auto& [ka, ca] : a.raw()) {
    const WordId x1 = TensorElement::first(ka);
    const WordId x2 = TensorElement::second(ka);
    for (const auto& [kb, cb] : b.raw()) {
      const WordId y1 = TensorElement::first(kb);
      const WordId y2 = TensorElement::second(kb);
      out.add_term(concat(x1, y1), concat(x2, y2), (ca * cb).shifted(twist_exponent(x2, y1)));
    }
  }
  return out;
}

const TensorElement& FreeAlgebra::delta_word(WordId w) {
  auto it = delta_cache_.find(w);
  if (it != delta_cache_.end()) return it->second;
  const auto letters = word_letters(w);
  TensorElement result(Alphabet::F);
  if (letters.empty()) {
    result.add_term(kEmptyWord, kEmptyWord, RatFunc(1));
  } else {
    const Letter head = letters.front();
    const int qp = datum_.qparen_exp(head.i);
    TensorElement dh(Alphabet::F);
    for (int m = 0; m <= head.l; ++m) {
      const int n = head.l - m;
      const WordId left = m == 0 ? kEmptyWord : letter_word(head.i, m);
      const WordId right = n == 0 ? kEmptyWord : letter_word(head.i, n);
      dh.add_term(left, right, RatFunc::q_power(-qp * m * n));
    }
    if (letters.size() == 1) {
      result = std::move(dh);
    } else {
      const WordId rest = word_suffix(w, 1);
      TensorElement tail = delta_word(rest);
      result = twisted_mul(dh, tail);
    }
  }
  return delta_cache_.emplace(w, std::move(result)).first->second;
}

TensorElement FreeAlgebra::delta(const FreeElement& x) {
  if (x.alphabet() != Alphabet::F && !x.is_zero()) {
    throw Error(ErrorCode::AlphabetMismatch, "delta is defined on the f-alphabet");
  }
  TensorElement out(Alphabet::F);
  for (const auto& [w, c] : x.terms()) {
    TensorElement t = delta_word(w);
    t *= c;
    out += t;
  }
  return out;
}

FreeElement FreeAlgebra::derivation(Side side, int i, int l, const FreeElement& x) const {
  FreeElement out(x.alphabet());
  for (const auto& [w, c] : x.terms()) {
    const auto& letters = word_letters(w);
    const std::size_t n = letters.size();
    // pairing (beta_prefix, alpha_i) accumulated along the word.
    std::vector<int> prefix(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + letters[k].l * datum_.sym(letters[k].i, i);
    for (std::size_t k = 0; k < n; ++k) {
      if (letters[k].i != i || letters[k].l != l) continue;
      // (|u|, alpha_i) = -(beta_u, alpha_i).
      const int pairing = side == Side::Left ? prefix[k] : prefix[n] - prefix[k + 1];
      out.add_term(remove_letter(w, k), c.shifted(-l * pairing));
    }
  }
  return out;
}

const std::vector<WordId>& FreeAlgebra::words_of_degree(const RootVector& beta) {
  auto it = words_cache_.find(beta.k);
  if (it != words_cache_.end()) return it->second;
  if (!beta.is_positive()) throw Error(ErrorCode::OutOfRange, "degree must lie in Q+");
  for (int i = 0; i < datum_.rank(); ++i) {
    if (datum_.is_imaginary(i) && beta.k[static_cast<std::size_t>(i)] > datum_.cutoff(i)) {
      throw Error(ErrorCode::DegreeTooLarge, "multiplicity " + std::to_string(beta.k[static_cast<std::size_t>(i)]) +
                                                 " of index " + datum_.names()[static_cast<std::size_t>(i)] +
                                                 " exceeds its level cutoff " + std::to_string(datum_.cutoff(i)));
    }
  }
  std::vector<WordId> out;
  std::vector<Letter> current;
  std::vector<int> remaining = beta.k;
  int left = beta.ht();
  auto rec = [&](auto&& self) -> void {
    if (left == 0) {
      out.push_back(intern_word(current));
      return;
    }
    for (int i = 0; i < datum_.rank(); ++i) {
      const int avail = remaining[static_cast<std::size_t>(i)];
      const int top = std::min(avail, datum_.is_real(i) ? 1 : datum_.cutoff(i));
      for (int l = 1; l <= top; ++l) {
        current.push_back(Letter{i, l});
        remaining[static_cast<std::size_t>(i)] -= l;
        left -= l;
        self(self);
        left += l;
        remaining[static_cast<std::size_t>(i)] += l;
        current.pop_back();
      }
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end(), degree_lex_less);
  return words_cache_.emplace(beta.k, std::move(out)).first->second;
}

}  // namespace qbb
