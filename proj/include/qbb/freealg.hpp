#pragma once

#include <compare>
#include <map>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qbb/cartan.hpp"
#include "qbb/ratfunc.hpp"

namespace qbb {

// Generator index (i, l) in I^infinity.
struct Letter {
  int i = 0;
  int l = 1;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Interned word; id 0 is the empty word.
using WordId = std::uint32_t;
constexpr WordId kEmptyWord = 0;

WordId intern_word(const std::vector<Letter>& letters);
// Reference stays valid for the lifetime of the process.
const std::vector<Letter>& word_letters(WordId w);
WordId letter_word(int i, int l);
WordId concat(WordId a, WordId b);
std::size_t word_length(WordId w);
// Shorter words first, then lexicographic on (i, l).
bool degree_lex_less(WordId a, WordId b);
// Word with letter k removed.
WordId remove_letter(WordId w, std::size_t k);
// Words appearing as w = prefix * suffix, split after the first k letters.
WordId word_prefix(WordId w, std::size_t k);
WordId word_suffix(WordId w, std::size_t k);

enum class Alphabet { F, T, E, S };
std::string alphabet_symbol(Alphabet a);
// "f(i,1)*f(j,2)"; "1" for the empty word.
std::string word_string(WordId w, Alphabet a, const CartanDatum& datum);
// Signed coefficient followed by body, as one summand of a printed sum ("1" means a bare scalar).
std::string coeff_prefix(const RatFunc& c, bool first);
std::string format_term(const RatFunc& c, const std::string& body, bool first);

// Sum of words over Q(q), all in one alphabet.
class FreeElement {
 public:
  FreeElement() = default;
  explicit FreeElement(Alphabet a) : alphabet_(a) {}
  static FreeElement one(Alphabet a) { return word(kEmptyWord, a); }
  static FreeElement word(WordId w, Alphabet a, const RatFunc& c = RatFunc(1));
  static FreeElement letter(int i, int l, Alphabet a) { return word(letter_word(i, l), a); }

  Alphabet alphabet() const { return alphabet_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::unordered_map<WordId, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(WordId w) const;
  // Terms in degree-lex order.
  std::vector<std::pair<WordId, RatFunc>> sorted_terms() const;

  void add_term(WordId w, const RatFunc& c);
  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  FreeElement& operator*=(const RatFunc& c);
  FreeElement operator-() const;
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(FreeElement a, const RatFunc& c) { return a *= c; }
  friend FreeElement operator*(const RatFunc& c, FreeElement a) { return a *= c; }
  // Concatenation product.
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend bool operator==(const FreeElement& a, const FreeElement& b);
  friend bool operator!=(const FreeElement& a, const FreeElement& b) { return !(a == b); }

  // Same coefficients on the same words in another alphabet.
  FreeElement relabeled(Alphabet a) const;
  // Coefficient-wise q -> q^{-1}.
  FreeElement bar() const;

  std::string to_string(const CartanDatum& datum) const;

 private:
  Alphabet alphabet_ = Alphabet::F;
  std::unordered_map<WordId, RatFunc> terms_;
};

// Sum of pairs of words; both tensor factors share one alphabet.
class TensorElement {
 public:
  TensorElement() = default;
  explicit TensorElement(Alphabet a) : alphabet_(a) {}
  static TensorElement pure(const FreeElement& x, const FreeElement& y);

  Alphabet alphabet() const { return alphabet_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(WordId a, WordId b, const RatFunc& c);
  RatFunc coeff(WordId a, WordId b) const;
  std::vector<std::pair<std::pair<WordId, WordId>, RatFunc>> sorted_terms() const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const RatFunc& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend bool operator==(const TensorElement& a, const TensorElement& b);

  std::string to_string(const CartanDatum& datum) const;

  // Raw access keyed by (a << 32) | b.
  const std::unordered_map<std::uint64_t, RatFunc>& raw() const { return terms_; }
  static std::uint64_t key(WordId a, WordId b) { return (static_cast<std::uint64_t>(a) << 32U) | b; }
  static WordId first(std::uint64_t k) { return static_cast<WordId>(k >> 32U); }
  static WordId second(std::uint64_t k) { return static_cast<WordId>(k & 0xffffffffU); }

 private:
  Alphabet alphabet_ = Alphabet::F;
  std::unordered_map<std::uint64_t, RatFunc> terms_;
};

enum class Side { Left, Right };

// The free algebra attached to a datum: grading, twisted tensor square,
// coproduct delta and the derivations e', e''. Holds memo caches, so one
// instance should not be shared between threads.
class FreeAlgebra {
 public:
  explicit FreeAlgebra(CartanDatum datum) : datum_(std::move(datum)) {}

  const CartanDatum& datum() const { return datum_; }
  // beta with |w| = -beta.
  RootVector degree(WordId w) const;
  bool is_valid_letter(const Letter& x) const;

  // Exponent of q in (x2 (x) .)(y1 (x) .): -(|x2|, |y1|).
  int twist_exponent(WordId x2, WordId y1) const;
  TensorElement twisted_mul(const TensorElement& a, const TensorElement& b) const;

  // delta on an f-alphabet word (memoized) and on elements.
  const TensorElement& delta_word(WordId w);
  TensorElement delta(const FreeElement& x);

  // e'_{i,l} (Side::Left) or e''_{i,l} (Side::Right), letters read as t_{jk}.
  FreeElement derivation(Side side, int i, int l, const FreeElement& x) const;

  // All words of degree -beta, degree-lex ordered. DegreeTooLarge when an
  // imaginary multiplicity exceeds its level cutoff.
  const std::vector<WordId>& words_of_degree(const RootVector& beta);

 private:
  CartanDatum datum_;
  std::unordered_map<WordId, TensorElement> delta_cache_;
  std::map<std::vector<int>, std::vector<WordId>> words_cache_;
};

}  // namespace qbb
