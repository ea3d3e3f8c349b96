#pragma once

#include <map>
#include <string>
#include <vector>

#include "qbb/lform.hpp"

namespace qbb {

struct PrimitiveEntry {
  FreeElement t;  // f-alphabet expansion
  RatFunc tau;
  // True when the lower Gram block was singular and t was fixed by supporting
  // the correction on pivot t-words; it is then unique only modulo the radical.
  bool canonical_lift = false;
};

struct PropertyCheck {
  std::string name;
  bool ok = false;
  // "exact" or "mod radical" when ok.
  std::string detail;
};

struct SerreResult {
  bool ok = false;
  FreeElement relation;  // f-alphabet
  RootVector degree;
  std::vector<WordId> words;
  std::vector<RatFunc> pairings;
};

class Primitives {
 public:
  explicit Primitives(LForm& form) : form_(form) {}

  LForm& form() { return form_; }
  const CartanDatum& datum() const { return form_.datum(); }

  const PrimitiveEntry& entry(int i, int l);
  const FreeElement& t(int i, int l) { return entry(i, l).t; }
  // ZeroTau if the self-pairing vanishes.
  RatFunc tau(int i, int l);
  // omega(t_{il}): same coefficients on e-words.
  FreeElement s(int i, int l) { return t(i, l).relabeled(Alphabet::E); }

  // f-alphabet expansion of a t-word (memoized).
  const FreeElement& expand_t_word(WordId w);
  // t-alphabet (or s-alphabet) element to f-alphabet (or e-alphabet).
  FreeElement to_f(const FreeElement& x);
  // f-alphabet (or e-alphabet) element to the t-alphabet (or s-alphabet).
  FreeElement to_t(const FreeElement& x);

  // t_i^(n) = t_i^n / [n]_i! in the f-alphabet; NotRealIndex for imaginary i.
  FreeElement divided_power(int i, int n);
  // sum_{p+p'=1-l a_ij} (-1)^p t_i^(p) t_{jl} t_i^(p').
  FreeElement serre_relation(int i, int j, int l);
  SerreResult serre_check(int i, int j, int l);

  // Orthogonality, normalization, eta-invariance and delta-primitivity.
  std::vector<PropertyCheck> check_properties(int i, int l);

  // (x, y)_L on t-words via (t_a y, x) = tau_a (y, e'_a(x)); needs the
  // primitives of every letter involved.
  RatFunc pair_t_words(WordId x, WordId y);

 private:
  PrimitiveEntry compute(int i, int l);

  LForm& form_;
  std::map<Letter, PrimitiveEntry> entries_;
  std::unordered_map<WordId, FreeElement> expansion_cache_;
  std::unordered_map<WordId, FreeElement> inverse_cache_;
  std::unordered_map<std::uint64_t, RatFunc> t_pair_cache_;
};

// True if x lies in rad (x) F + F (x) rad for the form on each homogeneous piece.
bool tensor_in_radical(LForm& form, const TensorElement& x);

}  // namespace qbb
