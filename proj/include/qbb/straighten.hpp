#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qbb/lform.hpp"
#include "qbb/mpoly.hpp"

namespace qbb {

// f-word * q^h * e-word. h lists the coefficients on h_0..h_{n-1} followed by d_0..d_{n-1}.
struct Mono {
  WordId f = kEmptyWord;
  std::vector<int> h;
  WordId e = kEmptyWord;
  friend auto operator<=>(const Mono&, const Mono&) = default;
};

std::vector<int> toral_key(const Coweight& h);
Coweight key_coweight(const std::vector<int>& key);
// beta_w(h) for the degree beta_w of word w and toral key h.
int toral_weight(const CartanDatum& datum, WordId w, const std::vector<int>& key);

// Element of U_q(g) in triangular normal form.
class NormalForm {
 public:
  NormalForm() = default;
  static NormalForm mono(Mono m, const RatFunc& c = RatFunc(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Mono, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(const Mono& m) const;
  // True if every term has empty f- and e-words.
  bool is_toral() const;

  void add_term(const Mono& m, const RatFunc& c);
  NormalForm& operator+=(const NormalForm& o);
  NormalForm& operator-=(const NormalForm& o);
  NormalForm& operator*=(const RatFunc& c);
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  friend NormalForm operator*(NormalForm a, const RatFunc& c) { return a *= c; }
  friend NormalForm operator*(const RatFunc& c, NormalForm a) { return a *= c; }
  friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }

  // Terms ordered by f-word (degree-lex), toral part, then e-word.
  std::vector<std::pair<Mono, RatFunc>> sorted_terms() const;
  std::string to_string(const CartanDatum& datum) const;

 private:
  std::map<Mono, RatFunc> terms_;
};

std::string toral_to_string(const std::vector<int>& key, const CartanDatum& datum);
std::string mono_to_string(const Mono& m, const CartanDatum& datum);

// Finite sum of NormalForm (x) NormalForm.
class NormalTensor {
 public:
  void add_term(const Mono& a, const Mono& b, const RatFunc& c);
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<Mono, Mono>, RatFunc>& terms() const { return terms_; }
  NormalTensor& operator+=(const NormalTensor& o);
  NormalTensor& operator-=(const NormalTensor& o);
  NormalTensor& operator*=(const RatFunc& c);
  friend NormalTensor operator+(NormalTensor a, const NormalTensor& b) { return a += b; }
  friend NormalTensor operator-(NormalTensor a, const NormalTensor& b) { return a -= b; }
  friend bool operator==(const NormalTensor& a, const NormalTensor& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NormalTensor& a, const NormalTensor& b) { return !(a == b); }
  static NormalTensor pure(const NormalForm& a, const NormalForm& b);
  std::string to_string(const CartanDatum& datum) const;

 private:
  std::map<std::pair<Mono, Mono>, RatFunc> terms_;
};

// theta_m = sum over compositions c of m of (-1)^{#parts} prod_k nu_{c_k}, for one index.
class ThetaTable {
 public:
  ThetaTable() = default;
  // nu[l - 1] = nu_l; entries up to m = nu.size().
  explicit ThetaTable(const std::vector<RatFunc>& nu);
  const RatFunc& operator[](int m) const { return theta_.at(static_cast<std::size_t>(m)); }
  int max_m() const { return static_cast<int>(theta_.size()) - 1; }

 private:
  std::vector<RatFunc> theta_;
};

// Laurent polynomial in K with polynomial coefficients in symbolic nu_1, nu_2, ...
// (variable index l - 1 stands for nu_l).
using KPoly = std::map<int, MPoly>;
MPoly theta_symbolic(int m);
// alpha_n from alpha_n = nu_n (K^n - K^-n) - sum_j nu_j K^-j alpha_{n-j}.
KPoly alpha_recursive(int n);
// alpha_n = sum_r nu_r theta_{n-r} K^{r-n} (K^r - K^-r).
KPoly alpha_closed(int n);

// Normal-form engine for U_q(g): triangular straightening, cross commutators and Hopf maps.
// Holds memo caches; not thread-safe.
class Straightener {
 public:
  explicit Straightener(LForm& form);

  const CartanDatum& datum() const { return form_.datum(); }
  LForm& form() { return form_; }

  NormalForm one() const { return scalar(RatFunc(1)); }
  NormalForm scalar(const RatFunc& c) const;
  NormalForm f(int i, int l) const;
  NormalForm e(int i, int l) const;
  NormalForm f_word(WordId w) const;
  NormalForm e_word(WordId w) const;
  NormalForm toral(const Coweight& h) const;
  // K_i^m.
  NormalForm K(int i, int m = 1) const;
  // f-alphabet elements become f-words, e-alphabet elements e-words.
  NormalForm from_free(const FreeElement& x) const;

  // Product with both word sides reduced modulo the radical. DegreeTooLarge
  // if a word degree exceeds the form's max_ht.
  NormalForm multiply(const NormalForm& a, const NormalForm& b);
  // Product in the free double (no reduction).
  NormalForm multiply_free(const NormalForm& a, const NormalForm& b);
  NormalForm reduce(const NormalForm& a);
  NormalForm commutator(const NormalForm& a, const NormalForm& b);

  // e_{il} f_{ik} - f_{ik} e_{il} from the closed formula.
  NormalForm commutator_closed(int i, int l, int k);
  // Same quantity by solving the defining relations recursively.
  NormalForm commutator_recursive(int i, int l, int k);
  // e_{il} f_{jk} - f_{jk} e_{il}; zero when i != j.
  NormalForm cross_commutator(int i, int l, int j, int k);
  const ThetaTable& theta(int i);

  NormalTensor coproduct(const NormalForm& x);
  NormalForm antipode(const NormalForm& x);
  RatFunc counit(const NormalForm& x) const;
  NormalForm omega(const NormalForm& x);
  NormalForm eta(const NormalForm& x) const;

  NormalTensor tensor_multiply(const NormalTensor& a, const NormalTensor& b);
  NormalTensor reduce(const NormalTensor& t);
  // m o (S (x) id), m o (id (x) S) and (eps (x) id), (id (x) eps) applied to a tensor.
  NormalForm antipode_contract(const NormalTensor& t, bool left);
  NormalForm counit_contract(const NormalTensor& t, bool left);

 private:
  std::vector<int> zero_key() const;
  std::vector<int> k_key(int i, int m) const;
  const NormalForm& mul_ef(WordId e, WordId f);
  void mul_mono_into(NormalForm& out, const Mono& x, const Mono& y, const RatFunc& c);
  const FreeElement& reduced_word(WordId w);
  const NormalTensor& coproduct_letter(const Letter& x, bool e_side);
  const NormalForm& antipode_letter(const Letter& x, bool e_side);

  LForm& form_;
  std::map<std::pair<WordId, WordId>, NormalForm> ef_cache_;
  std::map<std::tuple<int, int, int>, NormalForm> closed_cache_;
  std::map<std::tuple<int, int, int>, NormalForm> recursive_cache_;
  std::map<int, ThetaTable> theta_cache_;
  std::unordered_map<WordId, FreeElement> reduce_cache_;
  std::map<std::pair<Letter, bool>, NormalTensor> coproduct_cache_;
  std::map<std::pair<Letter, bool>, NormalForm> antipode_cache_;
};

}  // namespace qbb
