#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qbb/primitive.hpp"
#include "qbb/straighten.hpp"

namespace qbb {

// Element of A_1 = {f in Q(q) regular at q = 1}.
struct A1Scalar {
  RatFunc value;
  bool regular = false;

  static A1Scalar check(const RatFunc& f);
  // f(1); RegularityFailure if f is not in A_1.
  Rational limit() const;
  // Membership in the maximal ideal J_1 = (q - 1) A_1.
  bool in_J1() const;
};

// Toral part as (group element key, coefficient) pairs; keys all have the same length.
using ToralTerms = std::vector<std::pair<std::vector<int>, RatFunc>>;

// Classical limit of sum_h c_h(q) q^h as a polynomial in the variables hbar/dbar
// (variable k is the k-th key coordinate). Exact: values at an integer grid of
// side pole-order + 1 determine the polynomial. NotRegular if some weight
// specialization has a pole at q = 1.
MPoly toral_limit(const ToralTerms& terms);

// Element of U(g) as sum of f-word * P(hbar, dbar) * e-word.
class ClassicalElement {
 public:
  void add_term(WordId f, WordId e, const MPoly& p);
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<WordId, WordId>, MPoly>& terms() const { return terms_; }
  ClassicalElement& operator+=(const ClassicalElement& o);
  ClassicalElement& operator*=(const Rational& c);
  friend ClassicalElement operator-(ClassicalElement a, const ClassicalElement& b) {
    b.for_each([&](WordId f, WordId e, const MPoly& p) { a.add_term(f, e, -p); });
    return a;
  }
  friend bool operator==(const ClassicalElement& a, const ClassicalElement& b) { return a.terms_ == b.terms_; }
  std::string to_string(const CartanDatum& datum) const;

 private:
  template <class F>
  void for_each(F&& fn) const {
    for (const auto& [k, p] : terms_) fn(k.first, k.second, p);
  }
  std::map<std::pair<WordId, WordId>, MPoly> terms_;
};

// Element of U(g) (x) U(g); the polynomial uses 4n variables, the first 2n for the left factor.
using ClassicalTensor = std::map<std::tuple<WordId, WordId, WordId, WordId>, MPoly>;

struct LimitCheck {
  std::string relation;
  bool ok = false;
  std::string witness;
};

// The A_1-form: symbolic normal forms T-word * toral * s-word over the rescaled
// generators T_il = t_il / (tau_il (q_i^2 - 1)) and s_il, straightened with the
// toral moves and s_il T_jk - T_jk s_il = delta delta (K_i^l - K_i^-l) / (q_i^2 - 1).
// NormalForm is reused with its f-word read as a T-word and its e-word as an s-word.
class A1Form {
 public:
  A1Form(Straightener& st, Primitives& prim);

  const CartanDatum& datum() const { return st_.datum(); }
  Straightener& straightener() { return st_; }

  // tau_il (q_i^2 - 1).
  RatFunc rescaling(int i, int l);
  NormalForm T(int i, int l) const;
  NormalForm s(int i, int l) const;
  NormalForm toral(const Coweight& h) const { return st_.toral(h); }
  // (q^h; n)_q = (q^h q^n - 1) / (q - 1).
  NormalForm qh(const Coweight& h, int n = 0) const;
  // (K_i^l - K_i^-l) / (q_i^2 - 1).
  NormalForm k_difference(int i, int l) const;

  NormalForm multiply(const NormalForm& a, const NormalForm& b);
  NormalForm commutator(const NormalForm& a, const NormalForm& b);
  // Image in U_q(g): reduced f-word * toral * e-word normal form.
  NormalForm expand(const NormalForm& a);

  // Every coefficient, read in the evaluation sense on the toral part, lies in A_1.
  // On failure the offending term is described in *witness.
  bool is_regular(const NormalForm& a, std::string* witness = nullptr) const;
  // q -> 1 with s_il -> e_il, T_il -> f_il and (q^h;0)_q -> hbar. RegularityFailure if not regular.
  ClassicalElement limit(const NormalForm& a) const;
  ClassicalTensor limit(const NormalTensor& t) const;

 private:
  const NormalForm& mul_st(WordId s_word, WordId t_word);
  void mul_mono_into(NormalForm& out, const Mono& x, const Mono& y, const RatFunc& c);
  FreeElement expand_word(WordId w, bool upper);

  Straightener& st_;
  Primitives& prim_;
  std::map<std::pair<WordId, WordId>, NormalForm> st_cache_;
  std::map<std::pair<WordId, bool>, FreeElement> expand_cache_;
};

// Classical relations of U(g) recovered from the A_1-form: [sbar, Tbar] = delta delta l hbar,
// hbar-commutators, commuting pairs for a_ij = 0 and the Serre relations with binomial limits.
std::vector<LimitCheck> check_classical_relations(A1Form& a1, int max_level = 3);
// Products of generators {s, T, q^h, (q^h;0)_q} of total level <= max_level stay in the A_1-form,
// and their symbolic straightening agrees with the product in U_q(g).
std::vector<LimitCheck> check_a1_closure(A1Form& a1, int max_level = 4, int max_length = 3);
// Limits of Delta, S and epsilon on T, s and (q^h;0)_q are the primitive Hopf structure of U(g).
std::vector<LimitCheck> check_hopf_limits(A1Form& a1, int max_level = 3);

}  // namespace qbb
