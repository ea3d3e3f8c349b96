#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "qbb/cartan.hpp"
#include "qbb/error.hpp"
#include "qbb/freealg.hpp"
#include "qbb/linalg.hpp"

namespace qbb {

// The parameters nu_{il}.
class NuParams {
 public:
  NuParams() = default;
  // nu_{il} = 1 + q^{l r_i} for every generator up to the cutoffs.
  static NuParams defaults(const CartanDatum& datum);

  void set(int i, int l, const RatFunc& value) { values_[Letter{i, l}] = value; }
  bool has(int i, int l) const { return values_.count(Letter{i, l}) > 0; }
  // Value for (i, l); falls back to 1 + q^{l r_i} when unset.
  RatFunc nu(const CartanDatum& datum, int i, int l) const;
  const std::map<Letter, RatFunc>& values() const { return values_; }

 private:
  std::map<Letter, RatFunc> values_;
};

// Checks nu in 1 + q Z_{>=0}[[q]]. Polynomials are checked exactly; other
// rational functions on the first series_terms coefficients of their expansion at q = 0.
std::vector<Diagnostic> check_nu_assumption(const RatFunc& nu, const std::string& label, int series_terms = 64);
// Power series coefficients of f at q = 0 (f must have no pole there).
std::vector<Rational> series_at_zero(const RatFunc& f, int terms);

// Per-degree Gram data of the form on F.
struct GramData {
  RootVector beta;
  std::vector<WordId> words;
  std::unordered_map<WordId, int> index;
  RMatrix gram;
  ColumnBasis basis;  // pivots index into words

  int rank() const { return basis.rank(); }
  int size() const { return static_cast<int>(words.size()); }
  std::vector<WordId> pivot_words() const;
  // Basis of the radical: w_j - sum_k coords[k][j] w_{p_k}, j not a pivot.
  std::vector<FreeElement> radical_basis(Alphabet a = Alphabet::F) const;
};

class LForm {
 public:
  LForm(const CartanDatum& datum, NuParams nu);

  const CartanDatum& datum() const { return alg_.datum(); }
  FreeAlgebra& algebra() { return alg_; }
  const NuParams& nu_params() const { return nu_; }
  RatFunc nu(int i, int l) const { return nu_.nu(alg_.datum(), i, l); }

  // (x, y)_L on f-alphabet words (memoized).
  RatFunc pair_words(WordId x, WordId y);
  // Bilinear extension; the alphabet is ignored so that e-words pair through omega.
  RatFunc pair(const FreeElement& x, const FreeElement& y);
  RatFunc pair_tensor(const TensorElement& x, const TensorElement& y);

  // Gram data for degree -beta; DegreeTooLarge beyond max_ht or a level cutoff.
  const GramData& gram(const RootVector& beta);
  int max_ht() const { return max_ht_; }
  void set_max_ht(int h) { max_ht_ = h; }

  // Coordinates of a homogeneous element of degree -beta in the pivot basis.
  std::vector<RatFunc> reduce_coords(const FreeElement& x, const RootVector& beta);
  // Same element rewritten on the pivot words (the canonical representative mod the radical).
  FreeElement reduce(const FreeElement& x);
  // True if x pairs to zero with every word of its degree.
  bool in_radical(const FreeElement& x);
  // Pairings of x against every word of degree -beta, in word order.
  std::vector<RatFunc> pairing_certificate(const FreeElement& x, const RootVector& beta);

  // Splits an element into homogeneous components keyed by degree.
  std::map<std::vector<int>, FreeElement> homogeneous_parts(const FreeElement& x) const;

 private:
  FreeAlgebra alg_;
  NuParams nu_;
  int max_ht_ = 6;
  std::unordered_map<std::uint64_t, RatFunc> pair_cache_;
  std::map<std::vector<int>, std::unique_ptr<GramData>> gram_cache_;
};

}  // namespace qbb
