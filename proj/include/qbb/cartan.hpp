#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qbb {

// Element of Q = sum Z alpha_i, stored by its coefficients k_i.
struct RootVector {
  std::vector<int> k;

  RootVector() = default;
  explicit RootVector(std::vector<int> coeffs) : k(std::move(coeffs)) {}
  static RootVector zero(int n) { return RootVector(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  static RootVector simple(int n, int i, int mult = 1);

  int ht() const;
  bool is_zero() const;
  // Every coefficient nonnegative.
  bool is_positive() const;
  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  RootVector operator-() const;
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(int c, RootVector a);
  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

// Element of P, given by its values on h_i and d_i.
struct Weight {
  std::vector<int> h;
  std::vector<int> d;

  static Weight zero(int n);
  // Fundamental weight Lambda_i.
  static Weight fundamental(int n, int i);
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

// Element of P^vee = sum Z h_i + sum Z d_i.
struct Coweight {
  std::vector<int> a;  // coefficients of h_i
  std::vector<int> b;  // coefficients of d_i

  static Coweight zero(int n);
  bool is_zero() const;
  Coweight& operator+=(const Coweight& o);
  Coweight operator-() const;
  friend Coweight operator+(Coweight x, const Coweight& y) { return x += y; }
  friend Coweight operator*(int c, Coweight x);
  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;
};

enum class IndexKind { Real, Imaginary, Isotropic };

class CartanDatum {
 public:
  int rank() const { return static_cast<int>(a_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<int>>& matrix() const { return a_; }
  int a(int i, int j) const { return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  int r(int i) const { return r_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& symmetrizer() const { return r_; }
  int cutoff(int i) const { return cutoff_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& cutoffs() const { return cutoff_; }

  IndexKind kind(int i) const;
  bool is_real(int i) const { return a(i, i) == 2; }
  bool is_imaginary(int i) const { return a(i, i) <= 0; }
  bool is_isotropic(int i) const { return a(i, i) == 0; }
  std::vector<int> real_indices() const;
  std::vector<int> imaginary_indices() const;
  std::vector<int> isotropic_indices() const;
  int index_of(const std::string& name) const;  // -1 if absent

  // (alpha_i, alpha_j) = r_i a_ij.
  int sym(int i, int j) const { return r(i) * a(i, j); }
  // Exponent e with q_i = q^e.
  int qi_exp(int i) const { return r(i); }
  // Exponent e with q_(i) = q^e, i.e. (alpha_i, alpha_i)/2.
  int qparen_exp(int i) const { return r(i) * a(i, i) / 2; }

  int sym_form(const RootVector& x, const RootVector& y) const;
  // lambda(h).
  static int pair(const Weight& lambda, const Coweight& h);
  // beta(h) for beta in Q.
  int pair(const RootVector& beta, const Coweight& h) const;
  // alpha_j(h).
  int alpha_of(int j, const Coweight& h) const;
  Weight root_as_weight(const RootVector& beta) const;
  Weight simple_root_weight(int i) const;
  // K_i^m = q^{m r_i h_i}.
  Coweight K(int i, int m = 1) const;
  Coweight h(int i) const;

  Weight simple_reflection(int i, const Weight& lambda) const;
  RootVector simple_reflection(int i, const RootVector& beta) const;

  std::string root_to_string(const RootVector& beta) const;

 private:
  friend CartanDatum validate_datum(const std::vector<std::vector<int>>&,
                                    const std::optional<std::vector<int>>&,
                                    const std::optional<std::vector<int>>&,
                                    const std::optional<std::vector<std::string>>&, int);

  std::vector<std::string> names_;
  std::vector<std::vector<int>> a_;
  std::vector<int> r_;
  std::vector<int> cutoff_;
};

// Validates A (and r, if given) and fixes cutoffs; throws ValidationFailure
// listing every violated condition. Real indices get cutoff 1; imaginary ones
// default to default_cutoff.
CartanDatum validate_datum(const std::vector<std::vector<int>>& a,
                           const std::optional<std::vector<int>>& r = std::nullopt,
                           const std::optional<std::vector<int>>& cutoffs = std::nullopt,
                           const std::optional<std::vector<std::string>>& names = std::nullopt,
                           int default_cutoff = 6);

// Smallest positive integer r with r_i a_ij = r_j a_ji, if one exists.
std::optional<std::vector<int>> infer_symmetrizer(const std::vector<std::vector<int>>& a,
                                                  std::string* why = nullptr);

}  // namespace qbb
