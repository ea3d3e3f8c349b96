#pragma once

#include <map>
#include <string>
#include <vector>

#include "qbb/primitive.hpp"
#include "qbb/straighten.hpp"

namespace qbb {

enum class ModuleMode {
  Verma,
  // Quotient of the Verma module by the submodule generated by f_i^{lambda(h_i)+1} v (i real)
  // and t_ik v (i imaginary with lambda(h_i) = 0): the maximal standard quotient.
  Quotient,
};

struct WeightRow {
  RootVector beta;  // mu = lambda - beta
  Weight mu;
  int quantum = 0;
  int classical = -1;  // -1 when not computed
  // Coset representatives of the weight space among the Gram pivot words.
  std::vector<WordId> basis;
};

struct DimTable {
  Weight lambda;
  ModuleMode mode = ModuleMode::Verma;
  int depth = 0;
  std::vector<WeightRow> rows;
  // Degrees of height <= depth left out because an imaginary multiplicity exceeds its cutoff.
  std::vector<RootVector> omitted;
  // Empty in Verma mode.
  std::string assumption;
  // True if every computed row has quantum == classical.
  bool equal() const;
};

// Sparse vector over Q in word coordinates.
using ClassicalVector = std::map<WordId, Rational>;

struct ModuleCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Highest-weight modules V = U^- v_lambda over U_q(g) and their classical counterparts over U(g).
class ModuleEngine {
 public:
  ModuleEngine(Straightener& st, Primitives& prim);

  const CartanDatum& datum() const { return st_.datum(); }

  // Nonzero beta >= 0 of height <= depth, degree-lex by height; zero included first.
  std::vector<RootVector> degrees(int depth, std::vector<RootVector>* omitted = nullptr) const;

  // dim M(lambda)_{lambda - beta} = rank of the Gram matrix at beta. DegreeTooLarge if depth > max_ht.
  DimTable verma_dims(const Weight& lambda, int depth);
  // NotDominant unless lambda(h_i) >= 0 for all i.
  DimTable hw_quotient_dims(const Weight& lambda, int depth);
  // Quantum table with the classical U(g) table alongside.
  DimTable char_compare(const Weight& lambda, int depth, ModuleMode mode);

  // Dimension of the beta-component of U^-(g) (or of U^-(g) modulo the classical
  // left ideal of the quotient) from the presentation of U(g) over Q.
  int classical_dim(const RootVector& beta, const Weight& lambda, ModuleMode mode);

  // e_il acting on x v_lambda, returned as an element y with y v_lambda the result.
  FreeElement e_action(int i, int l, const FreeElement& x, const Weight& lambda);
  // q^h x v_lambda = q^{(lambda - beta)(h)} x v_lambda on the Gram basis vectors, e kills v_lambda,
  // and the quotient generators are singular vectors.
  std::vector<ModuleCheck> check_actions(const Weight& lambda, int depth);

  // Quotient generators with their degrees.
  std::vector<std::pair<FreeElement, RootVector>> quantum_generators(const Weight& lambda);
  std::vector<std::pair<ClassicalVector, RootVector>> classical_generators(const Weight& lambda) const;

  // lambda(h) for a toral key.
  static int toral_value(const Weight& lambda, const std::vector<int>& key);

 private:
  DimTable table(const Weight& lambda, int depth, ModuleMode mode, bool classical);
  void quantum_row(WeightRow& row, const Weight& lambda, ModuleMode mode);
  const std::vector<std::pair<ClassicalVector, RootVector>>& classical_relations();
  std::vector<ClassicalVector> classical_ideal(const RootVector& beta);
  FreeElement apply(const NormalForm& a, const FreeElement& x, const Weight& lambda);

  Straightener& st_;
  Primitives& prim_;
  std::vector<std::pair<ClassicalVector, RootVector>> relations_;
  bool relations_ready_ = false;
  std::map<RootVector, std::vector<ClassicalVector>> ideal_cache_;
};

std::string mode_name(ModuleMode m);

}  // namespace qbb
