#pragma once

#include <optional>
#include <vector>

#include "qbb/ratfunc.hpp"

namespace qbb {

using RMatrix = std::vector<std::vector<RatFunc>>;
using QMatrix = std::vector<std::vector<Rational>>;

// Column-space data of a matrix G (n x N): pivots are the lexicographically
// first maximal set of independent columns, and coords (r x N) expresses every
// column in terms of the pivot columns: G[:, j] = sum_k coords[k][j] G[:, pivots[k]].
struct ColumnBasis {
  std::vector<int> pivots;
  RMatrix coords;
  int rank() const { return static_cast<int>(pivots.size()); }
};

// Reduced row echelon form over Q(q); returns pivot columns.
std::vector<int> rref_in_place(RMatrix& m);
ColumnBasis column_basis(const RMatrix& g);
// Same result for a symmetric matrix, found by evaluating at rational points to
// guess pivots and then solving and verifying exactly.
ColumnBasis column_basis_symmetric(const RMatrix& g);

// Pivot columns of a rational matrix (row echelon over Q).
std::vector<int> pivot_columns(QMatrix m);
QMatrix evaluate(const RMatrix& g, const Rational& point);

// Solve A X = B for square nonsingular A by fraction-free Gauss-Jordan on
// polynomialized rows; nullopt if A is singular.
std::optional<RMatrix> solve_fraction_free(const RMatrix& a, const RMatrix& b);

// Basis of {x : m x = 0}.
std::vector<std::vector<RatFunc>> kernel(const RMatrix& m);

RMatrix transpose(const RMatrix& m);
RMatrix multiply(const RMatrix& a, const RMatrix& b);

}  // namespace qbb
