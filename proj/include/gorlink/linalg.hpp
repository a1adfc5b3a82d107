#ifndef GORLINK_LINALG_HPP
#define GORLINK_LINALG_HPP

#include <vector>

#include "gorlink/polynomial.hpp"

namespace gorlink {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Exact determinant by cofactor expansion with subset memoization
/// (division-free).
Polynomial determinant(const PolyMatrix& m);

/// Pfaffian of the principal submatrix of a skew-symmetric matrix on
/// the given row/column subset (0-based, even size), by the recursive
/// expansion Pf = sum_j (-1)^j m_{1j} Pf(remove 1, j).
Polynomial pfaffian(const PolyMatrix& m, const std::vector<int>& rows);

/// Pfaffian on all rows.
Polynomial pfaffian(const PolyMatrix& m);

bool is_skew_symmetric(const PolyMatrix& m);

/// Reduced row echelon form over the scalar field, in place.
/// Returns the pivot column of each nonzero row.
std::vector<int> rref(const Field& f, std::vector<std::vector<Scalar>>& m);

/// Basis of the right kernel of the matrix (columns = kernel vectors).
std::vector<std::vector<Scalar>> kernel_basis(const Field& f, std::vector<std::vector<Scalar>> m,
                                              int ncols);

} // namespace gorlink

#endif
