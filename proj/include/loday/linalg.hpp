// Exact Gaussian elimination over the rationals on Eigen matrices.
#ifndef LODAY_LINALG_HPP
#define LODAY_LINALG_HPP

#include "loday/rational.hpp"

#include <optional>
#include <vector>

namespace loday {

struct Rref {
  QMatrix mat;              // reduced row echelon form
  std::vector<int> pivots;  // pivot column per nonzero row
};

Rref rref(QMatrix a);

int rank(const QMatrix& a);

// Columns form a basis of the right nullspace; deterministic (free
// variables in increasing column order, pivot entries back-substituted).
QMatrix kernelBasis(const QMatrix& a);

// One solution of A x = b, or nullopt if inconsistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

Rational determinant(QMatrix a);

QMatrix inverse(const QMatrix& a);  // throws on singular input

// Canonical coset representative of v modulo the column span of basis:
// eliminates the pivot coordinates of rref(basis^T) from v.
QVector reduceModuloSpan(const QMatrix& basis, const QVector& v);

bool inSpan(const QMatrix& basis, const QVector& v);

}  // namespace loday

#endif
