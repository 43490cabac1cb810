#include "loday/linalg.hpp"

#include <stdexcept>

namespace loday {

Rref rref(QMatrix a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!a(i, c).isZero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Rational inv = a(r, c).inverse();
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) = inv * a(r, j);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).isZero()) continue;
      const Rational f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

int rank(const QMatrix& a) { return static_cast<int>(rref(a).pivots.size()); }

QMatrix kernelBasis(const QMatrix& a) {
  const auto r = rref(a);
  const Eigen::Index cols = a.cols();
  std::vector<bool> isPivot(cols, false);
  for (int p : r.pivots) isPivot[p] = true;
  std::vector<int> freeCols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!isPivot[c]) freeCols.push_back(static_cast<int>(c));
  QMatrix k = QMatrix::Constant(cols, static_cast<Eigen::Index>(freeCols.size()), Rational(0));
  for (size_t j = 0; j < freeCols.size(); ++j) {
    const int fc = freeCols[j];
    k(fc, static_cast<Eigen::Index>(j)) = Rational(1);
    for (size_t i = 0; i < r.pivots.size(); ++i)
      k(r.pivots[i], static_cast<Eigen::Index>(j)) = -r.mat(static_cast<Eigen::Index>(i), fc);
  }
  return k;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto r = rref(std::move(aug));
  QVector x = QVector::Constant(a.cols(), Rational(0));
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == static_cast<int>(a.cols())) return std::nullopt;  // inconsistent
    x(r.pivots[i]) = r.mat(static_cast<Eigen::Index>(i), a.cols());
  }
  return x;
}

Rational determinant(QMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: square matrix required");
  const Eigen::Index n = a.rows();
  Rational det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (!a(i, c).isZero()) {
        p = i;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = a(c, c).inverse();
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c).isZero()) continue;
      const Rational f = a(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

QMatrix inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: square matrix required");
  const Eigen::Index n = a.rows();
  QMatrix aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = QMatrix::Identity(n, n);
  const auto r = rref(std::move(aug));
  if (static_cast<Eigen::Index>(r.pivots.size()) != n || r.pivots.back() >= n)
    throw std::invalid_argument("inverse: singular matrix");
  return r.mat.rightCols(n);
}

QVector reduceModuloSpan(const QMatrix& basis, const QVector& v) {
  if (basis.cols() == 0) return v;
  const auto r = rref(basis.transpose());
  QVector out = v;
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    const Rational f = out(r.pivots[i]);
    if (f.isZero()) continue;
    for (Eigen::Index j = 0; j < out.rows(); ++j)
      out(j) -= f * r.mat(static_cast<Eigen::Index>(i), j);
  }
  return out;
}

bool inSpan(const QMatrix& basis, const QVector& v) {
  const QVector red = reduceModuloSpan(basis, v);
  for (Eigen::Index i = 0; i < red.rows(); ++i)
    if (!red(i).isZero()) return false;
  return true;
}

}  // namespace loday
