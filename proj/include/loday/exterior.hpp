// Exterior algebra of the free rank-n module over the scalar ring:
// wedge, metric extension, twisted contraction, and the degree -2
// graded Poisson bracket over a point.
#ifndef LODAY_EXTERIOR_HPP
#define LODAY_EXTERIOR_HPP

#include "loday/linalg.hpp"
#include "loday/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace loday {

// Strictly increasing 0-based indices into {0..n-1}.
using IndexSet = std::vector<int>;

// All k-subsets of {0..n-1} in lexicographic order.
const std::vector<IndexSet>& subsets(int n, int k);
int subsetPosition(int n, const IndexSet& s);
long long binomial(int n, int k);

// Element of wedge^k of the free rank-n module, coefficients in Poly.
class MultiSection {
public:
  MultiSection() = default;
  MultiSection(int rank, int degree, Ring ring);

  static MultiSection zero(int rank, int degree, const Ring& ring) {
    return MultiSection(rank, degree, ring);
  }
  static MultiSection basis(int rank, const Ring& ring, const IndexSet& idx);
  static MultiSection basisVector(int rank, const Ring& ring, int i);
  static MultiSection scalar(int rank, const Ring& ring, const Poly& f);

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const Ring& ring() const { return ring_; }
  const std::map<IndexSet, Poly>& coeffs() const { return coeffs_; }

  bool isZero() const { return coeffs_.empty(); }
  // Coefficient on the sorted index tuple idx (zero Poly if absent).
  Poly coeff(const IndexSet& idx) const;
  void setCoeff(const IndexSet& idx, const Poly& p);
  void addCoeff(const IndexSet& idx, const Poly& p);

  int maxCoeffDegree() const;  // -1 when zero

  MultiSection operator-() const;
  MultiSection& operator+=(const MultiSection& o);
  MultiSection& operator-=(const MultiSection& o);
  friend MultiSection operator+(MultiSection a, const MultiSection& b) { return a += b; }
  friend MultiSection operator-(MultiSection a, const MultiSection& b) { return a -= b; }
  friend MultiSection operator*(const Poly& f, const MultiSection& a);
  friend MultiSection operator*(const Rational& c, const MultiSection& a);

  friend bool operator==(const MultiSection& a, const MultiSection& b);
  friend bool operator!=(const MultiSection& a, const MultiSection& b) { return !(a == b); }

  std::string str() const;

private:
  void requireCompatible(const MultiSection& o) const;

  int rank_ = 0;
  int degree_ = 0;
  Ring ring_;
  std::map<IndexSet, Poly> coeffs_;
};

using Section = MultiSection;  // degree-1 sections

std::ostream& operator<<(std::ostream& os, const MultiSection& a);

// Degrees above the rank collapse to zero, per exterior algebra.
MultiSection wedge(const MultiSection& a, const MultiSection& b);

// Interior product against the canonical dual of basis vector i:
// the odd derivation with e_i -> 1, e_j -> 0 (j != i).
MultiSection dualContract(int i, const MultiSection& a);

// Pseudo-metric on the rank-n module plus its exterior extension Xi.
class Metric {
public:
  Metric() = default;
  explicit Metric(QMatrix g);

  int rank() const { return static_cast<int>(g_.rows()); }
  const QMatrix& g() const { return g_; }
  const QMatrix& gInv() const { return gInv_; }

  // det of the submatrix g[rowsI, colsJ], |I| = |J|.
  Rational minorDet(const IndexSet& rowsI, const IndexSet& colsJ) const;
  Rational minorDetInv(const IndexSet& rowsI, const IndexSet& colsJ) const;

  // <a,b> with the determinant extension to wedge^k; degree mismatch throws.
  Poly pair(const MultiSection& a, const MultiSection& b) const;

  // Xi: wedge^k E -> wedge^k E* (coordinates in the dual basis), and back.
  MultiSection xi(const MultiSection& a) const;
  MultiSection xiInv(const MultiSection& a) const;

  // breve-i_e = Xi^{-1} o i_e o Xi: odd derivation, x -> <e,x> on degree 1.
  MultiSection breveContract(const Section& e, const MultiSection& a) const;

private:
  QMatrix g_;
  QMatrix gInv_;
};

// Degree -2 graded Poisson bracket on wedge E over a point; the sign
// convention is pinned by the derived-bracket reproduction tests.
MultiSection gradedPoisson(const MultiSection& a, const MultiSection& b, const Metric& m);

}  // namespace loday

#endif
