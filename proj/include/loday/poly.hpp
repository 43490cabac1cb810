// Sparse multivariate polynomials over the rationals, and polynomial
// vector fields (derivations). The coefficient ring standing in for
// C^inf(M): a point base is the ring with no variables.
#ifndef LODAY_POLY_HPP
#define LODAY_POLY_HPP

#include "loday/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace loday {

// Variable list shared by all scalars of one algebroid.
class Ring {
public:
  Ring() = default;
  explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Ring point() { return Ring(); }

  bool isPoint() const { return vars_.empty(); }
  int numVars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& varName(int i) const { return vars_.at(i); }
  int varIndex(const std::string& name) const;  // -1 if absent

  friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_; }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
  std::vector<std::string> vars_;
};

using Exponents = std::vector<int>;

// Graded lexicographic: compare total degree first, then exponents.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class Poly {
public:
  Poly() = default;
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  static Poly constant(const Ring& ring, const Rational& c);
  static Poly variable(const Ring& ring, int varIdx);
  static Poly monomial(const Ring& ring, const Exponents& exps, const Rational& c);

  // Canonical syntax, e.g. "2/3*x^2*y - z + 1". Round-trips with str().
  static Poly parse(const Ring& ring, const std::string& text);

  const Ring& ring() const { return ring_; }
  const std::map<Exponents, Rational, GradedLexLess>& terms() const { return terms_; }

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  // Constant term (zero if absent).
  Rational constantTerm() const;
  int totalDegree() const;  // -1 for the zero polynomial

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly partial(int varIdx) const;
  Poly partial(const std::string& varName) const;

  std::string str() const;

private:
  void insertTerm(const Exponents& e, const Rational& c);
  void requireSameRing(const Poly& o) const;

  Ring ring_;
  std::map<Exponents, Rational, GradedLexLess> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Polynomial vector field sum_i a_i d/dx_i acting on Poly by derivation.
class Derivation {
public:
  Derivation() = default;
  explicit Derivation(const Ring& ring);
  Derivation(Ring ring, std::vector<Poly> coeffs);

  static Derivation zero(const Ring& ring) { return Derivation(ring); }
  static Derivation coordinate(const Ring& ring, int varIdx);

  const Ring& ring() const { return ring_; }
  const Poly& coeff(int i) const { return coeffs_.at(i); }
  const std::vector<Poly>& coeffs() const { return coeffs_; }

  bool isZero() const;

  Poly apply(const Poly& p) const;

  Derivation operator-() const;
  Derivation& operator+=(const Derivation& o);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b);
  friend Derivation operator*(const Poly& f, const Derivation& X);

  // [X,Y] as a derivation: coefficients X(Y_k) - Y(X_k).
  friend Derivation commutator(const Derivation& X, const Derivation& Y);

  friend bool operator==(const Derivation& a, const Derivation& b);
  friend bool operator!=(const Derivation& a, const Derivation& b) { return !(a == b); }

  std::string str() const;

private:
  Ring ring_;
  std::vector<Poly> coeffs_;
};

}  // namespace loday

#endif
