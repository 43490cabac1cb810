// Exact rational scalar backed by GMP, usable as an Eigen matrix scalar.
#ifndef LODAY_RATIONAL_HPP
#define LODAY_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace loday {

// Always canonical: gcd(|num|, den) = 1, den > 0. mpq_class maintains this
// as long as every value passes through canonicalize() on construction.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p", "-p/q", with arbitrary-precision integers.
  static Rational parse(const std::string& s);

  const mpq_class& raw() const { return v_; }

  bool isZero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational inverse() const {
    if (isZero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.isZero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // "p" or "p/q", canonical.
  std::string str() const;

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace loday

namespace Eigen {
template <>
struct NumTraits<loday::Rational> {
  using Real = loday::Rational;
  using NonInteger = loday::Rational;
  using Literal = loday::Rational;
  using Nested = loday::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 20,
    MulCost = 20
  };
  static inline Real epsilon() { return loday::Rational(0); }
  static inline Real dummy_precision() { return loday::Rational(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif
