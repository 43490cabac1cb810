// Factories for the example classes: quadratic Lie algebras, the
// Loday-only aff(1) fixture, Drinfeld doubles of Lie bialgebras, and
// twisted exact Courant algebroids over affine space.
#ifndef LODAY_CONSTRUCTIONS_HPP
#define LODAY_CONSTRUCTIONS_HPP

#include "loday/algebroid.hpp"

#include <map>
#include <string>
#include <vector>

namespace loday {

struct LieBialgebraData {
  int n = 0;
  // c[i][j][k]: [e_i, e_j] = sum_k c_ijk e_k on g.
  std::vector<std::vector<std::vector<Rational>>> gamma_g;
  // gamma[i][j][k]: [eps^i, eps^j] = sum_k gamma_ijk eps^k on g*.
  std::vector<std::vector<std::vector<Rational>>> gamma_dual;

  static LieBialgebraData abelianPair(int n);

  // Antisymmetry, both Jacobi identities, and the mixed cocycle
  // compatibility; throws with a witness on violation.
  void validate() const;
};

struct ThreeFormData {
  int m = 0;
  Ring ring;
  std::map<IndexSet, Poly> components;  // sorted 3-subsets of coordinates

  static ThreeFormData zero(const Ring& ring);
  static ThreeFormData constantVolume(const Ring& ring);  // dx1^dx2^dx3 (m = 3)

  Poly component(const IndexSet& idx) const;
  // signed component for arbitrary index triples; zero on repeats
  Poly evaluate(int a, int b, int c) const;
  // dphi = 0, exact; throws listing the nonzero component otherwise.
  void requireClosed() const;
};

// abelian(n), sl2_split, aff1_loday, direct_sum(a,b), random_quadratic(seed)
Algebroid catalog(const std::string& name);

Algebroid directSum(const Algebroid& a, const Algebroid& b);

// Quadratic Lie algebras conjugated by random rational isometries of
// direct sums of catalog blocks.
Algebroid randomQuadratic(std::uint64_t seed);

// The double g + g* over a point with the canonical pairing
// <X+xi, Y+eta> = xi(Y) + eta(X); passes checkCourant by construction.
Algebroid drinfeldDouble(const LieBialgebraData& b);

// TM + T*M over affine m-space with the phi-twisted Dorfman bracket;
// basis: coordinate vector fields then coordinate covectors.
Algebroid exactCourant(int m, const ThreeFormData& phi);

// Coordinate ring of affine m-space: x / x,y / x,y,z for m <= 3,
// x1..xm beyond.
Ring affineRing(int m);

// Bialgebra presets: abelian(n), aff1_abelian, abelian_aff1.
LieBialgebraData bialgebraPreset(const std::string& name);

// catalog names plus exact_courant(m[,zero|volume|linear]) and
// double(preset).
Algebroid namedFixture(const std::string& name);

}  // namespace loday

#endif
