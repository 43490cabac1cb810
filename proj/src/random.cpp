#include "loday/random.hpp"

namespace loday {

Poly Rng::poly(const Ring& ring, int maxDeg) {
  Poly p(ring);
  if (ring.isPoint()) return Poly::constant(ring, rational());
  const int terms = intIn(1, 3);
  for (int t = 0; t < terms; ++t) {
    Exponents e(ring.numVars(), 0);
    int deg = intIn(0, maxDeg);
    for (int d = 0; d < deg; ++d) e[intIn(0, ring.numVars() - 1)] += 1;
    p += Poly::monomial(ring, e, rational());
  }
  return p;
}

Section Rng::section(int rank, const Ring& ring, int maxDeg) {
  Section s(rank, 1, ring);
  for (int i = 0; i < rank; ++i) s.addCoeff({i}, poly(ring, maxDeg));
  return s;
}

MultiSection Rng::multiSection(int rank, int degree, const Ring& ring, int maxDeg) {
  MultiSection a(rank, degree, ring);
  for (const auto& idx : subsets(rank, degree)) a.addCoeff(idx, poly(ring, maxDeg));
  return a;
}

}  // namespace loday
