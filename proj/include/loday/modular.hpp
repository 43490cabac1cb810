// Rank-1 modules over a Loday algebroid, the canonical top-power module
// with connection L, and the modular class in degree-1 naive cohomology.
#ifndef LODAY_MODULAR_HPP
#define LODAY_MODULAR_HPP

#include "loday/algebroid.hpp"
#include "loday/cohomology.hpp"

#include <string>
#include <vector>

namespace loday {

// Connection on the free rank-1 module with trivializing section s:
// nabla_{e_i} s = lambda_i s, extended by the module axioms.
struct LineModule {
  std::vector<Poly> lambda;  // one per basis section
};

// nabla_x s for a general section x, by C^inf-linearity in x.
Poly connectionWeight(const Algebroid& alg, const LineModule& mod, const Section& x);

// Verifies the four module axioms (flatness, both Leibniz rules, and
// nabla_{Df} s = 0) on basis elements, generating functions, and random
// sections.
CheckReport checkModule(const Algebroid& alg, const LineModule& mod, int trials = 32,
                        std::uint64_t seed = 1);

// The canonical module structure on wedge^top E with nabla = L.
LineModule topConnection(const Algebroid& alg);

struct ModularClass {
  Section theta;           // the modular cocycle theta_s
  Section reduced;         // canonical representative modulo 2 D f
  bool isZero = false;     // verdict on the reduced representative
  int truncationDegree = 0;
};

ModularClass modularClass(const Algebroid& alg);

// Gauge transformation by the exponent g: the rescaled connection
// nabla'_e s = nabla_e s + (rho(e) g) s must shift the cocycle by
// exactly 2 D g and leave the class verdict unchanged.
CheckReport gaugeShiftCheck(const Algebroid& alg, const Poly& g);

}  // namespace loday

#endif
