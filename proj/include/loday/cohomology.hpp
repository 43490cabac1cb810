// The naive complex (wedge ker rho, breve-d) and its cohomology; over a
// point also the standard complex {Theta, .} and the comparison map phi.
#ifndef LODAY_COHOMOLOGY_HPP
#define LODAY_COHOMOLOGY_HPP

#include "loday/algebroid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loday {

struct FiniteComplex {
  // d[k] maps C^k -> C^{k+1}; labels[k] names the basis of C^k.
  std::vector<QMatrix> d;
  std::vector<std::vector<std::string>> labels;

  int topDegree() const { return static_cast<int>(d.size()); }
  int dimAt(int k) const;
  // d_{k+1} d_k = 0 for all k, exactly.
  bool isComplex() const;
};

struct CohomologyResult {
  std::vector<int> dims;  // per degree 0..N
  // canonical representative cocycles per degree, as coordinate vectors
  // and printed labels
  std::vector<std::vector<QVector>> representatives;
  std::vector<std::vector<std::string>> representativeLabels;
};

// Cohomology of a finite complex with deterministic representatives
// (reduced-echelon kernel vectors modulo the image).
CohomologyResult cohomologyOf(const FiniteComplex& cx);

// Monomials of total degree <= cap, graded-lex order.
std::vector<Exponents> monomialsUpTo(const Ring& ring, int cap);

// Degree-1 frame of ker rho: every basis section over a point, the
// declared frame otherwise. Errors when no frame is available.
std::vector<Section> kernelFrame(const Algebroid& alg);

// Membership test of a multisection in wedge^k(ker rho), via the
// breve-contraction characterization against the generating functions.
// Returns the offending f on failure.
std::optional<Poly> kernelObstruction(const Algebroid& alg, const MultiSection& a);

// The Cartan-type differential. Input must lie in wedge ker rho.
MultiSection naiveDifferential(const Algebroid& alg, const MultiSection& alpha);

// Point base: the full complex on wedge E. Polynomial base: the
// truncated complex on (monomials) x (frame wedges) with coefficient
// degree + form degree <= degreeCap; assembly verifies the filtration
// certificate and errors if breve-d leaves the truncation.
FiniteComplex assembleNaiveComplex(const Algebroid& alg, int degreeCap = 3);

CohomologyResult naiveCohomology(const Algebroid& alg, int degreeCap = 3);

// 1-cocycle test via the bracket characterization; theta must be in ker rho.
bool isNaiveOneCocycle(const Algebroid& alg, const Section& theta, int trials = 16,
                       std::uint64_t seed = 1);

// Solves theta = Df in the truncated polynomial space; the certificate
// f is returned when solvable.
std::optional<Poly> oneCoboundaryCertificate(const Algebroid& alg, const Section& theta);

// Degree-1 coboundaries D(monomials of degree <= cap) as flat coordinate
// vectors over (component, monomial) pairs; shared with the modular class
// reduction. monomialBasis receives the monomial list used.
QMatrix coboundaryVectors(const Algebroid& alg, int polyDegCap,
                          std::vector<Exponents>* monomialBasis = nullptr);
QVector flattenSection(const Algebroid& alg, const Section& s, int polyDegCap);

// The cubic Hamiltonian of the derived bracket over a point:
// {{Theta,e_i},e_j} = e_i o e_j, with {Theta,Theta} = 0 verified.
MultiSection buildTheta(const Algebroid& alg);

FiniteComplex assembleStandardComplex(const Algebroid& alg);
CohomologyResult standardCohomology(const Algebroid& alg);

struct PhiReport {
  bool lemmaHolds = false;        // {Theta,c} = breve-d c on every basis multisection
  bool isomorphism = false;       // equal dimensions in every degree
  std::vector<int> naiveDims;
  std::vector<int> standardDims;
  std::vector<std::string> notes;
};

PhiReport comparePhi(const Algebroid& alg);

}  // namespace loday

#endif
