// The central structure (E, rho, o, <.,.>): Dorfman bracket, the
// operator D, Loday/Courant axiom checkers with counterexample
// witnesses, the Lie derivative and its identity suite, and
// infinitesimal automorphism candidates.
#ifndef LODAY_ALGEBROID_HPP
#define LODAY_ALGEBROID_HPP

#include "loday/exterior.hpp"
#include "loday/random.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace loday {

struct ViolationWitness {
  std::string axiomId;  // A,B,C,D,E,CourantInvariance,...
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::vector<ViolationWitness> witnesses;
  std::vector<std::string> notes;
  bool passed() const { return witnesses.empty(); }
};

struct AutCandidate {
  Derivation delta0;                    // action on functions
  std::vector<std::vector<Poly>> mat;   // mat[k][j]: delta1(e_j) = sum_k mat[k][j] e_k
};

class Algebroid {
public:
  // dorfman[i][j] holds the structure functions of e_i o e_j.
  Algebroid(int rank, Ring ring, Metric metric, std::vector<Derivation> anchor,
            std::vector<std::vector<std::vector<Poly>>> dorfman,
            std::optional<std::vector<Section>> kernelFrame = std::nullopt,
            std::string name = "");

  int rank() const { return rank_; }
  const Ring& ring() const { return ring_; }
  const Metric& metric() const { return metric_; }
  const std::string& name() const { return name_; }
  const Derivation& anchorBasis(int i) const { return anchor_.at(i); }
  const std::vector<Derivation>& anchors() const { return anchor_; }
  const Section& dorfmanBasis(int i, int j) const { return dorfmanBasis_.at(i).at(j); }
  const std::optional<std::vector<Section>>& declaredKernelFrame() const { return kernelFrame_; }

  Section basisSection(int i) const { return Section::basisVector(rank_, ring_, i); }

  Derivation anchorOf(const Section& x) const;
  Poly anchorApply(const Section& x, const Poly& f) const;

  Poly innerProduct(const Section& x, const Section& y) const { return metric_.pair(x, y); }

  Section dorfman(const Section& x, const Section& y) const;
  // Antisymmetrization (x o y - y o x)/2.
  Section courant(const Section& x, const Section& y) const;

  // The unique section with <Df, e_i> = (1/2) rho(e_i) f.
  Section dOf(const Poly& f) const;

  Poly lieDerivative(const Section& z, const Poly& f) const { return anchorApply(z, f); }
  MultiSection lieDerivative(const Section& z, const MultiSection& t) const;

  // Extension of a covariant differential operator (d0, d1) to wedge
  // powers by the Leibniz rule; d1 acts on basis sections.
  MultiSection extendOperator(const MultiSection& t,
                              const std::function<Poly(const Poly&)>& d0,
                              const std::function<Section(int)>& d1) const;

  Section applyAut(const AutCandidate& d, const Section& x) const;
  MultiSection applyAutExtended(const AutCandidate& d, const MultiSection& t) const;
  // delta_z = (rho(z)., z o .), always in aut(E) for Courant algebroids.
  AutCandidate innerAut(const Section& z) const;

  // Generating family of functions for D-related checks: variables,
  // quadratic monomials, and seeded random cubics. Over a point only
  // the constant 1 (D of constants is 0 anyway).
  std::vector<Poly> generatingFunctions(std::uint64_t seed = 1) const;

  std::vector<ViolationWitness> checkLodayAxioms(int trials = 32, std::uint64_t seed = 1) const;
  std::vector<ViolationWitness> checkCourant(int trials = 32, std::uint64_t seed = 1) const;
  CheckReport derivedLemmaCheck(std::uint64_t seed = 1) const;
  // Proposition identity suite (1),(3),(4),(5),(6) and, when
  // includeMetricInvariance, (7).
  CheckReport verifyLieIdentities(int trials = 32, std::uint64_t seed = 1,
                                  bool includeMetricInvariance = true) const;
  // L_{fe} = f L_e - 2(e^) breve-i_{Df} + 2(Df^) breve-i_e on all degrees.
  CheckReport checkOperatorIdentity(int trials = 8, std::uint64_t seed = 1) const;
  CheckReport checkAut(const AutCandidate& d, int trials = 32, std::uint64_t seed = 1) const;

private:
  int rank_;
  Ring ring_;
  Metric metric_;
  std::vector<Derivation> anchor_;
  std::vector<std::vector<Section>> dorfmanBasis_;
  std::optional<std::vector<Section>> kernelFrame_;
  std::string name_;
};

}  // namespace loday

#endif
