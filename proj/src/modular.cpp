#include "loday/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace loday {

Poly connectionWeight(const Algebroid& alg, const LineModule& mod, const Section& x) {
  Poly out(alg.ring());
  for (const auto& [idx, f] : x.coeffs()) out += f * mod.lambda.at(idx[0]);
  return out;
}

CheckReport checkModule(const Algebroid& alg, const LineModule& mod, int trials,
                        std::uint64_t seed) {
  CheckReport rep;
  if (static_cast<int>(mod.lambda.size()) != alg.rank())
    throw std::invalid_argument("checkModule: one connection coefficient per basis section");

  // nabla_x (p s) = [p w(x) + rho(x) p] s with w the connection weight.
  auto nabla = [&](const Section& x, const Poly& p) {
    return p * connectionWeight(alg, mod, x) + alg.anchorApply(x, p);
  };
  const Poly one = Poly::constant(alg.ring(), Rational(1));

  for (const Poly& f : alg.generatingFunctions(seed)) {
    const Poly w = connectionWeight(alg, mod, alg.dOf(f));
    if (!w.isZero())
      rep.witnesses.push_back({"eq3:nabla_{Df}s=0", "f = " + f.str(), w.str(), "0"});
  }

  auto flatness = [&](const Section& x, const Section& y, const std::string& label) {
    const Poly lhs = nabla(x, connectionWeight(alg, mod, y)) -
                     nabla(y, connectionWeight(alg, mod, x));
    const Poly rhs = connectionWeight(alg, mod, alg.courant(x, y));
    if (lhs != rhs) rep.witnesses.push_back({"eq4:flatness", label, lhs.str(), rhs.str()});
  };
  for (int i = 0; i < alg.rank(); ++i)
    for (int j = 0; j < alg.rank(); ++j)
      flatness(alg.basisSection(i), alg.basisSection(j),
               "(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ")");

  Rng rng(seed);
  const auto gens = alg.generatingFunctions(seed);
  for (int t = 0; t < trials; ++t) {
    const Section x = rng.section(alg.rank(), alg.ring());
    const Section y = rng.section(alg.rank(), alg.ring());
    const Poly f = gens[t % gens.size()];
    const std::string label = "trial " + std::to_string(t);
    flatness(x, y, label);
    // nabla_e(f s) = f nabla_e s + (rho(e) f) s
    const Poly lhs3 = nabla(x, f);
    const Poly rhs3 = f * nabla(x, one) + alg.anchorApply(x, f);
    if (lhs3 != rhs3) rep.witnesses.push_back({"eq3:leibniz", label, lhs3.str(), rhs3.str()});
    // nabla_{fe} s = f nabla_e s
    const Poly lhs4 = connectionWeight(alg, mod, f * x);
    const Poly rhs4 = f * connectionWeight(alg, mod, x);
    if (lhs4 != rhs4) rep.witnesses.push_back({"eq4:linearity", label, lhs4.str(), rhs4.str()});
  }
  return rep;
}

LineModule topConnection(const Algebroid& alg) {
  const int n = alg.rank();
  IndexSet full(n);
  for (int i = 0; i < n; ++i) full[i] = i;
  const MultiSection top = MultiSection::basis(n, alg.ring(), full);
  LineModule mod;
  for (int i = 0; i < n; ++i) {
    const MultiSection lt = alg.lieDerivative(alg.basisSection(i), top);
    mod.lambda.push_back(lt.coeff(full));
  }
  return mod;
}

namespace {

Section unflatten(const Algebroid& alg, const QVector& v, int cap) {
  const auto monos = monomialsUpTo(alg.ring(), cap);
  Section s(alg.rank(), 1, alg.ring());
  for (int i = 0; i < alg.rank(); ++i) {
    Poly p(alg.ring());
    for (size_t m = 0; m < monos.size(); ++m) {
      const Rational c = v(i * static_cast<int>(monos.size()) + static_cast<int>(m));
      if (!c.isZero()) p += Poly::monomial(alg.ring(), monos[m], c);
    }
    s.addCoeff({i}, p);
  }
  return s;
}

std::pair<Section, bool> reduceTheta(const Algebroid& alg, const Section& theta, int cap) {
  if (alg.ring().isPoint()) return {theta, theta.isZero()};
  const QMatrix B = coboundaryVectors(alg, cap);
  const QVector red = reduceModuloSpan(B, flattenSection(alg, theta, cap));
  bool zero = true;
  for (Eigen::Index i = 0; i < red.rows(); ++i)
    if (!red(i).isZero()) {
      zero = false;
      break;
    }
  return {unflatten(alg, red, cap), zero};
}

Section thetaFromWeights(const Algebroid& alg, const std::vector<Poly>& lambda) {
  // <theta, e_i> = lambda_i, solved through the inverse metric.
  Section theta(alg.rank(), 1, alg.ring());
  for (int i = 0; i < alg.rank(); ++i) {
    Poly c(alg.ring());
    for (int j = 0; j < alg.rank(); ++j) {
      const Rational gij = alg.metric().gInv()(i, j);
      if (!gij.isZero()) c += gij * lambda[j];
    }
    theta.addCoeff({i}, c);
  }
  return theta;
}

}  // namespace

ModularClass modularClass(const Algebroid& alg) {
  const LineModule mod = topConnection(alg);
  ModularClass out;
  out.theta = thetaFromWeights(alg, mod.lambda);
  if (!alg.anchorOf(out.theta).isZero())
    throw std::logic_error("modularClass: rho(theta) != 0, algebroid axioms inconsistent");
  if (!isNaiveOneCocycle(alg, out.theta))
    throw std::logic_error("modularClass: theta fails the 1-cocycle identity");
  out.truncationDegree = std::max(out.theta.maxCoeffDegree(), 0) + 1;
  auto [reduced, zero] = reduceTheta(alg, out.theta, out.truncationDegree);
  out.reduced = std::move(reduced);
  out.isZero = zero;
  return out;
}

CheckReport gaugeShiftCheck(const Algebroid& alg, const Poly& g) {
  CheckReport rep;
  if (alg.ring().isPoint()) {
    rep.notes.push_back("gauge shift is vacuous over a point (D = 0)");
    return rep;
  }
  const LineModule base = topConnection(alg);
  LineModule shifted = base;
  for (int i = 0; i < alg.rank(); ++i)
    shifted.lambda[i] += alg.anchorBasis(i).apply(g);

  const Section theta = thetaFromWeights(alg, base.lambda);
  const Section thetaPrime = thetaFromWeights(alg, shifted.lambda);
  const Section expected = theta + Rational(2) * alg.dOf(g);
  if (thetaPrime != expected)
    rep.witnesses.push_back(
        {"gauge:shift", "g = " + g.str(), thetaPrime.str(), expected.str()});

  const int cap =
      std::max({theta.maxCoeffDegree(), thetaPrime.maxCoeffDegree(), 0}) + 1;
  const auto [redA, zeroA] = reduceTheta(alg, theta, cap);
  const auto [redB, zeroB] = reduceTheta(alg, thetaPrime, cap);
  if (zeroA != zeroB)
    rep.witnesses.push_back({"gauge:verdict", "g = " + g.str(),
                             zeroA ? "zero class" : "nonzero class",
                             zeroB ? "zero class" : "nonzero class"});
  if (redA != redB)
    rep.witnesses.push_back(
        {"gauge:coset", "g = " + g.str(), redA.str(), redB.str()});
  rep.notes.push_back("rescaled connection nabla'_e s = nabla_e s + (rho(e)g)s");
  return rep;
}

}  // namespace loday
