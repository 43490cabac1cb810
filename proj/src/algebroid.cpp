#include "loday/algebroid.hpp"

#include <sstream>
#include <stdexcept>

namespace loday {

namespace {

std::string tupleStr(std::initializer_list<std::string> parts) {
  std::string out = "(";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out += ", ";
    first = false;
    out += p;
  }
  return out + ")";
}

}  // namespace

Algebroid::Algebroid(int rank, Ring ring, Metric metric, std::vector<Derivation> anchor,
                     std::vector<std::vector<std::vector<Poly>>> dorfman,
                     std::optional<std::vector<Section>> kernelFrame, std::string name)
    : rank_(rank),
      ring_(std::move(ring)),
      metric_(std::move(metric)),
      anchor_(std::move(anchor)),
      kernelFrame_(std::move(kernelFrame)),
      name_(std::move(name)) {
  if (rank_ <= 0) throw std::invalid_argument("Algebroid: rank must be positive");
  if (metric_.rank() != rank_) throw std::invalid_argument("Algebroid: metric size != rank");
  if (static_cast<int>(anchor_.size()) != rank_)
    throw std::invalid_argument("Algebroid: one anchor derivation per basis section required");
  for (const auto& a : anchor_) {
    if (a.ring() != ring_) throw std::invalid_argument("Algebroid: anchor over wrong ring");
    if (ring_.isPoint() && !a.isZero())
      throw std::invalid_argument("Algebroid: nonzero anchor over a point base");
  }
  if (static_cast<int>(dorfman.size()) != rank_)
    throw std::invalid_argument("Algebroid: dorfman table must be rank x rank");
  dorfmanBasis_.resize(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (static_cast<int>(dorfman[i].size()) != rank_)
      throw std::invalid_argument("Algebroid: dorfman table must be rank x rank");
    for (int j = 0; j < rank_; ++j) {
      const auto& comps = dorfman[i][j];
      if (static_cast<int>(comps.size()) != rank_)
        throw std::invalid_argument("Algebroid: structure functions need rank components");
      Section s(rank_, 1, ring_);
      for (int k = 0; k < rank_; ++k) {
        if (comps[k].ring() != ring_)
          throw std::invalid_argument("Algebroid: structure function over wrong ring");
        s.addCoeff({k}, comps[k]);
      }
      dorfmanBasis_[i].push_back(std::move(s));
    }
  }
  if (kernelFrame_) {
    for (const auto& fr : *kernelFrame_) {
      if (fr.degree() != 1 || fr.rank() != rank_ || fr.ring() != ring_)
        throw std::invalid_argument("Algebroid: malformed kernel frame section");
      const Derivation d = anchorOf(fr);
      if (!d.isZero())
        throw std::invalid_argument("Algebroid: declared kernel frame element " + fr.str() +
                                    " has nonzero anchor " + d.str());
    }
  }
}

Derivation Algebroid::anchorOf(const Section& x) const {
  Derivation d(ring_);
  for (const auto& [idx, f] : x.coeffs()) d += f * anchor_[idx[0]];
  return d;
}

Poly Algebroid::anchorApply(const Section& x, const Poly& f) const {
  Poly out(ring_);
  for (const auto& [idx, g] : x.coeffs()) out += g * anchor_[idx[0]].apply(f);
  return out;
}

Section Algebroid::dorfman(const Section& x, const Section& y) const {
  // x o y for x = sum f_i e_i, y = sum g_j e_j expands via (C) in the
  // right slot and the (D)/(6)-forced expansion in the left slot:
  // sum_j rho(x)(g_j) e_j
  //   + sum_{ij} g_j [ f_i (e_i o e_j) - rho(e_j)(f_i) e_i + 2<e_i,e_j> Df_i ].
  Section out(rank_, 1, ring_);
  for (const auto& [jy, gj] : y.coeffs()) {
    const int j = jy[0];
    out.addCoeff({j}, anchorApply(x, gj));
    for (const auto& [ix, fi] : x.coeffs()) {
      const int i = ix[0];
      out += (gj * fi) * dorfmanBasis_[i][j];
      const Poly rf = anchor_[j].apply(fi);
      if (!rf.isZero()) out.addCoeff({i}, -(gj * rf));
      const Rational gij = metric_.g()(i, j);
      if (!gij.isZero()) {
        const Section dfi = dOf(fi);
        if (!dfi.isZero()) out += ((Rational(2) * gij) * gj) * dfi;
      }
    }
  }
  return out;
}

Section Algebroid::courant(const Section& x, const Section& y) const {
  return Rational(1, 2) * (dorfman(x, y) - dorfman(y, x));
}

Section Algebroid::dOf(const Poly& f) const {
  Section out(rank_, 1, ring_);
  if (ring_.isPoint()) return out;
  for (int i = 0; i < rank_; ++i) {
    Poly c(ring_);
    for (int j = 0; j < rank_; ++j) {
      const Rational gij = metric_.gInv()(i, j);
      if (gij.isZero()) continue;
      c += gij * anchor_[j].apply(f);
    }
    out.addCoeff({i}, Rational(1, 2) * c);
  }
  return out;
}

MultiSection Algebroid::extendOperator(const MultiSection& t,
                                       const std::function<Poly(const Poly&)>& d0,
                                       const std::function<Section(int)>& d1) const {
  MultiSection out(rank_, t.degree(), ring_);
  for (const auto& [idx, p] : t.coeffs()) {
    out.addCoeff(idx, d0(p));
    const int k = static_cast<int>(idx.size());
    for (int pos = 0; pos < k; ++pos) {
      IndexSet pre(idx.begin(), idx.begin() + pos);
      IndexSet post(idx.begin() + pos + 1, idx.end());
      MultiSection term = wedge(MultiSection::basis(rank_, ring_, pre),
                                wedge(d1(idx[pos]), MultiSection::basis(rank_, ring_, post)));
      out += p * term;
    }
  }
  return out;
}

MultiSection Algebroid::lieDerivative(const Section& z, const MultiSection& t) const {
  if (t.degree() == 0) {
    MultiSection out(rank_, 0, ring_);
    out.addCoeff({}, anchorApply(z, t.coeff({})));
    return out;
  }
  return extendOperator(
      t, [&](const Poly& p) { return anchorApply(z, p); },
      [&](int i) { return dorfman(z, basisSection(i)); });
}

Section Algebroid::applyAut(const AutCandidate& d, const Section& x) const {
  Section out(rank_, 1, ring_);
  for (const auto& [idx, f] : x.coeffs()) {
    const int j = idx[0];
    for (int k = 0; k < rank_; ++k) {
      const Poly& m = d.mat.at(k).at(j);
      if (!m.isZero()) out.addCoeff({k}, f * m);
    }
    out.addCoeff({j}, d.delta0.apply(f));
  }
  return out;
}

MultiSection Algebroid::applyAutExtended(const AutCandidate& d, const MultiSection& t) const {
  if (t.degree() == 0) {
    MultiSection out(rank_, 0, ring_);
    out.addCoeff({}, d.delta0.apply(t.coeff({})));
    return out;
  }
  return extendOperator(
      t, [&](const Poly& p) { return d.delta0.apply(p); },
      [&](int j) { return applyAut(d, basisSection(j)); });
}

AutCandidate Algebroid::innerAut(const Section& z) const {
  AutCandidate d;
  d.delta0 = anchorOf(z);
  d.mat.assign(rank_, std::vector<Poly>(rank_, Poly(ring_)));
  for (int j = 0; j < rank_; ++j) {
    const Section col = dorfman(z, basisSection(j));
    for (int k = 0; k < rank_; ++k) d.mat[k][j] = col.coeff({k});
  }
  return d;
}

std::vector<Poly> Algebroid::generatingFunctions(std::uint64_t seed) const {
  std::vector<Poly> fs;
  fs.push_back(Poly::constant(ring_, Rational(1)));
  if (ring_.isPoint()) return fs;
  const int n = ring_.numVars();
  for (int i = 0; i < n; ++i) fs.push_back(Poly::variable(ring_, i));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) fs.push_back(Poly::variable(ring_, i) * Poly::variable(ring_, j));
  Rng rng(seed);
  for (int t = 0; t < 3; ++t) fs.push_back(rng.poly(ring_, 3));
  return fs;
}

std::vector<ViolationWitness> Algebroid::checkLodayAxioms(int trials, std::uint64_t seed) const {
  std::vector<ViolationWitness> out;
  auto witness = [&](const std::string& id, const std::string& in, const MultiSection& lhs,
                     const MultiSection& rhs) {
    out.push_back({id, in, lhs.str(), rhs.str()});
  };

  auto checkTriple = [&](const Section& a, const Section& b, const Section& c,
                         const std::string& label) {
    const Section lhs = dorfman(a, dorfman(b, c));
    const Section rhs = dorfman(dorfman(a, b), c) + dorfman(b, dorfman(a, c));
    if (lhs != rhs) witness("A", label, lhs, rhs);
  };
  auto checkPairBD = [&](const Section& a, const Section& b, const std::string& label) {
    const Derivation lhsB = anchorOf(dorfman(a, b));
    const Derivation rhsB = commutator(anchorOf(a), anchorOf(b));
    if (lhsB != rhsB) out.push_back({"B", label, lhsB.str(), rhsB.str()});
    const Section lhsD = dorfman(a, b) + dorfman(b, a);
    const Section rhsD = Rational(2) * dOf(innerProduct(a, b));
    if (lhsD != rhsD) witness("D", label, lhsD, rhsD);
  };

  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      checkPairBD(basisSection(i), basisSection(j),
                  "(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ")");
      for (int k = 0; k < rank_; ++k)
        checkTriple(basisSection(i), basisSection(j), basisSection(k),
                    "(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" +
                        std::to_string(k + 1) + ")");
    }

  // (E) on the generating family x basis sections.
  for (const Poly& f : generatingFunctions(seed))
    for (int i = 0; i < rank_; ++i) {
      const Section lhs = dorfman(dOf(f), basisSection(i));
      if (!lhs.isZero())
        witness("E", tupleStr({"f = " + f.str(), "e" + std::to_string(i + 1)}), lhs,
                Section(rank_, 1, ring_));
    }

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Section a = rng.section(rank_, ring_);
    const Section b = rng.section(rank_, ring_);
    const Section c = rng.section(rank_, ring_);
    const Poly f = rng.poly(ring_);
    const std::string label = "trial " + std::to_string(t);
    checkTriple(a, b, c, label);
    checkPairBD(a, b, label);
    // (C) in the right slot.
    const Section lhsC = dorfman(a, f * b);
    const Section rhsC = anchorApply(a, f) * b + f * dorfman(a, b);
    if (lhsC != rhsC) witness("C", label, lhsC, rhsC);
    const Section lhsE = dorfman(dOf(f), a);
    if (!lhsE.isZero()) witness("E", label, lhsE, Section(rank_, 1, ring_));
  }
  return out;
}

std::vector<ViolationWitness> Algebroid::checkCourant(int trials, std::uint64_t seed) const {
  std::vector<ViolationWitness> out;
  auto check = [&](const Section& e, const Section& a, const Section& b,
                   const std::string& label) {
    const Poly lhs = anchorApply(e, innerProduct(a, b));
    const Poly rhs = innerProduct(dorfman(e, a), b) + innerProduct(a, dorfman(e, b));
    if (lhs != rhs) out.push_back({"CourantInvariance", label, lhs.str(), rhs.str()});
  };
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      for (int k = 0; k < rank_; ++k)
        check(basisSection(i), basisSection(j), basisSection(k),
              "(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" +
                  std::to_string(k + 1) + ")");
  if (!ring_.isPoint()) {
    Rng rng(seed);
    for (int t = 0; t < trials; ++t)
      check(rng.section(rank_, ring_), rng.section(rank_, ring_), rng.section(rank_, ring_),
            "trial " + std::to_string(t));
  }
  return out;
}

CheckReport Algebroid::derivedLemmaCheck(std::uint64_t seed) const {
  CheckReport rep;
  for (const Poly& f : generatingFunctions(seed)) {
    const Section df = dOf(f);
    const Derivation rho = anchorOf(df);
    if (!rho.isZero())
      rep.witnesses.push_back({"rho(Df)=0", "f = " + f.str(), rho.str(), "0"});
    for (int i = 0; i < rank_; ++i) {
      const Section e = basisSection(i);
      const Section lhs = courant(df, e) + dOf(innerProduct(df, e));
      if (!lhs.isZero())
        rep.witnesses.push_back({"[[Df,e]]+D<Df,e>=0",
                                 tupleStr({"f = " + f.str(), "e" + std::to_string(i + 1)}),
                                 lhs.str(), "0"});
    }
  }
  rep.notes.push_back("checked rho(Df)=0 and [[Df,e]]+D<Df,e>=0 on the generating family");
  return rep;
}

CheckReport Algebroid::verifyLieIdentities(int trials, std::uint64_t seed,
                                           bool includeMetricInvariance) const {
  CheckReport rep;
  Rng rng(seed);
  const auto gens = generatingFunctions(seed);
  for (int t = 0; t < trials; ++t) {
    const Section x = rng.section(rank_, ring_);
    const Section y = rng.section(rank_, ring_);
    const Section z = rng.section(rank_, ring_);
    const Poly f = gens[t % gens.size()];
    const std::string label = "trial " + std::to_string(t);

    // (1) L_{Df} x = 0 and L_x Df = D L_x f.
    const Section lDf = dorfman(dOf(f), x);
    if (!lDf.isZero()) rep.witnesses.push_back({"lie(1):L_{Df}x=0", label, lDf.str(), "0"});
    const Section lhs1 = dorfman(x, dOf(f));
    const Section rhs1 = dOf(anchorApply(x, f));
    if (lhs1 != rhs1)
      rep.witnesses.push_back({"lie(1):L_xDf=DL_xf", label, lhs1.str(), rhs1.str()});

    // (3) Leibniz over wedge.
    const int da = rng.intIn(0, rank_ >= 2 ? 2 : rank_);
    const int db = rng.intIn(0, std::max(0, rank_ - da) >= 2 ? 2 : std::max(0, rank_ - da));
    const MultiSection a = rng.multiSection(rank_, da, ring_);
    const MultiSection b = rng.multiSection(rank_, db, ring_);
    const MultiSection lhs3 = lieDerivative(z, wedge(a, b));
    const MultiSection rhs3 = wedge(lieDerivative(z, a), b) + wedge(a, lieDerivative(z, b));
    if (lhs3 != rhs3) rep.witnesses.push_back({"lie(3)", label, lhs3.str(), rhs3.str()});

    // (4) L_{[[x,y]]} = [L_x, L_y] on every degree.
    for (int k = 0; k <= rank_; ++k) {
      const MultiSection s = rng.multiSection(rank_, k, ring_);
      const MultiSection lhs4 = lieDerivative(courant(x, y), s);
      const MultiSection rhs4 =
          lieDerivative(x, lieDerivative(y, s)) - lieDerivative(y, lieDerivative(x, s));
      if (lhs4 != rhs4)
        rep.witnesses.push_back(
            {"lie(4)", label + " degree " + std::to_string(k), lhs4.str(), rhs4.str()});
    }

    // (5) L_z [[x,y]] = [[L_z x, y]] + [[x, L_z y]].
    const Section lhs5 = dorfman(z, courant(x, y));
    const Section rhs5 = courant(dorfman(z, x), y) + courant(x, dorfman(z, y));
    if (lhs5 != rhs5) rep.witnesses.push_back({"lie(5)", label, lhs5.str(), rhs5.str()});

    // (6) L_{fx} y = f L_x y - (rho(y)f) x + 2<x,y> Df.
    const Section lhs6 = dorfman(f * x, y);
    const Section rhs6 =
        f * dorfman(x, y) - anchorApply(y, f) * x + (Rational(2) * innerProduct(x, y)) * dOf(f);
    if (lhs6 != rhs6) rep.witnesses.push_back({"lie(6)", label, lhs6.str(), rhs6.str()});

    // (7) metric invariance, Courant case only.
    if (includeMetricInvariance) {
      const Poly lhs7 = anchorApply(z, innerProduct(x, y));
      const Poly rhs7 = innerProduct(dorfman(z, x), y) + innerProduct(x, dorfman(z, y));
      if (lhs7 != rhs7) rep.witnesses.push_back({"lie(7)", label, lhs7.str(), rhs7.str()});
    }
  }
  if (!includeMetricInvariance) rep.notes.push_back("identity (7) skipped (not a Courant algebroid)");
  return rep;
}

CheckReport Algebroid::checkOperatorIdentity(int trials, std::uint64_t seed) const {
  CheckReport rep;
  Rng rng(seed);
  const auto gens = generatingFunctions(seed);
  for (int t = 0; t < trials; ++t) {
    const Section e = rng.section(rank_, ring_);
    const Poly f = gens[t % gens.size()];
    const Section df = dOf(f);
    for (int k = 0; k <= rank_; ++k) {
      const MultiSection s = rng.multiSection(rank_, k, ring_);
      const MultiSection lhs = lieDerivative(f * e, s);
      MultiSection rhs = f * lieDerivative(e, s);
      if (k >= 1) {
        rhs -= Rational(2) * wedge(e, metric_.breveContract(df, s));
        rhs += Rational(2) * wedge(df, metric_.breveContract(e, s));
      }
      if (lhs != rhs)
        rep.witnesses.push_back({"L_{fe} operator identity",
                                 "trial " + std::to_string(t) + " degree " + std::to_string(k),
                                 lhs.str(), rhs.str()});
    }
  }
  return rep;
}

CheckReport Algebroid::checkAut(const AutCandidate& d, int trials, std::uint64_t seed) const {
  CheckReport rep;
  auto checkPair = [&](const Section& a, const Section& b, const std::string& label) {
    const Poly lhs0 = d.delta0.apply(innerProduct(a, b));
    const Poly rhs0 = innerProduct(applyAut(d, a), b) + innerProduct(a, applyAut(d, b));
    if (lhs0 != rhs0) rep.witnesses.push_back({"aut:metric", label, lhs0.str(), rhs0.str()});
    const Section lhs1 = applyAut(d, courant(a, b));
    const Section rhs1 = courant(applyAut(d, a), b) + courant(a, applyAut(d, b));
    if (lhs1 != rhs1) rep.witnesses.push_back({"aut:bracket", label, lhs1.str(), rhs1.str()});
  };
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      checkPair(basisSection(i), basisSection(j),
                "(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ")");
  Rng rng(seed);
  for (int t = 0; t < trials; ++t)
    checkPair(rng.section(rank_, ring_), rng.section(rank_, ring_), "trial " + std::to_string(t));

  if (!rep.passed()) return rep;

  // Identity (2): [delta, L_z] = L_{delta1 z} on random arguments.
  for (int t = 0; t < trials; ++t) {
    const Section z = rng.section(rank_, ring_);
    const int k = rng.intIn(0, rank_);
    const MultiSection s = rng.multiSection(rank_, k, ring_);
    const MultiSection lhs = applyAutExtended(d, lieDerivative(z, s)) -
                             lieDerivative(z, applyAutExtended(d, s));
    const MultiSection rhs = lieDerivative(applyAut(d, z), s);
    if (lhs != rhs)
      rep.witnesses.push_back(
          {"aut:commutator", "trial " + std::to_string(t) + " degree " + std::to_string(k),
           lhs.str(), rhs.str()});
  }
  rep.notes.push_back("aut conditions hold; identity (2) asserted on random arguments");
  return rep;
}

}  // namespace loday
