// Acceptance gate: one pass/fail line per criterion, nonzero exit on
// any failure.
#include "loday/cohomology.hpp"
#include "loday/constructions.hpp"
#include "loday/io.hpp"
#include "loday/modular.hpp"

#include <array>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

using namespace loday;

namespace {

bool expectEmpty(const std::vector<ViolationWitness>& ws, const std::string& what) {
  if (ws.empty()) return true;
  std::cout << "    " << what << ": " << ws.size() << " witness(es), first ["
            << ws[0].axiomId << "] " << ws[0].inputs << "\n";
  return false;
}

bool expectPassed(const CheckReport& rep, const std::string& what) {
  return expectEmpty(rep.witnesses, what);
}

// ---- criterion 1: axiom suites ------------------------------------------

bool criterion1() {
  bool ok = true;
  for (const char* name :
       {"sl2_split", "double(abelian(2))", "double(aff1_abelian)", "double(abelian_aff1)",
        "exact_courant(1)", "exact_courant(2)", "exact_courant(3)", "exact_courant(3,volume)",
        "exact_courant(3,linear)"}) {
    const Algebroid alg = namedFixture(name);
    ok &= expectEmpty(alg.checkLodayAxioms(6, 1), std::string(name) + " loday");
    ok &= expectEmpty(alg.checkCourant(6, 1), std::string(name) + " courant");
  }
  const Algebroid aff = catalog("aff1_loday");
  ok &= expectEmpty(aff.checkLodayAxioms(16, 1), "aff1_loday loday");
  if (aff.checkCourant(0, 1).empty()) {
    std::cout << "    aff1_loday unexpectedly passes the invariance axiom\n";
    ok = false;
  }
  // invariance defect on (e1, e2, e2) equals exactly 2
  const Section e1 = aff.basisSection(0), e2 = aff.basisSection(1);
  const Poly lhs = aff.anchorApply(e1, aff.innerProduct(e2, e2));
  const Poly rhs = aff.innerProduct(aff.dorfman(e1, e2), e2) +
                   aff.innerProduct(e2, aff.dorfman(e1, e2));
  if (rhs - lhs != Poly::constant(Ring::point(), Rational(2))) {
    std::cout << "    aff1_loday defect is " << (rhs - lhs).str() << ", expected 2\n";
    ok = false;
  }
  return ok;
}

// ---- criterion 2: d^2 = 0 and kernel closure ----------------------------

bool criterion2() {
  bool ok = true;
  for (const char* name : {"abelian(4)", "sl2_split", "aff1_loday", "random_quadratic(5)",
                           "double(aff1_abelian)", "exact_courant(1)", "exact_courant(2)",
                           "exact_courant(3,volume)"}) {
    const Algebroid alg = namedFixture(name);
    const FiniteComplex cx = assembleNaiveComplex(alg, 3);
    if (!cx.isComplex()) {
      std::cout << "    " << name << ": breve-d squared is nonzero\n";
      ok = false;
    }
    // closure of kernel sections under breve-d, on frame wedge bases
    const auto fr = kernelFrame(alg);
    const int top = static_cast<int>(fr.size());
    for (int k = 0; k < top; ++k)
      for (const auto& idx : subsets(top, k)) {
        MultiSection base = MultiSection::scalar(alg.rank(), alg.ring(),
                                                 Poly::constant(alg.ring(), Rational(1)));
        for (int i : idx) base = wedge(base, fr[i]);
        const MultiSection db = naiveDifferential(alg, base);
        if (const auto bad = kernelObstruction(alg, db)) {
          std::cout << "    " << name << ": breve-d left the kernel at f = " << bad->str()
                    << "\n";
          ok = false;
        }
      }
  }
  return ok;
}

// ---- criterion 3: Chevalley-Eilenberg oracle ----------------------------

// independent CE differential from structure constants, no metric
std::vector<int> ceDims(const Algebroid& alg) {
  const int n = alg.rank();
  auto sc = [&](int i, int j, int k) {
    return alg.dorfmanBasis(i, j).coeff({k}).constantTerm();
  };
  auto evalForm = [](const IndexSet& I, std::vector<int> L) {
    int sign = 1;
    for (size_t a = 0; a < L.size(); ++a)
      for (size_t b = a + 1; b < L.size(); ++b)
        if (L[a] > L[b]) {
          std::swap(L[a], L[b]);
          sign = -sign;
        }
    for (size_t a = 1; a < L.size(); ++a)
      if (L[a] == L[a - 1]) return Rational(0);
    return L == I ? Rational(sign) : Rational(0);
  };
  std::vector<int> dims;
  std::vector<QMatrix> d;
  for (int k = 0; k < n; ++k) {
    const auto& rows = subsets(n, k + 1);
    const auto& cols = subsets(n, k);
    QMatrix m = QMatrix::Constant(static_cast<Eigen::Index>(rows.size()),
                                  static_cast<Eigen::Index>(cols.size()), Rational(0));
    for (size_t c = 0; c < cols.size(); ++c)
      for (size_t r = 0; r < rows.size(); ++r) {
        const IndexSet& J = rows[r];
        Rational val(0);
        for (size_t p = 0; p < J.size(); ++p)
          for (size_t q = p + 1; q < J.size(); ++q) {
            std::vector<int> rest;
            for (size_t t = 0; t < J.size(); ++t)
              if (t != p && t != q) rest.push_back(J[t]);
            for (int mm = 0; mm < n; ++mm) {
              const Rational cc = sc(J[p], J[q], mm);
              if (cc.isZero()) continue;
              std::vector<int> args = {mm};
              args.insert(args.end(), rest.begin(), rest.end());
              Rational term = cc * evalForm(cols[c], args);
              if ((p + q) % 2 == 1) term = -term;
              val += term;
            }
          }
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = val;
      }
    d.push_back(std::move(m));
  }
  for (int k = 0; k <= n; ++k) {
    const int dimk = static_cast<int>(subsets(n, k).size());
    const int rankOut = k < n ? rank(d[k]) : 0;
    const int rankIn = k > 0 ? rank(d[k - 1]) : 0;
    dims.push_back(dimk - rankOut - rankIn);
  }
  return dims;
}

bool criterion3() {
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    const Algebroid ab = catalog("abelian(" + std::to_string(n) + ")");
    const auto naive = naiveCohomology(ab).dims;
    const auto oracle = ceDims(ab);
    for (int k = 0; k <= n; ++k) {
      if (naive[k] != oracle[k] || naive[k] != binomial(n, k)) {
        std::cout << "    abelian(" << n << ") degree " << k << ": naive " << naive[k]
                  << ", oracle " << oracle[k] << "\n";
        ok = false;
      }
    }
  }
  const auto naive = naiveCohomology(catalog("sl2_split")).dims;
  const auto oracle = ceDims(catalog("sl2_split"));
  if (naive != std::vector<int>{1, 0, 0, 1} || naive != oracle) {
    std::cout << "    sl2_split dims mismatch against the CE oracle\n";
    ok = false;
  }
  return ok;
}

// ---- criterion 4: derived-bracket exactness -----------------------------

bool criterion4() {
  bool ok = true;
  for (const std::string name :
       {std::string("sl2_split"), std::string("random_quadratic(11)"),
        std::string("random_quadratic(22)"), std::string("random_quadratic(33)")}) {
    const Algebroid alg = namedFixture(name);
    const MultiSection theta = buildTheta(alg);
    if (!gradedPoisson(theta, theta, alg.metric()).isZero()) {
      std::cout << "    " << name << ": {Theta,Theta} != 0\n";
      ok = false;
    }
    // Df = {Theta, f} = 0 for scalars over a point
    const MultiSection f =
        MultiSection::scalar(alg.rank(), alg.ring(), Poly::constant(alg.ring(), Rational(5)));
    if (!gradedPoisson(theta, f, alg.metric()).isZero()) {
      std::cout << "    " << name << ": {Theta, f} != 0 on scalars\n";
      ok = false;
    }
    for (int i = 0; i < alg.rank(); ++i)
      for (int j = 0; j < alg.rank(); ++j) {
        const MultiSection lhs = gradedPoisson(
            gradedPoisson(theta, alg.basisSection(i), alg.metric()), alg.basisSection(j),
            alg.metric());
        if (lhs != alg.dorfman(alg.basisSection(i), alg.basisSection(j))) {
          std::cout << "    " << name << ": {{Theta,e" << i + 1 << "},e" << j + 1
                    << "} != bracket\n";
          ok = false;
        }
      }
    if (!comparePhi(alg).lemmaHolds) {
      std::cout << "    " << name << ": {Theta,c} != breve-d c on some basis element\n";
      ok = false;
    }
  }
  return ok;
}

// ---- criterion 5: phi dimension agreement -------------------------------

bool criterion5() {
  bool ok = true;
  for (const char* name :
       {"abelian(1)", "abelian(2)", "abelian(3)", "abelian(4)", "sl2_split",
        "random_quadratic(1)", "random_quadratic(2)", "double(abelian(2))",
        "double(aff1_abelian)", "double(abelian_aff1)"}) {
    const PhiReport rep = comparePhi(namedFixture(name));
    if (!rep.isomorphism || rep.naiveDims != rep.standardDims) {
      std::cout << "    " << name << ": naive and standard dimensions differ\n";
      ok = false;
    }
  }
  return ok;
}

// ---- criterion 6: Lie derivative identity suite -------------------------

bool criterion6() {
  bool ok = true;
  for (const char* name : {"abelian(3)", "sl2_split", "random_quadratic(5)",
                           "double(aff1_abelian)", "exact_courant(1)", "exact_courant(2)"}) {
    ok &= expectPassed(namedFixture(name).verifyLieIdentities(32, 1),
                       std::string(name) + " identities (1),(3)-(7)");
  }
  // (4),(5),(6) hold on the Loday-only fixture; (7) fails concretely
  const Algebroid aff = catalog("aff1_loday");
  ok &= expectPassed(aff.verifyLieIdentities(32, 1, false), "aff1_loday identities without (7)");
  const Section e1 = aff.basisSection(0), e2 = aff.basisSection(1);
  const Poly lhs7 = aff.anchorApply(e1, aff.innerProduct(e2, e2));
  const Poly rhs7 = Rational(2) * aff.innerProduct(aff.dorfman(e1, e2), e2);
  if (lhs7 == rhs7) {
    std::cout << "    aff1_loday: expected a concrete (7) violation, found none\n";
    ok = false;
  }
  for (const char* name : {"exact_courant(1)", "exact_courant(2)", "exact_courant(3,volume)"}) {
    ok &= expectPassed(namedFixture(name).checkOperatorIdentity(3, 1),
                       std::string(name) + " operator identity");
  }
  return ok;
}

// ---- criterion 7: modular classes ---------------------------------------

bool criterion7() {
  bool ok = true;
  for (const char* name :
       {"abelian(3)", "sl2_split", "random_quadratic(4)", "random_quadratic(13)",
        "double(abelian(2))", "double(aff1_abelian)", "double(abelian_aff1)",
        "exact_courant(1)", "exact_courant(2)", "exact_courant(3)", "exact_courant(3,volume)",
        "exact_courant(3,linear)"}) {
    const ModularClass mc = modularClass(namedFixture(name));
    if (!mc.isZero || !mc.theta.isZero()) {
      std::cout << "    " << name << ": expected the exact zero representative, got "
                << mc.theta.str() << "\n";
      ok = false;
    }
  }
  const Algebroid aff = catalog("aff1_loday");
  const ModularClass mc = modularClass(aff);
  if (mc.isZero || mc.reduced != aff.basisSection(0)) {
    std::cout << "    aff1_loday: expected the class [e1], got " << mc.reduced.str() << "\n";
    ok = false;
  }
  // trace oracle under the identity metric: theta_i = tr(ad_{e_i})
  for (int i = 0; i < aff.rank(); ++i) {
    Rational tr(0);
    for (int j = 0; j < aff.rank(); ++j)
      tr += aff.dorfmanBasis(i, j).coeff({j}).constantTerm();
    if (mc.theta.coeff({i}) != Poly::constant(Ring::point(), tr)) {
      std::cout << "    aff1_loday: theta component " << i + 1 << " != tr(ad)\n";
      ok = false;
    }
  }
  return ok;
}

// ---- criterion 8: gauge invariance --------------------------------------

bool criterion8() {
  bool ok = true;
  for (int m = 1; m <= 3; ++m) {
    const Algebroid ex = namedFixture("exact_courant(" + std::to_string(m) + ")");
    const Poly x = Poly::variable(ex.ring(), 0);
    std::vector<Poly> gauges = {x, x * x};
    if (m >= 2) gauges.push_back(x * Poly::variable(ex.ring(), 1));
    for (const Poly& g : gauges)
      ok &= expectPassed(gaugeShiftCheck(ex, g),
                         "exact_courant(" + std::to_string(m) + ") gauge g = " + g.str());
  }
  return ok;
}

// ---- criterion 9: truncated Poincare lemma with Koszul oracle -----------

// forms on affine 3-space as maps from sorted coordinate subsets
using Form = std::map<IndexSet, Poly>;

void formAdd(const Ring& ring, Form& f, const IndexSet& idx, const Poly& term) {
  auto [it, inserted] = f.try_emplace(idx, ring);
  it->second += term;
  if (it->second.isZero()) f.erase(it);
}

Form formD(const Ring& ring, const Form& w) {
  Form out;
  for (const auto& [K, p] : w)
    for (int v = 0; v < ring.numVars(); ++v) {
      const Poly dp = p.partial(v);
      if (dp.isZero()) continue;
      IndexSet nk;
      int sign = 1;
      bool dup = false;
      size_t pos = 0;
      while (pos < K.size() && K[pos] < v) ++pos;
      if (pos < K.size() && K[pos] == v) dup = true;
      if (dup) continue;
      nk = K;
      nk.insert(nk.begin() + static_cast<long>(pos), v);
      if (pos % 2 == 1) sign = -1;
      formAdd(ring, out, nk, sign > 0 ? dp : -dp);
    }
  return out;
}

Form formH(const Ring& ring, const Form& w) {
  Form out;
  for (const auto& [K, p] : w)
    for (const auto& [e, c] : p.terms()) {
      int total = static_cast<int>(K.size());
      for (int ei : e) total += ei;
      if (total == 0) continue;
      const Poly mono = Poly::monomial(ring, e, c * Rational(1, total));
      for (size_t q = 0; q < K.size(); ++q) {
        IndexSet rest;
        for (size_t t = 0; t < K.size(); ++t)
          if (t != q) rest.push_back(K[t]);
        Poly term = Poly::variable(ring, K[q]) * mono;
        if (q % 2 == 1) term = -term;
        formAdd(ring, out, rest, term);
      }
    }
  return out;
}

bool criterion9() {
  bool ok = true;
  for (const char* name : {"exact_courant(3)", "exact_courant(3,volume)"}) {
    const auto dims = naiveCohomology(namedFixture(name), 3).dims;
    if (dims != std::vector<int>{1, 0, 0, 0}) {
      std::cout << "    " << name << ": truncated dims are not (1,0,0,0)\n";
      ok = false;
    }
  }
  // Koszul homotopy dh + hd = id on every truncated basis form of
  // positive total degree, hence only constants survive in cohomology
  const Ring ring = affineRing(3);
  for (int k = 0; k <= 3; ++k)
    for (const auto& K : subsets(3, k))
      for (const auto& e : monomialsUpTo(ring, 3 - k)) {
        int total = k;
        for (int ei : e) total += ei;
        Form w;
        w[K] = Poly::monomial(ring, e, Rational(1));
        Form sum = formD(ring, formH(ring, w));
        for (const auto& [idx, p] : formH(ring, formD(ring, w))) formAdd(ring, sum, idx, p);
        const Form expect = total == 0 ? Form{} : w;
        if (sum != expect) {
          std::cout << "    Koszul homotopy identity fails on a basis form (|K| = " << k
                    << ")\n";
          ok = false;
        }
      }
  return ok;
}

// ---- criterion 10: CLI determinism --------------------------------------

std::string runCli(const std::string& args) {
#ifdef LODAYCLI_PATH
  const std::string cmd = std::string(LODAYCLI_PATH) + " " + args + " 2>&1";
  std::string out;
  if (FILE* p = popen(cmd.c_str(), "r")) {
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    pclose(p);
  }
  return out;
#else
  return "";
#endif
}

bool criterion10() {
  bool ok = true;
  for (const char* name :
       {"abelian(3)", "sl2_split", "aff1_loday", "random_quadratic(6)",
        "double(aff1_abelian)", "double(abelian_aff1)", "exact_courant(1)",
        "exact_courant(2)", "exact_courant(3,volume)"}) {
    const Algebroid alg = namedFixture(name);
    const std::string text = serializeAlgebroid(alg);
    if (serializeAlgebroid(parseAlgebroid(text)) != text) {
      std::cout << "    " << name << ": parse/serialize round trip not the identity\n";
      ok = false;
    }
  }
  for (const std::string args :
       {std::string("check --fixture sl2_split --seed 7 --format json"),
        std::string("cohomology --fixture sl2_split --theory both --format json"),
        std::string("modular --fixture aff1_loday --format json"),
        std::string("probe-redundancy --trials 5 --seed 3 --format json")}) {
    const std::string a = runCli(args);
    const std::string b = runCli(args);
    if (a.empty() || a != b) {
      std::cout << "    CLI output not byte-deterministic for: " << args << "\n";
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, bool (*)()>> criteria = {
      {"1 axiom suites on the fixture catalog", criterion1},
      {"2 breve-d squares to zero and preserves kernels", criterion2},
      {"3 naive dims match the Chevalley-Eilenberg oracle", criterion3},
      {"4 derived bracket reproduces breve-d", criterion4},
      {"5 phi dimension agreement over points", criterion5},
      {"6 Lie derivative identity suite", criterion6},
      {"7 modular classes with the trace oracle", criterion7},
      {"8 gauge invariance of the modular class", criterion8},
      {"9 truncated Poincare lemma with Koszul oracle", criterion9},
      {"10 CLI round trip and byte determinism", criterion10},
  };
  int failures = 0;
  for (const auto& [label, fn] : criteria) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      std::cout << "    exception: " << e.what() << "\n";
    }
    std::cout << "criterion " << label << ": " << (ok ? "pass" : "fail") << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
