// Command-line front end: axiom checking, cohomology, modular classes,
// constructions, the phi comparison, and the axiom-redundancy probe.
#include "loday/cohomology.hpp"
#include "loday/constructions.hpp"
#include "loday/io.hpp"
#include "loday/modular.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace loday;

struct CommonOpts {
  std::string inputFile;
  std::string fixture;
  std::string format = "text";
  std::uint64_t seed = 1;
  int trials = 16;
};

void addCommon(CLI::App* cmd, CommonOpts& o, bool needsInput = true) {
  auto* in = cmd->add_option("-i,--input", o.inputFile, "algebroid JSON file");
  auto* fx = cmd->add_option("--fixture", o.fixture,
                             "built-in fixture name, e.g. sl2_split, aff1_loday, "
                             "abelian(n), double(aff1_abelian), exact_courant(3,volume)");
  if (needsInput) {
    in->excludes(fx);
    fx->excludes(in);
  }
  cmd->add_option("--format", o.format, "report format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", o.seed, "seed for randomized identity trials");
  cmd->add_option("--trials", o.trials, "number of randomized trials");
}

Algebroid loadInput(const CommonOpts& o, std::string& label) {
  if (!o.inputFile.empty()) {
    std::ifstream in(o.inputFile);
    if (!in) throw std::invalid_argument("cannot open input file '" + o.inputFile + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    label = o.inputFile;
    return parseAlgebroid(ss.str());
  }
  if (o.fixture.empty())
    throw std::invalid_argument("one of --input or --fixture is required");
  label = "fixture:" + o.fixture;
  return namedFixture(o.fixture);
}

int emit(const Report& rep, const std::string& format) {
  std::cout << (format == "json" ? rep.json() : rep.text());
  return rep.allPassed() ? 0 : 1;
}

std::string joinInts(const std::vector<int>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

int runCheck(const CommonOpts& o) {
  Report rep;
  rep.command = "check";
  rep.seed = o.seed;
  const Algebroid alg = loadInput(o, rep.input);
  rep.absorb("loday_axioms", alg.checkLodayAxioms(o.trials, o.seed));
  rep.absorb("courant_invariance", alg.checkCourant(o.trials, o.seed));
  rep.absorb("derived_lemma", alg.derivedLemmaCheck(o.seed));
  rep.absorb("lie_identities", alg.verifyLieIdentities(o.trials, o.seed));
  rep.absorb("operator_identity", alg.checkOperatorIdentity(std::min(o.trials, 6), o.seed));
  return emit(rep, o.format);
}

void addCohomologyResults(Report& rep, const std::string& theory, const CohomologyResult& h) {
  rep.result(theory + "_dims", joinInts(h.dims));
  for (size_t k = 0; k < h.representativeLabels.size(); ++k)
    for (size_t r = 0; r < h.representativeLabels[k].size(); ++r)
      rep.result(theory + "_H" + std::to_string(k) + "_rep" + std::to_string(r + 1),
                 h.representativeLabels[k][r]);
}

int runCohomology(const CommonOpts& o, const std::string& theory, int degreeCap) {
  Report rep;
  rep.command = "cohomology";
  rep.seed = o.seed;
  const Algebroid alg = loadInput(o, rep.input);
  const bool wantNaive = theory == "naive" || theory == "both";
  const bool wantStandard = theory == "standard" || theory == "both";
  if (wantNaive) addCohomologyResults(rep, "naive", naiveCohomology(alg, degreeCap));
  if (wantStandard) {
    if (!alg.ring().isPoint()) {
      rep.skipped("standard");
      rep.notes.push_back("standard cohomology is defined here over a point base only");
    } else {
      addCohomologyResults(rep, "standard", standardCohomology(alg));
    }
  }
  if (theory == "both" && alg.ring().isPoint()) {
    const PhiReport phi = comparePhi(alg);
    rep.verdict("phi_lemma", phi.lemmaHolds);
    rep.verdict("phi_isomorphism", phi.isomorphism);
    rep.result("phi", phi.isomorphism ? "phi isomorphism" : "phi not an isomorphism");
  }
  return emit(rep, o.format);
}

int runModular(const CommonOpts& o, const std::string& gauge) {
  Report rep;
  rep.command = "modular";
  rep.seed = o.seed;
  const Algebroid alg = loadInput(o, rep.input);
  rep.absorb("line_module", checkModule(alg, topConnection(alg), o.trials, o.seed));
  const ModularClass mc = modularClass(alg);
  rep.result("theta", mc.theta.str());
  rep.result("reduced_representative", mc.reduced.str());
  rep.result("verdict", mc.isZero ? "zero" : "nonzero");
  if (alg.ring().isPoint()) {
    rep.skipped("gauge_shift");
    rep.notes.push_back("gauge shift is vacuous over a point (D = 0)");
  } else {
    Poly g = gauge.empty() ? Poly::variable(alg.ring(), 0) : Poly::parse(alg.ring(), gauge);
    rep.result("gauge", g.str());
    rep.absorb("gauge_shift", gaugeShiftCheck(alg, g));
  }
  return emit(rep, o.format);
}

int runConstruct(const CommonOpts& o, const std::string& kind, const std::string& preset,
                 int m, const std::string& twist, const std::string& outFile) {
  Report rep;
  rep.command = "construct";
  rep.seed = o.seed;
  Algebroid alg = kind == "double"
                      ? drinfeldDouble(bialgebraPreset(preset))
                      : namedFixture("exact_courant(" + std::to_string(m) + "," + twist + ")");
  rep.input = "construct:" + kind;
  rep.result("name", alg.name());
  rep.result("rank", std::to_string(alg.rank()));
  const std::string text = serializeAlgebroid(alg);
  if (outFile.empty()) {
    std::cout << text;  // bare AlgebroidFile, pipeable into --input
    return 0;
  }
  std::ofstream out(outFile);
  if (!out) throw std::invalid_argument("cannot open output file '" + outFile + "'");
  out << text;
  rep.result("output", outFile);
  rep.verdict("constructed", true);
  return emit(rep, o.format);
}

int runCompare(const CommonOpts& o) {
  Report rep;
  rep.command = "compare";
  rep.seed = o.seed;
  const Algebroid alg = loadInput(o, rep.input);
  const PhiReport phi = comparePhi(alg);
  rep.verdict("phi_lemma", phi.lemmaHolds);
  rep.verdict("phi_isomorphism", phi.isomorphism);
  rep.result("naive_dims", joinInts(phi.naiveDims));
  rep.result("standard_dims", joinInts(phi.standardDims));
  for (const auto& n : phi.notes) rep.notes.push_back(n);
  return emit(rep, o.format);
}

// Random rank-2 structures over one polynomial variable with anchors
// (a(x) d/dx, 0), identity metric, and the declared frame {e2}. A
// sample counts only when (A),(D),(E) hold; the probe then reports any
// (B) or (C) violations among those samples. Findings only, no theorem.
int runProbe(const CommonOpts& o) {
  Report rep;
  rep.command = "probe-redundancy";
  rep.seed = o.seed;
  rep.input = "random rank-2 structures over Q[x]";
  const Ring ring({"x"});
  Rng rng(o.seed);
  int admissible = 0;
  int findings = 0;
  for (int t = 0; t < o.trials; ++t) {
    std::vector<Derivation> anchor;
    anchor.emplace_back(ring, std::vector<Poly>{rng.poly(ring, 1)});
    anchor.push_back(Derivation::zero(ring));
    std::vector<std::vector<std::vector<Poly>>> dorf(
        2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(2, Poly(ring))));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          if (rng.intIn(0, 2) == 0) dorf[i][j][k] = rng.poly(ring, 1);
    std::vector<Section> frame{Section::basisVector(2, ring, 1)};
    Algebroid cand(2, ring, Metric(QMatrix::Identity(2, 2)), std::move(anchor),
                   std::move(dorf), std::move(frame),
                   "probe_" + std::to_string(t));
    const auto ws = cand.checkLodayAxioms(4, o.seed + t);
    bool adeOk = true;
    std::vector<ViolationWitness> bc;
    for (const auto& w : ws) {
      const std::string id = w.axiomId.substr(0, 1);
      if (id == "B" || id == "C")
        bc.push_back(w);
      else
        adeOk = false;
    }
    if (!adeOk) continue;
    ++admissible;
    if (!bc.empty()) {
      ++findings;
      rep.notes.push_back("sample " + std::to_string(t) + " satisfies (A),(D),(E) but violates " +
                          bc.front().axiomId + " on " + bc.front().inputs);
    }
  }
  rep.result("trials", std::to_string(o.trials));
  rep.result("ade_admissible", std::to_string(admissible));
  rep.result("bc_violations_found", std::to_string(findings));
  rep.notes.push_back(findings > 0
                          ? "found (A),(D),(E)-satisfying structures violating (B) or (C)"
                          : "no (B),(C) violation among the admissible samples");
  rep.verdict("probe_completed", true);
  return emit(rep, o.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic Loday/Courant algebroid toolkit"};
  app.require_subcommand(1);
  int exitCode = 0;

  CommonOpts checkOpts;
  auto* check = app.add_subcommand("check", "run the axiom and identity suites");
  addCommon(check, checkOpts);
  check->callback([&] { exitCode = runCheck(checkOpts); });

  CommonOpts cohOpts;
  std::string theory = "naive";
  int degreeCap = 3;
  auto* coh = app.add_subcommand("cohomology", "cohomology dimensions and representatives");
  addCommon(coh, cohOpts);
  coh->add_option("--theory", theory, "naive | standard | both")
      ->check(CLI::IsMember({"naive", "standard", "both"}));
  coh->add_option("--degree-cap", degreeCap,
                  "total degree truncation for polynomial bases");
  coh->callback([&] { exitCode = runCohomology(cohOpts, theory, degreeCap); });

  CommonOpts modOpts;
  std::string gauge;
  auto* mod = app.add_subcommand("modular", "modular class and gauge-shift check");
  addCommon(mod, modOpts);
  mod->add_option("--gauge", gauge,
                  "gauge polynomial g for the shift check (default: first variable)");
  mod->callback([&] { exitCode = runModular(modOpts, gauge); });

  CommonOpts conOpts;
  std::string kind;
  std::string preset = "aff1_abelian";
  std::string twist = "zero";
  std::string outFile;
  int dimension = 3;
  auto* con = app.add_subcommand("construct", "write a constructed algebroid file");
  con->add_option("kind", kind, "double | exact")
      ->required()
      ->check(CLI::IsMember({"double", "exact"}));
  con->add_option("--preset", preset,
                  "bialgebra preset for double: abelian(n), aff1_abelian, abelian_aff1");
  con->add_option("-m,--dimension", dimension, "base dimension for exact");
  con->add_option("--twist", twist, "three-form twist for exact: zero | volume | linear");
  con->add_option("-o,--output", outFile, "output file (stdout if omitted)");
  addCommon(con, conOpts, false);
  con->callback(
      [&] { exitCode = runConstruct(conOpts, kind, preset, dimension, twist, outFile); });

  CommonOpts cmpOpts;
  auto* cmp = app.add_subcommand("compare", "naive vs standard cohomology via phi");
  addCommon(cmp, cmpOpts);
  cmp->callback([&] { exitCode = runCompare(cmpOpts); });

  CommonOpts probeOpts;
  auto* probe = app.add_subcommand("probe-redundancy",
                                   "search random structures for (B),(C) violations");
  probe->add_option("--format", probeOpts.format, "report format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  probe->add_option("--seed", probeOpts.seed, "sampling seed");
  probe->add_option("--trials", probeOpts.trials, "number of sampled structures");
  probe->callback([&] { exitCode = runProbe(probeOpts); });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exitCode;
}
