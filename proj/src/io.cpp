#include "loday/io.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace loday {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Algebroid parseAlgebroid(const std::string& jsonText) {
  json j;
  try {
    j = json::parse(jsonText);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("parseAlgebroid: invalid JSON: ") + e.what());
  }
  auto require = [&](const char* key) {
    if (!j.contains(key))
      throw std::invalid_argument(std::string("parseAlgebroid: missing field '") + key + "'");
    return j.at(key);
  };

  const json base = require("base");
  Ring ring;
  const std::string baseType = base.value("type", "");
  if (baseType == "point") {
    ring = Ring::point();
  } else if (baseType == "polynomial") {
    if (!base.contains("variables") || !base["variables"].is_array())
      throw std::invalid_argument("parseAlgebroid: polynomial base needs a variable list");
    ring = Ring(base["variables"].get<std::vector<std::string>>());
  } else {
    throw std::invalid_argument("parseAlgebroid: base.type must be 'point' or 'polynomial'");
  }

  const int rank = require("rank").get<int>();
  if (rank <= 0) throw std::invalid_argument("parseAlgebroid: rank must be positive");

  const json gj = require("metric");
  if (static_cast<int>(gj.size()) != rank)
    throw std::invalid_argument("parseAlgebroid: metric must be rank x rank");
  QMatrix g(rank, rank);
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(gj[i].size()) != rank)
      throw std::invalid_argument("parseAlgebroid: metric row " + std::to_string(i) +
                                  " has wrong length");
    for (int k = 0; k < rank; ++k) g(i, k) = Rational::parse(gj[i][k].get<std::string>());
  }
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < i; ++k)
      if (g(i, k) != g(k, i))
        throw std::invalid_argument("parseAlgebroid: metric is not symmetric");
  if (determinant(g).isZero())
    throw std::invalid_argument("parseAlgebroid: metric is singular");

  auto parsePoly = [&](const json& v, const std::string& where) {
    try {
      return Poly::parse(ring, v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("parseAlgebroid: " + where + ": " + e.what());
    }
  };
  const json aj = require("anchor");
  if (static_cast<int>(aj.size()) != rank)
    throw std::invalid_argument("parseAlgebroid: anchor needs one row per basis section");
  std::vector<Derivation> anchor;
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(aj[i].size()) != ring.numVars())
      throw std::invalid_argument("parseAlgebroid: anchor[" + std::to_string(i) +
                                  "] needs one polynomial per variable");
    std::vector<Poly> coeffs;
    for (int v = 0; v < ring.numVars(); ++v)
      coeffs.push_back(parsePoly(aj[i][v], "anchor[" + std::to_string(i) + "]"));
    anchor.emplace_back(ring, std::move(coeffs));
  }

  const json dj = require("dorfman");
  if (static_cast<int>(dj.size()) != rank)
    throw std::invalid_argument("parseAlgebroid: dorfman table must be rank x rank");
  std::vector<std::vector<std::vector<Poly>>> dorf(rank);
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(dj[i].size()) != rank)
      throw std::invalid_argument("parseAlgebroid: dorfman table must be rank x rank");
    dorf[i].resize(rank);
    for (int jx = 0; jx < rank; ++jx) {
      if (static_cast<int>(dj[i][jx].size()) != rank)
        throw std::invalid_argument("parseAlgebroid: dorfman[" + std::to_string(i) + "][" +
                                    std::to_string(jx) + "] needs rank components");
      for (int k = 0; k < rank; ++k) {
        Poly p = parsePoly(dj[i][jx][k], "dorfman[" + std::to_string(i) + "][" +
                                             std::to_string(jx) + "][" + std::to_string(k) + "]");
        dorf[i][jx].push_back(std::move(p));
      }
    }
  }

  std::optional<std::vector<Section>> frame;
  if (j.contains("kernel_frame")) {
    std::vector<Section> fr;
    for (const auto& row : j["kernel_frame"]) {
      if (static_cast<int>(row.size()) != rank)
        throw std::invalid_argument("parseAlgebroid: kernel_frame row needs rank components");
      Section s(rank, 1, ring);
      for (int k = 0; k < rank; ++k) s.addCoeff({k}, parsePoly(row[k], "kernel_frame"));
      fr.push_back(std::move(s));
    }
    frame = std::move(fr);
  }

  return Algebroid(rank, ring, Metric(std::move(g)), std::move(anchor), std::move(dorf),
                   std::move(frame), j.value("name", ""));
}

std::string serializeAlgebroid(const Algebroid& alg) {
  ordered_json j;
  j["name"] = alg.name();
  if (alg.ring().isPoint()) {
    j["base"] = {{"type", "point"}};
  } else {
    j["base"] = {{"type", "polynomial"}, {"variables", alg.ring().vars()}};
  }
  j["rank"] = alg.rank();
  ordered_json g = ordered_json::array();
  for (int i = 0; i < alg.rank(); ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < alg.rank(); ++k) row.push_back(alg.metric().g()(i, k).str());
    g.push_back(row);
  }
  j["metric"] = g;
  ordered_json a = ordered_json::array();
  for (int i = 0; i < alg.rank(); ++i) {
    ordered_json row = ordered_json::array();
    for (int v = 0; v < alg.ring().numVars(); ++v)
      row.push_back(alg.anchorBasis(i).coeff(v).str());
    a.push_back(row);
  }
  j["anchor"] = a;
  ordered_json d = ordered_json::array();
  for (int i = 0; i < alg.rank(); ++i) {
    ordered_json row = ordered_json::array();
    for (int jx = 0; jx < alg.rank(); ++jx) {
      ordered_json cell = ordered_json::array();
      for (int k = 0; k < alg.rank(); ++k)
        cell.push_back(alg.dorfmanBasis(i, jx).coeff({k}).str());
      row.push_back(cell);
    }
    d.push_back(row);
  }
  j["dorfman"] = d;
  if (alg.declaredKernelFrame()) {
    ordered_json f = ordered_json::array();
    for (const auto& s : *alg.declaredKernelFrame()) {
      ordered_json row = ordered_json::array();
      for (int k = 0; k < alg.rank(); ++k) row.push_back(s.coeff({k}).str());
      f.push_back(row);
    }
    j["kernel_frame"] = f;
  }
  return j.dump(2) + "\n";
}

void Report::absorb(const std::string& name, const CheckReport& rep) {
  verdict(name, rep.passed());
  for (const auto& w : rep.witnesses) witnesses.push_back(w);
  for (const auto& n : rep.notes) notes.push_back(n);
}

void Report::absorb(const std::string& name, const std::vector<ViolationWitness>& ws) {
  verdict(name, ws.empty());
  for (const auto& w : ws) witnesses.push_back(w);
}

bool Report::allPassed() const {
  for (const auto& [name, v] : verdicts)
    if (v == "fail") return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "input: " << input << "\n";
  os << "seed: " << seed << "\n";
  for (const auto& [name, v] : verdicts) os << "  [" << v << "] " << name << "\n";
  for (const auto& [name, v] : results) os << "  " << name << ": " << v << "\n";
  for (const auto& w : witnesses)
    os << "  witness[" << w.axiomId << "] inputs " << w.inputs << ": lhs = " << w.lhs
       << ", rhs = " << w.rhs << "\n";
  for (const auto& n : notes) os << "  note: " << n << "\n";
  os << (allPassed() ? "RESULT: pass" : "RESULT: fail") << "\n";
  return os.str();
}

std::string Report::json() const {
  ordered_json j;
  j["command"] = command;
  j["input"] = input;
  j["seed"] = seed;
  ordered_json v = ordered_json::object();
  for (const auto& [name, val] : verdicts) v[name] = val;
  j["verdicts"] = v;
  ordered_json r = ordered_json::object();
  for (const auto& [name, val] : results) r[name] = val;
  j["results"] = r;
  ordered_json w = ordered_json::array();
  for (const auto& wit : witnesses)
    w.push_back({{"axiom", wit.axiomId},
                 {"inputs", wit.inputs},
                 {"lhs", wit.lhs},
                 {"rhs", wit.rhs}});
  j["witnesses"] = w;
  j["notes"] = notes;
  j["pass"] = allPassed();
  return j.dump(2) + "\n";
}

}  // namespace loday
