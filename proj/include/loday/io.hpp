// JSON (de)serialization of algebroids and machine/human reports.
// All numeric payloads travel as exact strings; no floating point on
// the wire.
#ifndef LODAY_IO_HPP
#define LODAY_IO_HPP

#include "loday/algebroid.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace loday {

Algebroid parseAlgebroid(const std::string& jsonText);
std::string serializeAlgebroid(const Algebroid& alg);

struct Report {
  std::string command;
  std::string input;
  std::uint64_t seed = 0;
  // verdicts: (check name, "pass" | "fail" | "skipped")
  std::vector<std::pair<std::string, std::string>> verdicts;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<ViolationWitness> witnesses;
  std::vector<std::string> notes;

  void verdict(const std::string& name, bool pass) {
    verdicts.emplace_back(name, pass ? "pass" : "fail");
  }
  void skipped(const std::string& name) { verdicts.emplace_back(name, "skipped"); }
  void result(const std::string& name, const std::string& value) {
    results.emplace_back(name, value);
  }
  void absorb(const std::string& name, const CheckReport& rep);
  void absorb(const std::string& name, const std::vector<ViolationWitness>& ws);

  bool allPassed() const;
  std::string text() const;
  std::string json() const;
};

}  // namespace loday

#endif
