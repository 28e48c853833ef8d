#pragma once

// Per-axiom verdicts shared by the EARS and axiom suites.

#include <map>
#include <string>
#include <vector>

namespace ealie {

enum class Status { Pass, Fail, WindowVerified };

std::string to_string(Status s);

struct Verdict {
  std::string axiom;
  Status status = Status::Pass;
  /// What was checked; for window-verified entries, the truncated quantifier.
  std::string detail;
  /// Concrete root, pair or element when the check failed.
  std::string witness;
  /// Informational verdicts (e.g. reducedness) do not decide the suite.
  bool required = true;

  bool ok() const { return status != Status::Fail; }
};

struct AxiomReport {
  std::string suite;
  std::vector<Verdict> verdicts;
  std::map<std::string, std::string> meta;

  bool passed() const;
  /// nullptr when the axiom is not in the report.
  const Verdict* find(const std::string& axiom) const;
  void add(Verdict v) { verdicts.push_back(std::move(v)); }
};

}  // namespace ealie
