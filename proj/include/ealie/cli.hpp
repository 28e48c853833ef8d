#pragma once

// Instance specs, suite runs and root-data export behind the ealie tool.

#include "ealie/algebra.hpp"
#include "ealie/report.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ealie {

struct InstanceSpec {
  std::string construction = "affinized";
  int ell = 2;
  int nu = 2;
  /// Strict upper triangle of q, row-major; empty means every entry -1.
  std::vector<int> q;
  std::string type = "C";
  int rank = 2;
  int window = 2;
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 1;
};

/// Invalid parameters; the tool maps this to exit status 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConstructionInfo {
  std::string name;
  std::string summary;
};
const std::vector<ConstructionInfo>& constructions();

/// Parses "-1,1,..." into integers; throws UsageError on anything else.
std::vector<int> parse_q(const std::string& text);
std::vector<std::string> parse_suites(const std::string& text);

/// Throws UsageError before any computation.
void validate(const InstanceSpec& spec);
AlgebraPtr build_instance(const InstanceSpec& spec);

struct RunResult {
  bool passed = true;
  std::vector<AxiomReport> reports;
  /// JSON text with keys instance, suite_results, witnesses.
  std::string json;
};

/// Suites are T, D, EARS, SERRE, TAME, PROPS.
RunResult run_verification(const InstanceSpec& spec, const std::vector<std::string>& suites);

/// One JSON record per root sorted by (finite, lattice), then a footer line.
void export_window(const InstanceSpec& spec, std::ostream& out);

}  // namespace ealie
