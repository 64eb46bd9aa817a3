#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "edalg/json_io.hpp"

namespace edalg {

struct AcceptanceOptions {
  /// Criterion ids ("A7") or names ("dims"); empty runs everything.
  std::vector<std::string> only;
  std::uint64_t seed = 0;
  /// Source of the e_{2i} family for the identity checks; tests swap it to
  /// confirm that a corrupted formula is caught.
  std::function<Derivation(int)> epsilon_provider = epsilon;
};

struct CriterionResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;
  Json data = Json::object();
  double seconds = 0;
};

struct AcceptanceReport {
  std::vector<CriterionResult> results;
  bool all_passed() const;
};

struct CriterionInfo {
  std::string id;
  std::string name;
};
const std::vector<CriterionInfo>& acceptance_criteria();

/// Runs the selected criteria in id order. Throws std::invalid_argument for an
/// unknown selector and lets InvariantBreach escape.
AcceptanceReport run_acceptance_suite(const AcceptanceOptions& options = {});

/// Deterministic report (timings excluded).
Json to_json(const AcceptanceReport& report);

}  // namespace edalg
