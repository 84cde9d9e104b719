#pragma once

/**
 * @file claims.hpp
 * @brief Registry of verifiable claims and the batch runner behind the command-line tool.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cyclo {

enum class ClaimStatus { kPass, kFail, kInconclusive, kExternalData };
std::string to_string(ClaimStatus s);

struct ClaimReport {
  std::string claim_id;
  std::string paper_location;
  ClaimStatus status = ClaimStatus::kFail;
  std::string witness;
  long runtime_ms = 0;
};

struct RunOptions {
  std::uint64_t budget = 2000;  // prime search bound
  unsigned precision = 128;     // embedding precision in bits
};

struct ClaimOutcome {
  ClaimStatus status = ClaimStatus::kFail;
  std::string witness;
};

struct ClaimDefinition {
  std::string id;
  std::string paper_location;
  std::string summary;
  std::vector<std::string> deps;
  std::function<ClaimOutcome(const RunOptions&)> run;
};

/// All claims, in dependency order.
const std::vector<ClaimDefinition>& claim_registry();

/// Runs the claims whose id matches the glob (all if empty), dependencies first, and returns
/// the reports sorted by id. A filter without wildcards that names no claim throws
/// std::invalid_argument; a wildcard filter matching nothing yields an empty list.
std::vector<ClaimReport> run_claims(const std::string& filter, const RunOptions& options);

bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace cyclo
