#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alexlab/errors.hpp"

namespace alexlab {

struct ClaimResult {
  std::string id;       // e.g. "lemma11.aut_order"
  std::string locus;    // human hint, e.g. "Lemma 1.1 / Example 3.1"
  int criterion = 0;    // acceptance criterion number (1..10)
  bool pass = false;
  std::string witness;  // machine-readable summary either way
  std::int64_t elapsed_ms = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<ClaimResult> claims;
  bool all_pass = true;
};

struct VerifyOptions {
  std::uint64_t seed = 2024;
  Caps caps;
  std::string groups_dir;  // optional: directory with override group JSONs
};

// Suites: ex61, lemma11, thm12, prop42, cor44, prop53-54, prop62, thm13,
// ex65, properties.  "all" runs every suite in that order.
const std::vector<std::string>& verify_suite_names();
VerificationReport run_verify_suite(const std::string& name, const VerifyOptions& opt);
std::vector<VerificationReport> run_all_suites(const VerifyOptions& opt);

std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs);

}  // namespace alexlab
