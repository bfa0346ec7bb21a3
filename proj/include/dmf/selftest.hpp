#pragma once

#include <string>
#include <vector>

namespace dmf {

enum class Profile { Quick, Full };

struct CriterionResult {
  std::string id;     // "AC1" ...
  std::string title;
  bool pass = false;
  long long checks = 0;
  std::vector<std::string> failures;  // first few, for the report
};

// Field sizes a criterion covers under a profile (quick: q = 3 only).
std::vector<int> profile_qs(Profile profile, const std::vector<int>& full);

CriterionResult ac_displayed(Profile profile);
CriterionResult ac_identities(Profile profile);
CriterionResult ac_routes(Profile profile);
CriterionResult ac_congruence_sweep(Profile profile);
CriterionResult ac_worked_examples(Profile profile);
CriterionResult ac_residues(Profile profile);
CriterionResult ac_relations(Profile profile);
CriterionResult ac_triangularity(Profile profile);

struct SelftestReport {
  std::vector<CriterionResult> results;
  bool all_pass() const;
  // Byte-stable rendering, no timings.
  std::string render() const;
};

// AC1..AC8 in order; sweep items use up to jobs threads (<= 0: runtime
// default). Output does not depend on jobs.
SelftestReport run_selftest(Profile profile, int jobs = 1);

}  // namespace dmf
