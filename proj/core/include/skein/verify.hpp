#ifndef SKEIN_VERIFY_HPP
#define SKEIN_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "skein/bounds.hpp"
#include "skein/corpus.hpp"

namespace skein {

struct VerifyOptions {
  int crossing_cap = 16;
  unsigned seed = 0;   // order of the per-crossing skein spot checks
  bool quiet = false;
  bool check_skein_relation = true;
};

struct RecordOutcome {
  std::string name;
  std::optional<BoundsReport> report;   // absent when skipped
  std::string skip_reason;
  std::vector<std::string> problems;    // violations, mismatches, errors
  bool skipped() const { return !skip_reason.empty(); }
};

struct VerificationSummary {
  std::vector<RecordOutcome> outcomes;  // sorted by record name
  ConjectureReport conjecture;
  unsigned seed = 0;

  int checked = 0;
  int equalities = 0;  // individual verdicts across all checks
  int strict = 0;
  int violated = 0;
  int not_applicable = 0;
  int skipped = 0;
  int problem_count = 0;

  bool ok() const { return violated == 0 && problem_count == 0; }
  std::string to_json() const;
  std::string to_markdown() const;
  std::string one_line() const;
};

VerificationSummary run_verification(const std::vector<KnotRecord>& corpus,
                                     const VerifyOptions& opt = {});

}  // namespace skein

#endif  // SKEIN_VERIFY_HPP
