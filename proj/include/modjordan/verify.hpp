#pragma once

// Grid cross-validation: oracle vs recurrence vs dispatcher, plus the
// symmetry and bound properties, over every r <= s within the bounds.

#include <string>
#include <vector>

#include "modjordan/algebra_oracle.hpp"
#include "modjordan/arith.hpp"
#include "modjordan/record_io.hpp"

namespace modjordan {

struct VerifyOptions {
  Int r_max = 1;
  Int s_max = 1;
  std::vector<Int> primes{2};
  OracleOptions oracle;
  /// Symmetry partners (s+p^m, the dual class, (pr, ps)) are evaluated by
  /// the oracle when their r*s is at most this, else by the bare
  /// recurrence. Grid cells themselves always use the oracle.
  Int partner_oracle_budget = 4096;
  unsigned threads = 1;
};

struct CheckTally {
  std::string name;
  Int evaluated = 0;
  Int violations = 0;
};

struct Failure {
  Int r = 0;
  Int s = 0;
  Int p = 0;
  std::string check;
  std::string detail;
};

struct VerifyReport {
  Int cells = 0;
  /// Partner evaluations done by the oracle vs the recurrence.
  Int partner_oracle = 0;
  Int partner_recurrence = 0;
  std::vector<CheckTally> tallies;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  const CheckTally& tally(const std::string& name) const;
};

/// Check names, in report order.
const std::vector<std::string>& verify_check_names();

/// Throws ResourceLimit if a grid cell exceeds the oracle ceiling and
/// InvalidArgument for bad bounds or non-prime entries.
VerifyReport run_verification(const VerifyOptions& opts);

std::string format_report(const VerifyReport& report, Format fmt);

}  // namespace modjordan
