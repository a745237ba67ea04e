#pragma once

#include <functional>
#include <string>
#include <vector>

namespace sumcheck {

struct Measured {
  double value = 0.0;
  double err = 0.0; // evaluator's own error estimate
};

// asserted entries gate the verify exit code; suspect entries record known
// discrepancies and never gate; exploratory entries are numerical probes
// whose truth is not settled.
enum class EntryStatus { asserted, suspect, exploratory };

struct IdentityRecord {
  std::string id;
  std::string anchor; // the equality under test, in plain notation
  std::function<Measured()> lhs;
  std::function<Measured()> rhs;
  double tol_abs = 1e-8;
  double tol_rel = 1e-8;
  EntryStatus status = EntryStatus::asserted;
  std::vector<std::string> tags;
  // optional commentary given the measured sides, shown in reports
  std::function<std::string(double, double)> notes;
};

struct CheckResult {
  std::string id;
  std::string anchor;
  EntryStatus status = EntryStatus::asserted;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double budget_err = 0.0; // lhs.err + rhs.err
  double tol_abs = 0.0;
  double tol_rel = 0.0;
  bool pass = false;
  double seconds = 0.0;
  std::string notes;
  std::vector<std::string> tags;
};

const std::vector<IdentityRecord>& catalog_entries();

// Glob (fnmatch-style) matched against the id and against each tag; an entry
// is selected when either matches. The extra tag list (each itself a glob)
// must all be present. Results come back sorted by id so report order never
// depends on registration or scheduling.
std::vector<const IdentityRecord*> select_entries(
    const std::string& glob, const std::vector<std::string>& tags = {});

struct RunOptions {
  double tol_abs_override = -1.0; // < 0 keeps the per-entry tolerance
  double tol_rel_override = -1.0;
  int threads = 1;
};

CheckResult run_entry(const IdentityRecord& rec, const RunOptions& opt = {});

// Runs the selection (multithreaded if asked) and returns results in the
// selection's order regardless of scheduling.
std::vector<CheckResult> run_entries(const std::vector<const IdentityRecord*>& sel,
                                     const RunOptions& opt = {});

const char* status_name(EntryStatus s);

} // namespace sumcheck
