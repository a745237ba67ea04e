#include "sumcheck/catalog.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

namespace sumcheck {

void register_gamma_limits(std::vector<IdentityRecord>&);
void register_log_sum(std::vector<IdentityRecord>&);
void register_psi_square(std::vector<IdentityRecord>&);
void register_loglog(std::vector<IdentityRecord>&);
void register_bern2_series(std::vector<IdentityRecord>&);
void register_polylog_entries(std::vector<IdentityRecord>&);
void register_gamma_gen(std::vector<IdentityRecord>&);
void register_stieltjes_entries(std::vector<IdentityRecord>&);
void register_zeta_series(std::vector<IdentityRecord>&);
void register_euler_sums(std::vector<IdentityRecord>&);
void register_binomial_entries(std::vector<IdentityRecord>&);
void register_trig_entries(std::vector<IdentityRecord>&);

const std::vector<IdentityRecord>& catalog_entries() {
  static const std::vector<IdentityRecord> entries = [] {
    std::vector<IdentityRecord> v;
    v.reserve(220);
    register_gamma_limits(v);
    register_log_sum(v);
    register_psi_square(v);
    register_loglog(v);
    register_bern2_series(v);
    register_polylog_entries(v);
    register_gamma_gen(v);
    register_stieltjes_entries(v);
    register_zeta_series(v);
    register_euler_sums(v);
    register_binomial_entries(v);
    register_trig_entries(v);
    return v;
  }();
  return entries;
}

std::vector<const IdentityRecord*> select_entries(
    const std::string& glob, const std::vector<std::string>& tags) {
  std::vector<const IdentityRecord*> out;
  for (const auto& rec : catalog_entries()) {
    if (!glob.empty()) {
      bool hit = fnmatch(glob.c_str(), rec.id.c_str(), 0) == 0;
      for (size_t i = 0; !hit && i < rec.tags.size(); ++i)
        hit = fnmatch(glob.c_str(), rec.tags[i].c_str(), 0) == 0;
      if (!hit) continue;
    }
    bool tag_ok = true;
    for (const auto& want : tags) {
      bool found = false;
      for (const auto& have : rec.tags)
        if (fnmatch(want.c_str(), have.c_str(), 0) == 0) { found = true; break; }
      if (!found) { tag_ok = false; break; }
    }
    if (tag_ok) out.push_back(&rec);
  }
  std::sort(out.begin(), out.end(),
            [](const IdentityRecord* a, const IdentityRecord* b) {
              return a->id < b->id;
            });
  return out;
}

CheckResult run_entry(const IdentityRecord& rec, const RunOptions& opt) {
  CheckResult r;
  r.id = rec.id;
  r.anchor = rec.anchor;
  r.status = rec.status;
  r.tags = rec.tags;
  r.tol_abs = opt.tol_abs_override >= 0.0 ? opt.tol_abs_override : rec.tol_abs;
  r.tol_rel = opt.tol_rel_override >= 0.0 ? opt.tol_rel_override : rec.tol_rel;

  const auto t0 = std::chrono::steady_clock::now();
  Measured a{std::numeric_limits<double>::quiet_NaN(), 0.0};
  Measured b = a;
  std::string failure;
  try {
    a = rec.lhs();
    b = rec.rhs();
  } catch (const std::exception& ex) {
    // an evaluator blowing up is a failed row, never a dead run
    failure = ex.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  r.seconds = std::chrono::duration<double>(t1 - t0).count();

  r.lhs = a.value;
  r.rhs = b.value;
  r.budget_err = a.err + b.err;
  r.abs_err = std::fabs(a.value - b.value);
  r.rel_err = std::fabs(b.value) > 0.0 ? r.abs_err / std::fabs(b.value) : r.abs_err;
  const double allowed =
      std::fmax(r.tol_abs, r.tol_rel * std::fabs(b.value)) + r.budget_err;
  r.pass = std::isfinite(r.abs_err) && r.abs_err <= allowed;
  if (!failure.empty()) {
    r.pass = false;
    r.notes = "evaluator threw: " + failure;
  } else if (rec.notes) {
    r.notes = rec.notes(a.value, b.value);
  }
  return r;
}

std::vector<CheckResult> run_entries(const std::vector<const IdentityRecord*>& sel,
                                     const RunOptions& opt) {
  std::vector<CheckResult> results(sel.size());
  const int threads = opt.threads < 1 ? 1 : opt.threads;
  if (threads == 1 || sel.size() <= 1) {
    for (size_t i = 0; i < sel.size(); ++i) results[i] = run_entry(*sel[i], opt);
    return results;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= sel.size()) break;
      results[i] = run_entry(*sel[i], opt);
    }
  };
  std::vector<std::thread> pool;
  const size_t n = std::min<size_t>(static_cast<size_t>(threads), sel.size());
  pool.reserve(n);
  for (size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

const char* status_name(EntryStatus s) {
  switch (s) {
    case EntryStatus::asserted: return "asserted";
    case EntryStatus::suspect: return "suspect";
    case EntryStatus::exploratory: return "exploratory";
  }
  return "?";
}

} // namespace sumcheck
