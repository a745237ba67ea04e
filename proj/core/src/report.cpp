#include "sumcheck/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <json.hpp>

namespace sumcheck {

namespace {

using nlohmann::json;

json result_to_json(const CheckResult& r) {
  json row;
  row["id"] = r.id;
  row["anchor"] = r.anchor;
  row["status"] = status_name(r.status);
  row["lhs"] = r.lhs;
  row["rhs"] = r.rhs;
  row["abs_err"] = r.abs_err;
  row["rel_err"] = r.rel_err;
  row["budget_err"] = r.budget_err;
  row["tol_abs"] = r.tol_abs;
  row["tol_rel"] = r.tol_rel;
  row["pass"] = r.pass;
  row["seconds"] = std::floor(r.seconds);
  row["tags"] = r.tags;
  row["notes"] = r.notes;
  return row;
}

std::string csv_escape(const std::string& s) {
  bool needs = false;
  for (char c : s)
    if (c == ',' || c == '"' || c == '\n') { needs = true; break; }
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string join_tags(const std::vector<std::string>& tags) {
  std::string out;
  for (size_t i = 0; i < tags.size(); ++i) {
    if (i) out += ";";
    out += tags[i];
  }
  return out;
}

} // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_report(const std::vector<CheckResult>& results,
                          ReportFormat format, bool color) {
  if (format == ReportFormat::json) {
    json doc = json::array();
    for (const auto& r : results) doc.push_back(result_to_json(r));
    return doc.dump(2) + "\n";
  }

  if (format == ReportFormat::csv) {
    std::string out =
        "id,anchor,status,lhs,rhs,abs_err,rel_err,budget_err,tol_abs,tol_rel,"
        "pass,seconds,tags,notes\n";
    for (const auto& r : results) {
      out += csv_escape(r.id) + "," + csv_escape(r.anchor) + "," +
             status_name(r.status) + "," + format_double(r.lhs) + "," +
             format_double(r.rhs) + "," + format_double(r.abs_err) + "," +
             format_double(r.rel_err) + "," + format_double(r.budget_err) + "," +
             format_double(r.tol_abs) + "," + format_double(r.tol_rel) + "," +
             (r.pass ? "true" : "false") + "," +
             format_double(std::floor(r.seconds)) + "," +
             csv_escape(join_tags(r.tags)) + "," + csv_escape(r.notes) + "\n";
    }
    return out;
  }

  // text
  const char* kGreen = color ? "\x1b[32m" : "";
  const char* kRed = color ? "\x1b[31m" : "";
  const char* kYellow = color ? "\x1b[33m" : "";
  const char* kReset = color ? "\x1b[0m" : "";
  std::string out;
  char line[512];
  for (const auto& r : results) {
    const bool highlight_fail = !r.pass && r.status == EntryStatus::asserted;
    const char* mark = r.pass ? "ok  " : (highlight_fail ? "FAIL" : "warn");
    const char* col = r.pass ? kGreen : (highlight_fail ? kRed : kYellow);
    std::snprintf(line, sizeof(line),
                  "%s%-4s%s %-14s %-11s lhs=% -24.17g rhs=% -24.17g |d|=%-10.3g%s",
                  col, mark, kReset, r.id.c_str(), status_name(r.status), r.lhs,
                  r.rhs, r.abs_err, r.notes.empty() ? "" : "  ");
    out += line;
    out += r.notes;
    out += "\n";
  }
  size_t passed = 0, gated = 0, gated_failed = 0;
  for (const auto& r : results) {
    if (r.pass) ++passed;
    if (r.status == EntryStatus::asserted) {
      ++gated;
      if (!r.pass) ++gated_failed;
    }
  }
  std::snprintf(line, sizeof(line),
                "%zu/%zu passed; %zu gating failure%s among %zu asserted\n",
                passed, results.size(), gated_failed,
                gated_failed == 1 ? "" : "s", gated);
  out += line;
  return out;
}

} // namespace sumcheck
