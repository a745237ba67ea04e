#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "sumcheck/catalog.hpp"
#include "sumcheck/constants.hpp"
#include "sumcheck/expint.hpp"
#include "sumcheck/gamma.hpp"
#include "sumcheck/quadrature.hpp"
#include "sumcheck/report.hpp"
#include "sumcheck/routes.hpp"
#include "sumcheck/series.hpp"
#include "sumcheck/zeta.hpp"

namespace {

using sumcheck::RouteValue;

struct NamedRoute {
  const char* name;
  RouteValue (*fn)();
};

RouteValue gamma_definition_em() {
  auto term = [](long n) {
    const double x = static_cast<double>(n);
    return 1.0 / x - std::log1p(1.0 / x);
  };
  auto density = [](double x) { return 1.0 / x - std::log1p(1.0 / x); };
  const sumcheck::SumOutcome s =
      sumcheck::sum_monotone_em(term, density, 1, sumcheck::scaled_terms(4000));
  return {s.value, s.err_estimate};
}

RouteValue gamma_zeta_alternating() {
  auto a = [](long k) {
    return sumcheck::riemann_zeta(static_cast<double>(k)) / static_cast<double>(k);
  };
  const sumcheck::SumOutcome s =
      sumcheck::sum_alternating(a, 2, static_cast<int>(sumcheck::scaled_terms(64)));
  return {s.value, s.err_estimate};
}

RouteValue gamma_digamma() { return {-sumcheck::digamma(1.0), 4e-16}; }

RouteValue gompertz_expint() { return {sumcheck::gompertz_constant(), 2e-15}; }

RouteValue gompertz_quadrature() {
  auto f = [](double x) { return std::exp(-x) / (1.0 + x); };
  const sumcheck::QuadOutcome q = sumcheck::integrate_half_line(f, 0.0, 1.0, 1e-13);
  return {q.value, q.err_estimate};
}

RouteValue zeta2_hurwitz() { return {sumcheck::riemann_zeta(2.0), 4e-16}; }

RouteValue zeta2_em() {
  auto term = [](long n) {
    const double x = static_cast<double>(n);
    return 1.0 / (x * x);
  };
  auto density = [](double x) { return 1.0 / (x * x); };
  const sumcheck::SumOutcome s =
      sumcheck::sum_monotone_em(term, density, 1, sumcheck::scaled_terms(1000));
  return {s.value, s.err_estimate};
}

RouteValue zeta2_closed_form() {
  return {sumcheck::pi * sumcheck::pi / 6.0, 4e-16};
}

RouteValue zeta3_hurwitz() { return {sumcheck::riemann_zeta(3.0), 4e-16}; }

RouteValue zeta3_em() {
  auto term = [](long n) {
    const double x = static_cast<double>(n);
    return 1.0 / (x * x * x);
  };
  auto density = [](double x) { return 1.0 / (x * x * x); };
  const sumcheck::SumOutcome s =
      sumcheck::sum_monotone_em(term, density, 1, sumcheck::scaled_terms(1000));
  return {s.value, s.err_estimate};
}

RouteValue psi_square_series_default() {
  return sumcheck::psi_square_series(sumcheck::scaled_terms(4000), true);
}

const std::vector<std::pair<std::string, std::vector<NamedRoute>>>& constant_table() {
  static const std::vector<std::pair<std::string, std::vector<NamedRoute>>> table = {
      {"gamma",
       {{"definition-em", &gamma_definition_em},
        {"zeta-alternating", &gamma_zeta_alternating},
        {"digamma", &gamma_digamma}}},
      {"gamma1",
       {{"euler-maclaurin", &sumcheck::stieltjes1_em},
        {"richardson", &sumcheck::stieltjes1_richardson},
        {"series-limit", &sumcheck::stieltjes1_series_limit},
        {"quadrature", &sumcheck::stieltjes1_quadrature}}},
      {"S",
       {{"reference-series", &sumcheck::log_sum_reference},
        {"quadrature", &sumcheck::log_sum_quadrature},
        {"alternating", &sumcheck::log_sum_alternating},
        {"zeta-prime", &sumcheck::log_sum_zeta_prime},
        {"log-series-em", &sumcheck::log_sum_em},
        {"gamma-integral", &sumcheck::log_sum_gamma_integral},
        {"harmonic-series", &sumcheck::log_sum_harmonic}}},
      {"gompertz",
       {{"expint", &gompertz_expint}, {"quadrature", &gompertz_quadrature}}},
      {"psi-squared-integral",
       {{"quadrature", &sumcheck::psi_square_quadrature},
        {"identity", &sumcheck::psi_square_identity},
        {"cauchy-series", &psi_square_series_default}}},
      {"zeta2",
       {{"hurwitz", &zeta2_hurwitz},
        {"em-series", &zeta2_em},
        {"closed-form", &zeta2_closed_form}}},
      {"zeta3", {{"hurwitz", &zeta3_hurwitz}, {"em-series", &zeta3_em}}},
  };
  return table;
}

struct FileConfig {
  std::optional<double> budget_scale;
  std::optional<double> tol_abs;
  std::optional<double> tol_rel;
};

// key=value per line; '#' starts a comment; unknown keys are an error so
// typos do not silently run with defaults.
bool load_config(const std::string& path, FileConfig& out, std::string& error) {
  std::ifstream in(path);
  if (!in) {
    error = "cannot open config file: " + path;
    return false;
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      error = path + ":" + std::to_string(lineno) + ": expected key=value";
      return false;
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(value);
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || end != value.c_str() + value.size()) {
      error = path + ":" + std::to_string(lineno) + ": bad number for " + key;
      return false;
    }
    if (key == "budget_scale") {
      out.budget_scale = v;
    } else if (key == "tol_abs") {
      out.tol_abs = v;
    } else if (key == "tol_rel") {
      out.tol_rel = v;
    } else {
      error = path + ":" + std::to_string(lineno) + ": unknown key " + key;
      return false;
    }
  }
  return true;
}

void apply_env_budget_scale() {
  const char* env = std::getenv("SUMCHECK_BUDGET_SCALE");
  if (!env || !*env) return;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0)) {
    std::fprintf(stderr, "warning: ignoring SUMCHECK_BUDGET_SCALE=%s\n", env);
    return;
  }
  sumcheck::set_budget_scale(v);
}

int cmd_verify(const std::string& filter, const std::vector<std::string>& tags,
               double tol_abs, double tol_rel, const std::string& format,
               int parallel) {
  const auto sel = sumcheck::select_entries(filter, tags);
  if (sel.empty()) {
    std::fprintf(stderr, "warning: no catalog entries match '%s'\n",
                 filter.c_str());
    return 0;
  }
  sumcheck::RunOptions opt;
  opt.tol_abs_override = tol_abs;
  opt.tol_rel_override = tol_rel;
  opt.threads = parallel;

  const auto t0 = std::chrono::steady_clock::now();
  const auto results = sumcheck::run_entries(sel, opt);
  const auto t1 = std::chrono::steady_clock::now();

  sumcheck::ReportFormat fmt = sumcheck::ReportFormat::text;
  if (format == "json") fmt = sumcheck::ReportFormat::json;
  if (format == "csv") fmt = sumcheck::ReportFormat::csv;
  const bool color = fmt == sumcheck::ReportFormat::text && isatty(1);
  const std::string report = sumcheck::format_report(results, fmt, color);
  std::fwrite(report.data(), 1, report.size(), stdout);

  int gating = 0;
  for (const auto& r : results)
    if (!r.pass && r.status == sumcheck::EntryStatus::asserted) ++gating;
  std::fprintf(stderr, "%zu entries in %.3f s\n", results.size(),
               std::chrono::duration<double>(t1 - t0).count());
  return gating > 0 ? 1 : 0;
}

int cmd_constant(const std::string& name, const std::string& method, int digits) {
  const std::vector<NamedRoute>* routes = nullptr;
  for (const auto& [cname, r] : constant_table())
    if (cname == name) routes = &r;
  if (!routes) {
    std::fprintf(stderr, "error: unknown constant '%s' (try: ", name.c_str());
    const auto& tab = constant_table();
    for (size_t i = 0; i < tab.size(); ++i)
      std::fprintf(stderr, "%s%s", i ? ", " : "", tab[i].first.c_str());
    std::fprintf(stderr, ")\n");
    return 2;
  }

  if (!method.empty()) {
    for (const auto& r : *routes) {
      if (method == r.name) {
        const RouteValue v = r.fn();
        std::printf("%.*g\n", digits, v.value);
        std::fprintf(stderr, "%s via %s, err estimate %.2g\n", name.c_str(),
                     r.name, v.err);
        return 0;
      }
    }
    std::fprintf(stderr, "error: constant '%s' has no route '%s' (try: ",
                 name.c_str(), method.c_str());
    for (size_t i = 0; i < routes->size(); ++i)
      std::fprintf(stderr, "%s%s", i ? ", " : "", (*routes)[i].name);
    std::fprintf(stderr, ")\n");
    return 2;
  }

  std::vector<RouteValue> values;
  values.reserve(routes->size());
  for (const auto& r : *routes) values.push_back(r.fn());

  std::printf("%s = %.*g\n", name.c_str(), digits, values[0].value);
  std::printf("  %-18s %-26s %s\n", "route", "value", "err estimate");
  for (size_t i = 0; i < routes->size(); ++i)
    std::printf("  %-18s %-26.*g %.2g\n", (*routes)[i].name, digits,
                values[i].value, values[i].err);
  double spread = 0.0;
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j)
      spread = std::fmax(spread, std::fabs(values[i].value - values[j].value));
  std::printf("  max pairwise deviation %.2g\n", spread);
  return 0;
}

int cmd_list(const std::vector<std::string>& tags) {
  const auto sel = sumcheck::select_entries("*", tags);
  size_t idw = 4;
  for (const auto* rec : sel) idw = std::max(idw, rec->id.size());
  for (const auto* rec : sel) {
    std::string tagstr;
    for (const auto& t : rec->tags) {
      if (!tagstr.empty()) tagstr += ",";
      tagstr += t;
    }
    std::printf("%-*s  %-11s  %-20s  %s\n", static_cast<int>(idw),
                rec->id.c_str(), sumcheck::status_name(rec->status),
                tagstr.c_str(), rec->anchor.c_str());
  }
  std::fprintf(stderr, "%zu entries\n", sel.size());
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"evaluates a catalog of special-function identities"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "key=value file; keys: budget_scale, tol_abs, tol_rel");

  auto* verify = app.add_subcommand("verify", "evaluate catalog entries");
  std::string filter = "*";
  std::vector<std::string> verify_tags;
  double tol_abs = -1.0, tol_rel = -1.0;
  std::string format = "text";
  int parallel = 1;
  verify->add_option("--filter", filter, "glob over entry ids and tags");
  verify->add_option("--tags", verify_tags, "require these tags")->delimiter(',');
  verify->add_option("--tol-abs", tol_abs, "override absolute tolerance");
  verify->add_option("--tol-rel", tol_rel, "override relative tolerance");
  verify->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--parallel", parallel, "worker threads")
      ->check(CLI::Range(1, 256));

  auto* constant = app.add_subcommand("constant", "compute a named constant");
  std::string const_name;
  std::string method;
  int digits = 17;
  constant->add_option("name", const_name, "constant name")->required();
  constant->add_option("--method", method, "use a single route");
  constant->add_option("--digits", digits, "significant digits")
      ->check(CLI::Range(1, 17));

  auto* list = app.add_subcommand("list", "list catalog entries");
  std::vector<std::string> list_tags;
  list->add_option("--tags", list_tags, "require these tags")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
    app.exit(e);
    return 2;
  }

  apply_env_budget_scale();

  FileConfig cfg;
  if (!config_path.empty()) {
    std::string error;
    if (!load_config(config_path, cfg, error)) {
      std::fprintf(stderr, "error: %s\n", error.c_str());
      return 2;
    }
    if (cfg.budget_scale) {
      if (*cfg.budget_scale > 0.0) {
        sumcheck::set_budget_scale(*cfg.budget_scale);
      } else {
        std::fprintf(stderr, "error: budget_scale must be positive\n");
        return 2;
      }
    }
  }
  if (tol_abs < 0.0 && cfg.tol_abs) tol_abs = *cfg.tol_abs;
  if (tol_rel < 0.0 && cfg.tol_rel) tol_rel = *cfg.tol_rel;

  try {
    if (verify->parsed())
      return cmd_verify(filter, verify_tags, tol_abs, tol_rel, format, parallel);
    if (constant->parsed()) return cmd_constant(const_name, method, digits);
    if (list->parsed()) return cmd_list(list_tags);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
