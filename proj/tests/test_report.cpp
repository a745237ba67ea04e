#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumcheck/report.hpp"
#include "sumcheck/catalog.hpp"

#include <json.hpp>

#include <cstdlib>
#include <string>
#include <vector>

using namespace sumcheck;

namespace {

std::vector<CheckResult> sample_results() {
    CheckResult a;
    a.id = "E1.1";
    a.anchor = "first";
    a.status = EntryStatus::asserted;
    a.lhs = 0.1234567890123456789;
    a.rhs = 0.1234567890123456788;
    a.abs_err = 1e-19;
    a.rel_err = 8.1e-19;
    a.budget_err = 2e-16;
    a.tol_abs = 1e-10;
    a.tol_rel = 1e-10;
    a.pass = true;
    a.seconds = 0.0123;
    a.notes = "has a, comma and \"quotes\"";
    a.tags = {"series", "alpha"};

    CheckResult b;
    b.id = "X9.9";
    b.anchor = "second";
    b.status = EntryStatus::suspect;
    b.lhs = 2.0;
    b.rhs = 1.0;
    b.abs_err = 1.0;
    b.rel_err = 1.0;
    b.budget_err = 0.0;
    b.tol_abs = 1e-10;
    b.tol_rel = 1e-10;
    b.pass = false;
    b.seconds = 1.7;
    b.notes = "";
    b.tags = {"suspect"};

    return {a, b};
}

} // namespace

TEST_CASE("json output parses and preserves doubles bit-for-bit") {
    auto results = sample_results();
    std::string out = format_report(results, ReportFormat::json);

    auto doc = nlohmann::json::parse(out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);

    CHECK(doc[0]["id"] == "E1.1");
    CHECK(doc[0]["status"] == "asserted");
    CHECK(doc[0]["pass"] == true);
    CHECK(double(doc[0]["lhs"]) == results[0].lhs);
    CHECK(double(doc[0]["rhs"]) == results[0].rhs);
    CHECK(double(doc[0]["abs_err"]) == results[0].abs_err);
    CHECK(doc[1]["pass"] == false);
    CHECK(doc[1]["status"] == "suspect");

    // Seconds are floored so repeated runs don't differ by timing noise.
    CHECK(double(doc[0]["seconds"]) == 0.0);
    CHECK(double(doc[1]["seconds"]) == 1.0);
}

TEST_CASE("json output is deterministic across calls") {
    auto results = sample_results();
    CHECK(format_report(results, ReportFormat::json) ==
          format_report(results, ReportFormat::json));
}

TEST_CASE("csv output has a header and quotes awkward fields") {
    auto results = sample_results();
    std::string out = format_report(results, ReportFormat::csv);

    auto first_line = out.substr(0, out.find('\n'));
    CHECK(first_line.find("id,") == 0);
    CHECK(first_line.find("abs_err") != std::string::npos);
    CHECK(first_line.find("pass") != std::string::npos);
    // The comma-bearing note must be wrapped and its quotes doubled.
    CHECK(out.find("\"has a, comma and \"\"quotes\"\"\"") != std::string::npos);
    // One header plus one line per result.
    size_t lines = 0;
    for (char c : out)
        if (c == '\n') ++lines;
    CHECK(lines == 3);
}

TEST_CASE("text output summarizes pass counts") {
    auto results = sample_results();
    std::string out = format_report(results, ReportFormat::text, false);
    CHECK(out.find("E1.1") != std::string::npos);
    CHECK(out.find("X9.9") != std::string::npos);
    // No ANSI escapes when color is off.
    CHECK(out.find('\x1b') == std::string::npos);
    std::string colored = format_report(results, ReportFormat::text, true);
    CHECK(colored.find('\x1b') != std::string::npos);
}

TEST_CASE("format_double round-trips through strtod") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0,
                     0.1234567890123456789, 6.283185307179586}) {
        std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(format_double(std::nan("")) == "nan");
}
