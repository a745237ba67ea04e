#pragma once

#include <string>
#include <vector>

#include "sumcheck/catalog.hpp"

namespace sumcheck {

enum class ReportFormat { text, json, csv };

// Renders the results. Timing is reported in whole seconds so consecutive
// runs of the same build produce byte-identical output; wall-clock detail
// belongs on stderr, not in the report.
std::string format_report(const std::vector<CheckResult>& results,
                          ReportFormat format, bool color = false);

// Shortest decimal string that round-trips the double.
std::string format_double(double v);

} // namespace sumcheck
