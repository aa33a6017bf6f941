#pragma once

#include <string>

#include "qrohf/pipeline.hpp"
#include "qrohf/session.hpp"

namespace qrohf {

enum class ReportFormat { machine, human };

// Rounds to 6 significant digits; all reals in machine reports pass through
// this, which keeps the output byte-stable across runs.
double round6(double value);

// Full decision report. Machine format is JSON with deterministic key order;
// human format prints consistency, consensus, weight, score and ranking
// tables, ending with a ranking line like "x1 > x2 > x3 > x4".
std::string emit_report(const DecisionReport& report, const Session& session,
                        ReportFormat format);

}  // namespace qrohf
