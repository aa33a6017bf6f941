#include "qrohf/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace qrohf {

namespace {

using nlohmann::ordered_json;

std::vector<double> round6_all(const std::vector<double>& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(round6(x));
  return out;
}

ordered_json cell_json(const Qrohfn& x) {
  return ordered_json{{"mu", round6_all(x.mu)}, {"nu", round6_all(x.nu)}};
}

ordered_json matrix_json(const Qrohfpr& a) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(cell_json(a.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string grades_text(const std::vector<double>& xs) {
  std::ostringstream out;
  out << "{";
  for (std::size_t s = 0; s < xs.size(); ++s) {
    if (s) out << ", ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", xs[s]);
    out << buf;
  }
  out << "}";
  return out.str();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

double round6(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return std::strtod(buf, nullptr);
}

std::string emit_report(const DecisionReport& report, const Session& session,
                        ReportFormat format) {
  const std::vector<std::string>& alt = session.alternatives;
  const std::vector<RankedAlternative>& ranking = report.priority.ranking;

  if (format == ReportFormat::machine) {
    ordered_json doc;
    doc["config"] = {{"q", round6(report.config.q)},
                     {"ci_bar", round6(report.config.ci_bar)},
                     {"gci_bar", round6(report.config.gci_bar)},
                     {"zeta", round6(report.config.zeta)},
                     {"theta_max", report.config.theta_max}};
    doc["alternatives"] = alt;
    ordered_json experts = ordered_json::array();
    for (std::size_t t = 0; t < report.expert_stages.size(); ++t) {
      const ExpertStage& st = report.expert_stages[t];
      experts.push_back(ordered_json{{"id", session.expert_ids[t]},
                                     {"weight", round6(session.panel.weights[t])},
                                     {"ci_before", round6(st.ci_before)},
                                     {"repaired", st.repaired},
                                     {"repair_objective", round6(st.repair_objective)},
                                     {"ci_after", round6(st.ci_after)},
                                     {"matrix", matrix_json(report.consistent[t])}});
    }
    doc["experts"] = std::move(experts);
    // trace entry 0 is the pre-iteration state; the report lists one row
    // per blend iteration, so a no-iteration run has an empty trace
    ordered_json trace = ordered_json::array();
    for (std::size_t step = 1; step < report.consensus.trace.size(); ++step) {
      const auto& row = report.consensus.trace[step];
      std::vector<int> rep(row.repaired.begin(), row.repaired.end());
      trace.push_back(ordered_json{{"gci", round6_all(row.gci)},
                                   {"gci_qpow", round6_all(row.gci_qpow)},
                                   {"repaired", rep}});
    }
    ordered_json adjusted = ordered_json::array();
    for (const auto& m : report.consensus.adjusted) adjusted.push_back(matrix_json(m));
    doc["consensus"] = {{"iterations", report.consensus.iterations},
                        {"reached", report.consensus_reached},
                        {"gci", round6_all(report.consensus.gci_per_expert)},
                        {"trace", std::move(trace)},
                        {"adjusted", std::move(adjusted)}};
    doc["group"] = matrix_json(report.group);
    ordered_json weights = ordered_json::array();
    for (const auto& w : report.priority.weights.weights) weights.push_back(cell_json(w));
    doc["weights"] = std::move(weights);
    doc["priority_objective"] = round6(report.priority.objective);
    ordered_json ranks = ordered_json::array();
    for (const auto& r : ranking) {
      ranks.push_back(ordered_json{{"alternative", alt[r.index]},
                                   {"score", round6(r.score)},
                                   {"accuracy", round6(r.accuracy)}});
    }
    doc["ranking"] = std::move(ranks);
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "Consistency\n";
  for (std::size_t t = 0; t < report.expert_stages.size(); ++t) {
    const ExpertStage& st = report.expert_stages[t];
    out << "  " << session.expert_ids[t] << ": CI = " << fmt(st.ci_before);
    if (st.repaired) {
      out << "  -> repaired, CI = " << fmt(st.ci_after)
          << " (deviation " << fmt(st.repair_objective) << ")";
    }
    out << "\n";
  }
  out << "Consensus\n";
  out << "  iterations: " << report.consensus.iterations
      << (report.consensus_reached ? "" : "  [theta_max exhausted]") << "\n";
  for (std::size_t t = 0; t < report.consensus.gci_per_expert.size(); ++t) {
    out << "  " << session.expert_ids[t]
        << ": GCI = " << fmt(report.consensus.gci_per_expert[t]) << "\n";
  }
  out << "Weights\n";
  for (std::size_t i = 0; i < report.priority.weights.weights.size(); ++i) {
    const Qrohfn& w = report.priority.weights.weights[i];
    out << "  " << alt[i] << ": <" << grades_text(w.mu) << ", " << grades_text(w.nu)
        << ">\n";
  }
  out << "Scores\n";
  for (const auto& r : ranking) {
    out << "  " << alt[r.index] << ": S = " << fmt(r.score)
        << "  D = " << fmt(r.accuracy) << "\n";
  }
  out << "Ranking\n  ";
  for (std::size_t pos = 0; pos < ranking.size(); ++pos) {
    if (pos) out << " > ";
    out << alt[ranking[pos].index];
  }
  out << "\n";
  return out.str();
}

}  // namespace qrohf
