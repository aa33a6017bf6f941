#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qrohf/consensus.hpp"
#include "qrohf/report.hpp"
#include "qrohf/repair.hpp"
#include "qrohf/session.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qrohf;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitThresholdWarning = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string input;
  std::string output;
  std::string format = "human";
  std::optional<double> q, ci_bar, gci_bar, zeta;
  std::optional<std::size_t> theta_max;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SessionError("", "cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
  out << text;
}

Session load_session(const Options& opt) {
  Session session = parse_session(read_file(opt.input));
  // Command-line flags win over the values carried in the document.
  if (opt.q) session.config.q = *opt.q;
  if (opt.ci_bar) session.config.ci_bar = *opt.ci_bar;
  if (opt.gci_bar) session.config.gci_bar = *opt.gci_bar;
  if (opt.zeta) session.config.zeta = *opt.zeta;
  if (opt.theta_max) session.config.theta_max = *opt.theta_max;
  ValidationReport cfg = validate(session.config);
  if (!cfg.ok()) throw SessionError("flags", cfg.issues.front());
  if (opt.q) {
    // Diagonals are structural (2^(-1/q)), so a rung override rebases them
    // before the panel is re-validated at the new rung.
    const Rung q = session.config.rung();
    for (Qrohfpr& mat : session.panel.matrices) {
      const Qrohfn mid = neutral(q, mat.grade_count());
      for (std::size_t i = 0; i < mat.size(); ++i) mat.at(i, i) = mid;
    }
    ValidationReport check = validate(session.panel, q);
    if (!check.ok()) {
      throw SessionError("flags.q", "panel is not valid at the overridden rung: " +
                                        check.issues.front());
    }
  }
  return session;
}

bool machine(const Options& opt) { return opt.format == "machine"; }

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
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", xs[s]);
    out << (s ? ", " : "") << buf;
  }
  out << "}";
  return out.str();
}

std::string matrix_text(const Qrohfpr& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      out << "  <" << grades_text(a.at(i, j).mu) << ", " << grades_text(a.at(i, j).nu)
          << ">";
    }
    out << "\n";
  }
  return out.str();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

int cmd_validate(const Options& opt) {
  Session session = load_session(opt);  // throws on any violation
  if (machine(opt)) {
    ordered_json doc{{"valid", true},
                     {"experts", session.expert_ids.size()},
                     {"alternatives", session.alternatives.size()}};
    write_output(opt, doc.dump(2) + "\n");
  } else {
    write_output(opt, "session valid: " + std::to_string(session.expert_ids.size()) +
                          " experts, " + std::to_string(session.alternatives.size()) +
                          " alternatives\n");
  }
  return kExitOk;
}

int cmd_ci(const Options& opt) {
  Session session = load_session(opt);
  const Rung q = session.config.rung();
  ordered_json list = ordered_json::array();
  std::ostringstream text;
  for (std::size_t t = 0; t < session.panel.expert_count(); ++t) {
    const double ci = consistency_index(session.panel.matrices[t], q);
    const bool ok = ci <= session.config.ci_bar + kGradeEps;
    list.push_back(ordered_json{{"id", session.expert_ids[t]},
                                {"ci", round6(ci)},
                                {"acceptable", ok}});
    text << session.expert_ids[t] << ": CI = " << fmt(ci)
         << (ok ? "  (acceptable)" : "  (exceeds threshold)") << "\n";
  }
  if (machine(opt)) {
    ordered_json doc{{"ci_bar", round6(session.config.ci_bar)}, {"experts", list}};
    write_output(opt, doc.dump(2) + "\n");
  } else {
    write_output(opt, text.str());
  }
  return kExitOk;
}

int cmd_repair(const Options& opt) {
  Session session = load_session(opt);
  const Rung q = session.config.rung();
  ordered_json list = ordered_json::array();
  std::ostringstream text;
  for (std::size_t t = 0; t < session.panel.expert_count(); ++t) {
    const Qrohfpr& mat = session.panel.matrices[t];
    const double before = consistency_index(mat, q);
    ordered_json entry{{"id", session.expert_ids[t]}, {"ci_before", round6(before)}};
    text << session.expert_ids[t] << ": CI = " << fmt(before);
    if (before > session.config.ci_bar + kGradeEps) {
      RepairResult fixed = repair(mat, q, session.config.ci_bar);
      entry["repaired"] = true;
      entry["objective"] = round6(fixed.objective);
      entry["ci_after"] = round6(fixed.achieved_ci);
      entry["matrix"] = matrix_json(fixed.repaired);
      text << " -> repaired to CI = " << fmt(fixed.achieved_ci) << " (deviation "
           << fmt(fixed.objective) << ")\n"
           << matrix_text(fixed.repaired);
    } else {
      entry["repaired"] = false;
      entry["matrix"] = matrix_json(mat);
      text << " (already acceptable)\n";
    }
    list.push_back(std::move(entry));
  }
  if (machine(opt)) {
    ordered_json doc{{"ci_bar", round6(session.config.ci_bar)}, {"experts", list}};
    write_output(opt, doc.dump(2) + "\n");
  } else {
    write_output(opt, text.str());
  }
  return kExitOk;
}

int cmd_aggregate(const Options& opt) {
  Session session = load_session(opt);
  const Qrohfpr group = aggregate(session.panel, session.config.rung());
  if (machine(opt)) {
    write_output(opt, ordered_json{{"group", matrix_json(group)}}.dump(2) + "\n");
  } else {
    write_output(opt, "aggregated relation:\n" + matrix_text(group));
  }
  return kExitOk;
}

int cmd_gci(const Options& opt) {
  Session session = load_session(opt);
  const Qrohfpr group = aggregate(session.panel, session.config.rung());
  ordered_json list = ordered_json::array();
  std::ostringstream text;
  for (std::size_t t = 0; t < session.panel.expert_count(); ++t) {
    const double gci = group_consensus_index(session.panel.matrices[t], group);
    const bool ok = is_acceptable_consensus(gci, session.config.gci_bar);
    list.push_back(ordered_json{{"id", session.expert_ids[t]},
                                {"gci", round6(gci)},
                                {"acceptable", ok}});
    text << session.expert_ids[t] << ": GCI = " << fmt(gci)
         << (ok ? "  (acceptable)" : "  (exceeds threshold)") << "\n";
  }
  if (machine(opt)) {
    ordered_json doc{{"gci_bar", round6(session.config.gci_bar)}, {"experts", list}};
    write_output(opt, doc.dump(2) + "\n");
  } else {
    write_output(opt, text.str());
  }
  return kExitOk;
}

int cmd_consensus(const Options& opt) {
  Session session = load_session(opt);
  const DecisionConfig& cfg = session.config;
  ConsensusOutcome outcome = reach_consensus(session.panel, cfg.rung(), cfg.gci_bar,
                                             cfg.zeta, cfg.theta_max, cfg.ci_bar);
  if (machine(opt)) {
    ordered_json trace = ordered_json::array();
    for (std::size_t step = 1; step < outcome.trace.size(); ++step) {
      const auto& row = outcome.trace[step];
      std::vector<int> rep(row.repaired.begin(), row.repaired.end());
      trace.push_back(ordered_json{{"gci", round6_all(row.gci)},
                                   {"gci_qpow", round6_all(row.gci_qpow)},
                                   {"repaired", rep}});
    }
    ordered_json mats = ordered_json::array();
    for (const auto& m : outcome.adjusted) mats.push_back(matrix_json(m));
    ordered_json doc{{"iterations", outcome.iterations},
                     {"reached", outcome.reached},
                     {"gci", round6_all(outcome.gci_per_expert)},
                     {"trace", trace},
                     {"group", matrix_json(outcome.group)},
                     {"adjusted", mats}};
    write_output(opt, doc.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "iterations: " << outcome.iterations
         << (outcome.reached ? "" : "  [theta_max exhausted]") << "\n";
    for (std::size_t t = 0; t < outcome.gci_per_expert.size(); ++t) {
      text << session.expert_ids[t] << ": GCI = " << fmt(outcome.gci_per_expert[t])
           << "\n";
    }
    write_output(opt, text.str());
  }
  return outcome.reached ? kExitOk : kExitThresholdWarning;
}

int cmd_weights(const Options& opt, bool ranking_only) {
  Session session = load_session(opt);
  const Rung q = session.config.rung();
  const Qrohfpr group = aggregate(session.panel, q);
  PriorityResult priority = derive_weights(group, q);
  std::ostringstream text;
  ordered_json doc;
  if (!ranking_only) {
    ordered_json weights = ordered_json::array();
    for (std::size_t i = 0; i < priority.weights.weights.size(); ++i) {
      const Qrohfn& w = priority.weights.weights[i];
      weights.push_back(ordered_json{{"alternative", session.alternatives[i]},
                                     {"mu", round6_all(w.mu)},
                                     {"nu", round6_all(w.nu)}});
      text << session.alternatives[i] << ": <" << grades_text(w.mu) << ", "
           << grades_text(w.nu) << ">\n";
    }
    doc["objective"] = round6(priority.objective);
    doc["weights"] = std::move(weights);
    text << "objective: " << fmt(priority.objective) << "\n";
  }
  ordered_json ranks = ordered_json::array();
  std::ostringstream rank_line;
  for (std::size_t pos = 0; pos < priority.ranking.size(); ++pos) {
    const RankedAlternative& r = priority.ranking[pos];
    ranks.push_back(ordered_json{{"alternative", session.alternatives[r.index]},
                                 {"score", round6(r.score)},
                                 {"accuracy", round6(r.accuracy)}});
    text << session.alternatives[r.index] << ": S = " << fmt(r.score) << "\n";
    rank_line << (pos ? " > " : "") << session.alternatives[r.index];
  }
  doc["ranking"] = std::move(ranks);
  text << "ranking: " << rank_line.str() << "\n";
  write_output(opt, machine(opt) ? doc.dump(2) + "\n" : text.str());
  return kExitOk;
}

int cmd_pipeline(const Options& opt) {
  Session session = load_session(opt);
  DecisionReport report = run_pipeline(session.panel, session.config);
  write_output(opt, emit_report(report, session,
                                machine(opt) ? ReportFormat::machine
                                             : ReportFormat::human));
  return report.consensus_reached ? kExitOk : kExitThresholdWarning;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group decision making with q-rung orthopair hesitant fuzzy "
               "preference relations"};
  app.require_subcommand(1);

  Options opt;
  std::string subcommand;
  for (const char* name : {"validate", "ci", "repair", "aggregate", "gci",
                           "consensus", "weights", "rank", "pipeline"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", opt.input, "session document (JSON)")->required();
    sub->add_option("--q", opt.q, "override the session rung");
    sub->add_option("--ci-bar", opt.ci_bar, "override the consistency threshold");
    sub->add_option("--gci-bar", opt.gci_bar, "override the consensus threshold");
    sub->add_option("--zeta", opt.zeta, "override the consensus blend factor");
    sub->add_option("--theta-max", opt.theta_max, "override the iteration cap");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"machine", "human"}));
    sub->add_option("--output", opt.output, "write output to a file");
    sub->callback([&subcommand, name] { subcommand = name; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (subcommand == "validate") return cmd_validate(opt);
    if (subcommand == "ci") return cmd_ci(opt);
    if (subcommand == "repair") return cmd_repair(opt);
    if (subcommand == "aggregate") return cmd_aggregate(opt);
    if (subcommand == "gci") return cmd_gci(opt);
    if (subcommand == "consensus") return cmd_consensus(opt);
    if (subcommand == "weights") return cmd_weights(opt, false);
    if (subcommand == "rank") return cmd_weights(opt, true);
    if (subcommand == "pipeline") return cmd_pipeline(opt);
    std::cerr << "unknown subcommand\n";
    return kExitInternal;
  } catch (const SessionError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
