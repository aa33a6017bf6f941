#include "qrohf/pipeline.hpp"

#include <stdexcept>
#include <string>

namespace qrohf {

ValidationReport validate(const DecisionConfig& config) {
  ValidationReport report;
  if (!(config.q >= 1.0)) report.issues.push_back("rung q must be >= 1");
  if (config.ci_bar < 0.0 || config.ci_bar > 1.0) {
    report.issues.push_back("ci_bar must lie in [0,1]");
  }
  if (config.gci_bar < 0.0 || config.gci_bar > 1.0) {
    report.issues.push_back("gci_bar must lie in [0,1]");
  }
  if (!(config.zeta > 0.0 && config.zeta < 1.0)) {
    report.issues.push_back("zeta must lie in (0,1)");
  }
  if (config.theta_max < 1) report.issues.push_back("theta_max must be >= 1");
  return report;
}

DecisionReport run_pipeline(const ExpertPanel& panel, const DecisionConfig& config) {
  ValidationReport cfg = validate(config);
  if (!cfg.ok()) {
    throw std::invalid_argument("invalid configuration: " + cfg.issues.front());
  }
  const Rung q = config.rung();
  if (panel.matrices.empty() || panel.matrices.front().size() < 3) {
    throw std::invalid_argument("pipeline needs a panel of relations with n >= 3");
  }

  DecisionReport report;
  report.config = config;

  // Steps 1-2: consistency check, repair violators.
  report.consistent = panel.matrices;
  report.expert_stages.resize(panel.expert_count());
  for (std::size_t t = 0; t < panel.expert_count(); ++t) {
    ExpertStage& stage = report.expert_stages[t];
    stage.ci_before = consistency_index(panel.matrices[t], q);
    if (stage.ci_before > config.ci_bar + kGradeEps) {
      RepairResult fixed = repair(panel.matrices[t], q, config.ci_bar);
      stage.repaired = true;
      stage.repair_objective = fixed.objective;
      stage.ci_after = fixed.achieved_ci;
      report.consistent[t] = std::move(fixed.repaired);
    } else {
      stage.ci_after = stage.ci_before;
    }
  }

  // Steps 3-5: aggregation and consensus reaching on the repaired panel.
  ExpertPanel working{report.consistent, panel.weights};
  report.consensus = reach_consensus(working, q, config.gci_bar, config.zeta,
                                     config.theta_max, config.ci_bar);
  report.consensus_reached = report.consensus.reached;

  // Step 6: final aggregation of the adjusted relations, then weights.
  ExpertPanel adjusted{report.consensus.adjusted, panel.weights};
  report.group = aggregate(adjusted, q);

  // Steps 7-8: weight derivation already computes scores and the ranking.
  report.priority = derive_weights(report.group, q);
  return report;
}

}  // namespace qrohf
