#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qrohf/consensus.hpp"
#include "qrohf/priority.hpp"
#include "qrohf/repair.hpp"

namespace qrohf {

// Session parameters shared by every stage of a group decision.
struct DecisionConfig {
  double q = 3.0;
  double ci_bar = 0.1;
  double gci_bar = 0.1;
  double zeta = 0.5;
  std::size_t theta_max = 50;

  Rung rung() const { return Rung(q); }
};

ValidationReport validate(const DecisionConfig& config);

struct ExpertStage {
  double ci_before = 0.0;
  bool repaired = false;
  double repair_objective = 0.0;
  double ci_after = 0.0;
};

// Everything the group decision produced, including intermediates, so that a
// report consumer can recompute any index from the matrices it carries.
struct DecisionReport {
  DecisionConfig config;
  std::vector<ExpertStage> expert_stages;
  std::vector<Qrohfpr> consistent;   // per-expert relations after step 2
  ConsensusOutcome consensus;
  Qrohfpr group;                     // final aggregation entering weight derivation
  PriorityResult priority;
  bool consensus_reached = false;    // false only when theta_max was exhausted
};

// Runs the whole procedure: per-expert consistency check and repair,
// aggregation, consensus measurement and (if needed) consensus reaching,
// final aggregation, weight derivation, scoring, ranking.
DecisionReport run_pipeline(const ExpertPanel& panel, const DecisionConfig& config);

}  // namespace qrohf
