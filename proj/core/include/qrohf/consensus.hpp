#pragma once

#include <cstddef>
#include <vector>

#include "qrohf/relation.hpp"

namespace qrohf {

// One relation per expert plus nonnegative expert weights summing to 1.
struct ExpertPanel {
  std::vector<Qrohfpr> matrices;
  std::vector<double> weights;

  std::size_t expert_count() const { return matrices.size(); }
};

ValidationReport validate(const ExpertPanel& panel, Rung q);

// Weighted power-mean aggregation: per entry and grade,
// mu = (sum_t lambda_t mu_t^q)^(1/q), likewise for nu. Linear in q-th powers,
// which keeps aggregation of consistent relations consistent.
Qrohfpr aggregate(const ExpertPanel& panel, Rung q);

// Group consensus index of one expert against the group relation: the
// normalized upper-triangle L1 distance on raw grades.
double group_consensus_index(const Qrohfpr& expert, const Qrohfpr& group);

// Same index measured on q-th powers of the grades. Under the q-power blend
// rule one iteration contracts this index by exactly zeta.
double group_consensus_index_qpow(const Qrohfpr& expert, const Qrohfpr& group, Rung q);

// gci <= gci_bar within tolerance (a boundary-exact index is accepted).
bool is_acceptable_consensus(double gci, double gci_bar);

struct ConsensusIteration {
  std::vector<double> gci;          // raw-grade index per expert, after the step
  std::vector<double> gci_qpow;     // q-power index per expert, after the step
  std::vector<bool> repaired;       // experts whose blended relation needed repair
};

struct ConsensusOutcome {
  std::size_t iterations = 0;
  std::vector<Qrohfpr> adjusted;
  Qrohfpr group;
  std::vector<double> gci_per_expert;   // final raw-grade indices
  std::vector<ConsensusIteration> trace;  // entry 0 is the initial state
  bool reached = false;                 // false only on theta_max exhaustion
};

// Iterative consensus reaching: aggregate, measure, and while some expert
// exceeds gci_bar blend every expert toward the group in q-power space with
// factor zeta, repairing any blended relation whose consistency index exceeds
// ci_bar, up to theta_max iterations.
ConsensusOutcome reach_consensus(const ExpertPanel& panel, Rung q, double gci_bar,
                                 double zeta, std::size_t theta_max, double ci_bar);

}  // namespace qrohf
