#include "qrohf/consensus.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qrohf/repair.hpp"

namespace qrohf {

namespace {

void require_valid_panel(const ExpertPanel& panel) {
  if (panel.matrices.empty()) {
    throw std::invalid_argument("panel has no experts");
  }
  if (panel.matrices.size() != panel.weights.size()) {
    throw std::invalid_argument("panel weight count differs from expert count");
  }
  const std::size_t n = panel.matrices.front().size();
  const std::size_t l = panel.matrices.front().grade_count();
  double sum = 0.0;
  for (std::size_t t = 0; t < panel.matrices.size(); ++t) {
    if (panel.matrices[t].size() != n || panel.matrices[t].grade_count() != l) {
      throw std::invalid_argument("expert relations have mismatched shapes");
    }
    if (panel.weights[t] < 0.0) {
      throw std::invalid_argument("expert weights must be nonnegative");
    }
    sum += panel.weights[t];
  }
  if (std::abs(sum - 1.0) > kGradeEps) {
    throw std::invalid_argument("expert weights must sum to 1");
  }
}

}  // namespace

ValidationReport validate(const ExpertPanel& panel, Rung q) {
  ValidationReport report;
  if (panel.matrices.empty()) {
    report.issues.push_back("panel has no experts");
    return report;
  }
  if (panel.matrices.size() != panel.weights.size()) {
    report.issues.push_back("panel weight count differs from expert count");
  }
  double sum = 0.0;
  for (double w : panel.weights) {
    if (w < 0.0) report.issues.push_back("negative expert weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kGradeEps) {
    report.issues.push_back("expert weights sum to " + std::to_string(sum) +
                            " instead of 1");
  }
  const std::size_t n = panel.matrices.front().size();
  const std::size_t l = panel.matrices.front().grade_count();
  for (std::size_t t = 0; t < panel.matrices.size(); ++t) {
    if (panel.matrices[t].size() != n || panel.matrices[t].grade_count() != l) {
      report.issues.push_back("expert " + std::to_string(t + 1) +
                              ": relation shape differs from the panel");
      continue;
    }
    ValidationReport inner = validate(panel.matrices[t], q);
    for (const auto& issue : inner.issues) {
      report.issues.push_back("expert " + std::to_string(t + 1) + ": " + issue);
    }
  }
  return report;
}

Qrohfpr aggregate(const ExpertPanel& panel, Rung q) {
  require_valid_panel(panel);
  const std::size_t n = panel.matrices.front().size();
  const std::size_t l = panel.matrices.front().grade_count();
  const double qv = q.value();
  Qrohfpr out = make_neutral_relation(n, l, q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Qrohfn cell;
      cell.mu.resize(l);
      cell.nu.resize(l);
      for (std::size_t s = 0; s < l; ++s) {
        double pu = 0.0;
        double pv = 0.0;
        for (std::size_t t = 0; t < panel.matrices.size(); ++t) {
          pu += panel.weights[t] * std::pow(panel.matrices[t].at(i, j).mu[s], qv);
          pv += panel.weights[t] * std::pow(panel.matrices[t].at(i, j).nu[s], qv);
        }
        cell.mu[s] = std::pow(pu, 1.0 / qv);
        cell.nu[s] = std::pow(pv, 1.0 / qv);
      }
      out.set_reciprocal(i, j, std::move(cell));
    }
  }
  return out;
}

double group_consensus_index(const Qrohfpr& expert, const Qrohfpr& group) {
  return manhattan_distance(expert, group);
}

double group_consensus_index_qpow(const Qrohfpr& expert, const Qrohfpr& group, Rung q) {
  if (expert.size() != group.size() || expert.grade_count() != group.grade_count()) {
    throw std::invalid_argument("relation shapes do not match");
  }
  const std::size_t n = expert.size();
  const std::size_t l = expert.grade_count();
  if (n < 3) {
    throw std::invalid_argument("consensus index coefficient needs n >= 3");
  }
  const double qv = q.value();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t s = 0; s < l; ++s) {
        total += std::abs(std::pow(expert.at(i, j).mu[s], qv) -
                          std::pow(group.at(i, j).mu[s], qv)) +
                 std::abs(std::pow(expert.at(i, j).nu[s], qv) -
                          std::pow(group.at(i, j).nu[s], qv));
      }
    }
  }
  const double nd = static_cast<double>(n);
  return total / (2.0 * static_cast<double>(l) * (nd - 1.0) * (nd - 2.0));
}

bool is_acceptable_consensus(double gci, double gci_bar) {
  if (gci < 0.0 || gci_bar < 0.0 || gci_bar > 1.0) {
    throw std::invalid_argument("consensus threshold must lie in [0,1]");
  }
  return gci <= gci_bar + kGradeEps;
}

ConsensusOutcome reach_consensus(const ExpertPanel& panel, Rung q, double gci_bar,
                                 double zeta, std::size_t theta_max, double ci_bar) {
  require_valid_panel(panel);
  if (!(zeta > 0.0 && zeta < 1.0)) {
    throw std::invalid_argument("blend factor must lie in (0,1)");
  }
  if (theta_max < 1) {
    throw std::invalid_argument("iteration cap must be >= 1");
  }
  const std::size_t m = panel.expert_count();
  const std::size_t n = panel.matrices.front().size();
  const std::size_t l = panel.matrices.front().grade_count();
  const double qv = q.value();

  ConsensusOutcome outcome;
  outcome.adjusted = panel.matrices;

  ExpertPanel current{outcome.adjusted, panel.weights};
  outcome.group = aggregate(current, q);

  auto measure = [&](std::vector<bool> repaired) {
    ConsensusIteration row;
    row.gci.resize(m);
    row.gci_qpow.resize(m);
    row.repaired = std::move(repaired);
    for (std::size_t t = 0; t < m; ++t) {
      row.gci[t] = group_consensus_index(outcome.adjusted[t], outcome.group);
      row.gci_qpow[t] = group_consensus_index_qpow(outcome.adjusted[t], outcome.group, q);
    }
    outcome.trace.push_back(std::move(row));
  };
  auto all_acceptable = [&]() {
    for (double g : outcome.trace.back().gci) {
      if (!is_acceptable_consensus(g, gci_bar)) return false;
    }
    return true;
  };

  measure(std::vector<bool>(m, false));
  while (!all_acceptable() && outcome.iterations < theta_max) {
    std::vector<bool> repaired(m, false);
    for (std::size_t t = 0; t < m; ++t) {
      Qrohfpr& mat = outcome.adjusted[t];
      Qrohfpr blended = make_neutral_relation(n, l, q);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          Qrohfn cell;
          cell.mu.resize(l);
          cell.nu.resize(l);
          for (std::size_t s = 0; s < l; ++s) {
            // Blend in q-power space, where aggregation is linear; this makes
            // the group relation a fixed point of the step and contracts the
            // q-power consensus index by exactly zeta.
            cell.mu[s] = std::pow(zeta * std::pow(mat.at(i, j).mu[s], qv) +
                                      (1.0 - zeta) * std::pow(outcome.group.at(i, j).mu[s], qv),
                                  1.0 / qv);
            cell.nu[s] = std::pow(zeta * std::pow(mat.at(i, j).nu[s], qv) +
                                      (1.0 - zeta) * std::pow(outcome.group.at(i, j).nu[s], qv),
                                  1.0 / qv);
          }
          blended.set_reciprocal(i, j, std::move(cell));
        }
      }
      if (!is_acceptably_consistent(blended, q, ci_bar)) {
        RepairResult fix = repair(blended, q, ci_bar);
        blended = std::move(fix.repaired);
        repaired[t] = true;
      }
      mat = std::move(blended);
    }
    ++outcome.iterations;
    current.matrices = outcome.adjusted;
    outcome.group = aggregate(current, q);
    measure(std::move(repaired));
  }

  outcome.gci_per_expert = outcome.trace.back().gci;
  outcome.reached = all_acceptable();
  return outcome;
}

}  // namespace qrohf
