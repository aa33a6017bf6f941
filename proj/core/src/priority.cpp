#include "qrohf/priority.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qrohf/lp.hpp"

namespace qrohf {

namespace {

void require_weight_shape(const WeightVector& w) {
  if (w.weights.size() < 2) {
    throw std::invalid_argument("weight vector needs at least 2 alternatives");
  }
  const std::size_t l = w.weights.front().mu.size();
  for (const auto& wi : w.weights) {
    if (wi.mu.size() != l || wi.nu.size() != l) {
      throw std::invalid_argument("weight vector grade counts are not uniform");
    }
  }
}

}  // namespace

Qrohfpr consistent_relation_from_weights(const WeightVector& w, Rung q) {
  require_weight_shape(w);
  const std::size_t n = w.weights.size();
  const std::size_t l = w.weights.front().mu.size();
  const double qv = q.value();
  Qrohfpr out = make_neutral_relation(n, l, q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Qrohfn cell;
      cell.mu.resize(l);
      cell.nu.resize(l);
      for (std::size_t s = 0; s < l; ++s) {
        const double wu_i = std::pow(w.weights[i].mu[s], qv);
        const double wv_i = std::pow(w.weights[i].nu[s], qv);
        const double wu_j = std::pow(w.weights[j].mu[s], qv);
        const double wv_j = std::pow(w.weights[j].nu[s], qv);
        cell.mu[s] = std::pow(0.5 * wu_i + 0.5 * wv_j, 1.0 / qv);
        cell.nu[s] = std::pow(0.5 * wv_i + 0.5 * wu_j, 1.0 / qv);
      }
      out.set_reciprocal(i, j, std::move(cell));
    }
  }
  return out;
}

PriorityResult derive_weights(const Qrohfpr& a, Rung q) {
  const std::size_t n = a.size();
  if (n < 2) {
    throw std::invalid_argument("weight derivation needs n >= 2");
  }
  const std::size_t l = a.grade_count();
  const double qv = q.value();

  lp::LinearProgram program;

  // Variables are the q-th powers of the weight grades. The non-membership
  // block is registered before the membership block; the deviation-minimal
  // face of this program is typically not a single point, and the vertex
  // Bland's rule reaches depends on registration order (see ranking tests).
  std::vector<std::size_t> wv(n * l), wu(n * l);
  auto id = [&](std::size_t i, std::size_t s) { return i * l + s; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < l; ++s) {
      wv[id(i, s)] = program.add_variable(
          "Wv" + std::to_string(i + 1) + "_" + std::to_string(s + 1), 0.0, 1.0);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < l; ++s) {
      wu[id(i, s)] = program.add_variable(
          "Wu" + std::to_string(i + 1) + "_" + std::to_string(s + 1), 0.0, 1.0);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t s = 0; s < l; ++s) {
        program.add_abs_deviation({{wu[id(i, s)], -0.5}, {wv[id(j, s)], -0.5}},
                                  std::pow(a.at(i, j).mu[s], qv));
        program.add_abs_deviation({{wv[id(i, s)], -0.5}, {wu[id(j, s)], -0.5}},
                                  std::pow(a.at(i, j).nu[s], qv));
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < l; ++s) {
      program.add_constraint({{wu[id(i, s)], 1.0}, {wv[id(i, s)], 1.0}},
                             lp::Relation::less_equal, 1.0);
      lp::LinearExpr others_u;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) others_u.push_back({wu[id(j, s)], 1.0});
      }
      others_u.push_back({wv[id(i, s)], -1.0});
      program.add_constraint(std::move(others_u), lp::Relation::less_equal, 0.0);
      lp::LinearExpr others_v;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) others_v.push_back({wv[id(j, s)], 1.0});
      }
      others_v.push_back({wu[id(i, s)], -1.0});
      program.add_constraint(std::move(others_v), lp::Relation::less_equal,
                             static_cast<double>(n) - 2.0);
    }
  }

  const lp::LpSolution solution = program.solve();
  if (solution.status != lp::SolveStatus::optimal) {
    throw std::runtime_error(
        "priority goal program is infeasible: no normalized weight vector exists");
  }

  PriorityResult result;
  result.objective = solution.objective;
  result.weights.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Qrohfn& wi = result.weights.weights[i];
    wi.mu.resize(l);
    wi.nu.resize(l);
    for (std::size_t s = 0; s < l; ++s) {
      wi.mu[s] = std::pow(std::max(0.0, solution.values[wu[id(i, s)]]), 1.0 / qv);
      wi.nu[s] = std::pow(std::max(0.0, solution.values[wv[id(i, s)]]), 1.0 / qv);
    }
  }
  result.ranking = rank(result.weights, q);
  return result;
}

std::vector<RankedAlternative> rank(const WeightVector& w, Rung q) {
  require_weight_shape(w);
  std::vector<RankedAlternative> order(w.weights.size());
  for (std::size_t i = 0; i < w.weights.size(); ++i) {
    order[i] = RankedAlternative{i, score(w.weights[i], q), accuracy(w.weights[i], q)};
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const RankedAlternative& a, const RankedAlternative& b) {
                     if (a.score > b.score + kGradeEps) return true;
                     if (b.score > a.score + kGradeEps) return false;
                     if (a.accuracy > b.accuracy + kGradeEps) return true;
                     if (b.accuracy > a.accuracy + kGradeEps) return false;
                     return a.index < b.index;
                   });
  return order;
}

}  // namespace qrohf
