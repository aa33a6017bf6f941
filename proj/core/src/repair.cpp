#include "qrohf/repair.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qrohf/lp.hpp"

namespace qrohf {

namespace {

std::string var_name(const char* base, std::size_t i, std::size_t j, std::size_t s) {
  return std::string(base) + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" +
         std::to_string(s + 1);
}

}  // namespace

RepairResult repair(const Qrohfpr& a, Rung q, double ci_bar) {
  const std::size_t n = a.size();
  if (n < 3) {
    throw std::invalid_argument("repair needs n >= 3");
  }
  if (ci_bar < 0.0 || ci_bar > 1.0) {
    throw std::invalid_argument("consistency threshold must lie in [0,1]");
  }
  const std::size_t l = a.grade_count();
  const double qv = q.value();

  lp::LinearProgram program;

  // Decision variables are the q-th powers of the adjusted upper-triangle
  // grades; x -> x^q is strictly monotone on [0,1], so ordering and the rung
  // constraint stay linear and the zero-deviation point is preserved.
  std::vector<std::size_t> uvar(n * n * l), vvar(n * n * l);
  auto id = [&](std::size_t i, std::size_t j, std::size_t s) {
    return (i * n + j) * l + s;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t s = 0; s < l; ++s) {
        uvar[id(i, j, s)] = program.add_variable(var_name("U", i, j, s), 0.0, 1.0);
      }
      for (std::size_t s = 0; s < l; ++s) {
        vvar[id(i, j, s)] = program.add_variable(var_name("V", i, j, s), 0.0, 1.0);
      }
    }
  }
  // One bound variable per triple/grade dominating |Phi| in the CI sum.
  std::vector<std::size_t> tvar;
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        triples.push_back({i, j, k});
        for (std::size_t s = 0; s < l; ++s) {
          tvar.push_back(program.add_variable(var_name("t", i, j, k) + "_" +
                                                  std::to_string(s + 1),
                                              0.0, lp::kInfinity));
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t s = 0; s + 1 < l; ++s) {
        program.add_constraint({{uvar[id(i, j, s)], 1.0}, {uvar[id(i, j, s + 1)], -1.0}},
                               lp::Relation::less_equal, 0.0);
        program.add_constraint({{vvar[id(i, j, s)], 1.0}, {vvar[id(i, j, s + 1)], -1.0}},
                               lp::Relation::less_equal, 0.0);
      }
      for (std::size_t s = 0; s < l; ++s) {
        program.add_constraint({{uvar[id(i, j, s)], 1.0}, {vvar[id(i, j, s)], 1.0}},
                               lp::Relation::less_equal, 1.0);
      }
    }
  }

  // t_ijk^s >= +-Phi_ijk^s, with Phi written through upper-triangle variables.
  std::size_t t_index = 0;
  for (const auto& [i, j, k] : triples) {
    for (std::size_t s = 0; s < l; ++s) {
      const lp::LinearExpr phi = {
          {uvar[id(i, j, s)], 1.0},  {uvar[id(j, k, s)], 1.0}, {vvar[id(i, k, s)], 1.0},
          {vvar[id(i, j, s)], -1.0}, {vvar[id(j, k, s)], -1.0}, {uvar[id(i, k, s)], -1.0}};
      lp::LinearExpr up = phi;
      up.push_back({tvar[t_index], -1.0});
      program.add_constraint(std::move(up), lp::Relation::less_equal, 0.0);
      lp::LinearExpr down;
      for (const auto& t : phi) down.push_back({t.var, -t.coef});
      down.push_back({tvar[t_index], -1.0});
      program.add_constraint(std::move(down), lp::Relation::less_equal, 0.0);
      ++t_index;
    }
  }
  {
    const double nd = static_cast<double>(n);
    const double coef = (1.0 / static_cast<double>(l)) * 2.0 / (nd * (nd - 1.0) * (nd - 2.0));
    lp::LinearExpr ci_sum;
    for (std::size_t t : tvar) ci_sum.push_back({t, coef});
    program.add_constraint(std::move(ci_sum), lp::Relation::less_equal, ci_bar);
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t s = 0; s < l; ++s) {
        program.add_abs_deviation({{uvar[id(i, j, s)], -1.0}},
                                  std::pow(a.at(i, j).mu[s], qv));
        program.add_abs_deviation({{vvar[id(i, j, s)], -1.0}},
                                  std::pow(a.at(i, j).nu[s], qv));
      }
    }
  }

  const lp::LpSolution solution = program.solve();
  if (solution.status != lp::SolveStatus::optimal) {
    // A fully consistent relation is always feasible for ci_bar >= 0.
    throw std::runtime_error("repair LP did not solve to optimality");
  }

  RepairResult result;
  result.repaired = make_neutral_relation(n, l, q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Qrohfn cell;
      cell.mu.resize(l);
      cell.nu.resize(l);
      for (std::size_t s = 0; s < l; ++s) {
        cell.mu[s] = std::pow(std::max(0.0, solution.values[uvar[id(i, j, s)]]), 1.0 / qv);
        cell.nu[s] = std::pow(std::max(0.0, solution.values[vvar[id(i, j, s)]]), 1.0 / qv);
      }
      result.repaired.set_reciprocal(i, j, std::move(cell));
    }
  }
  result.objective = solution.objective;
  result.achieved_ci = consistency_index(result.repaired, q);
  result.changed = solution.objective > kGradeEps;
  return result;
}

}  // namespace qrohf
