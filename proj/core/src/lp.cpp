#include "qrohf/lp.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qrohf::lp {

namespace {
constexpr double kPivotTol = 1e-11;
constexpr double kRatioTieTol = 1e-12;
}  // namespace

std::size_t LinearProgram::add_variable(std::string name, double lower, double upper) {
  if (!std::isfinite(lower)) {
    throw std::invalid_argument("variable lower bound must be finite");
  }
  if (!(lower <= upper)) {
    throw std::invalid_argument("variable bounds are inverted: " + name);
  }
  names_.push_back(std::move(name));
  lower_.push_back(lower);
  upper_.push_back(upper);
  objective_.push_back(0.0);
  return names_.size() - 1;
}

void LinearProgram::check_expr(const LinearExpr& expr) const {
  for (const auto& term : expr) {
    if (term.var >= names_.size()) {
      throw std::invalid_argument("constraint references an unregistered variable");
    }
  }
}

void LinearProgram::add_constraint(LinearExpr expr, Relation rel, double rhs) {
  check_expr(expr);
  constraints_.push_back(Constraint{std::move(expr), rel, rhs});
}

void LinearProgram::add_objective_term(std::size_t var, double coef) {
  if (var >= names_.size()) {
    throw std::invalid_argument("objective references an unregistered variable");
  }
  objective_[var] += coef;
}

std::pair<std::size_t, std::size_t> LinearProgram::add_abs_deviation(LinearExpr expr,
                                                                     double constant) {
  check_expr(expr);
  const std::size_t id = names_.size();
  const std::size_t dplus = add_variable("dplus" + std::to_string(id), 0.0, kInfinity);
  const std::size_t dminus = add_variable("dminus" + std::to_string(id), 0.0, kInfinity);
  expr.push_back(LinearTerm{dplus, -1.0});
  expr.push_back(LinearTerm{dminus, 1.0});
  add_constraint(std::move(expr), Relation::equal, -constant);
  add_objective_term(dplus, 1.0);
  add_objective_term(dminus, 1.0);
  return {dplus, dminus};
}

LpSolution LinearProgram::solve() const {
  const std::size_t nv = names_.size();

  // Shift every variable by its lower bound so the tableau works on x >= 0;
  // finite upper bounds become explicit rows.
  struct Row {
    LinearExpr expr;
    Relation rel;
    double rhs;
  };
  std::vector<Row> rows;
  rows.reserve(constraints_.size() + nv);
  for (const auto& c : constraints_) {
    double shift = 0.0;
    for (const auto& t : c.expr) shift += t.coef * lower_[t.var];
    rows.push_back(Row{c.expr, c.rel, c.rhs - shift});
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (upper_[v] < kInfinity) {
      rows.push_back(Row{{LinearTerm{v, 1.0}}, Relation::less_equal,
                         upper_[v] - lower_[v]});
    }
  }

  const std::size_t m = rows.size();
  std::size_t nslack = 0;
  for (const auto& r : rows) {
    if (r.rel != Relation::equal) ++nslack;
  }
  const std::size_t art0 = nv + nslack;   // first artificial column
  const std::size_t ncol = art0 + m;      // one artificial slot per row
  const std::size_t rhs = ncol;           // rhs column index

  std::vector<std::vector<double>> tab(m, std::vector<double>(ncol + 1, 0.0));
  {
    std::size_t si = nv;
    for (std::size_t r = 0; r < m; ++r) {
      for (const auto& t : rows[r].expr) tab[r][t.var] += t.coef;
      if (rows[r].rel == Relation::less_equal) {
        tab[r][si++] = 1.0;
      } else if (rows[r].rel == Relation::greater_equal) {
        tab[r][si++] = -1.0;
      }
      tab[r][rhs] = rows[r].rhs;
      if (tab[r][rhs] < 0.0) {
        for (double& x : tab[r]) x = -x;
      }
    }
  }

  // Start from the slack basis where a row still has a +1 slack after the
  // sign flip; all other rows get an artificial.
  std::vector<std::size_t> basis(m);
  {
    std::size_t si = nv;
    for (std::size_t r = 0; r < m; ++r) {
      std::size_t col = ncol;
      if (rows[r].rel != Relation::equal) {
        if (tab[r][si] == 1.0) col = si;
        ++si;
      }
      if (col == ncol) {
        col = art0 + r;
        tab[r][col] = 1.0;
      }
      basis[r] = col;
    }
  }

  auto pivot = [&](std::size_t pr, std::size_t pc) {
    const double inv = 1.0 / tab[pr][pc];
    for (double& x : tab[pr]) x *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == pr) continue;
      const double factor = tab[r][pc];
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c <= ncol; ++c) tab[r][c] -= factor * tab[pr][c];
    }
    basis[pr] = pc;
  };

  // Bland's rule: entering = lowest-index column with negative reduced cost,
  // leaving = smallest ratio, ties broken by lowest basic variable index.
  // Reduced costs are recomputed from the cost vector every iteration.
  auto run = [&](const std::vector<double>& cost, std::size_t maxcol) -> bool {
    while (true) {
      std::vector<double> z(ncol + 1, 0.0);
      for (std::size_t v = 0; v < cost.size(); ++v) z[v] = cost[v];
      for (std::size_t r = 0; r < m; ++r) {
        const double zb = z[basis[r]];
        if (zb == 0.0) continue;
        for (std::size_t c = 0; c <= ncol; ++c) z[c] -= zb * tab[r][c];
      }
      std::size_t enter = ncol;
      for (std::size_t j = 0; j < maxcol; ++j) {
        if (z[j] < -kReducedCostTol) {
          enter = j;
          break;
        }
      }
      if (enter == ncol) return true;
      std::size_t leave = m;
      double best = kInfinity;
      for (std::size_t r = 0; r < m; ++r) {
        const double a = tab[r][enter];
        if (a > kPivotTol) {
          const double ratio = tab[r][rhs] / a;
          if (ratio < best - kRatioTieTol ||
              (std::abs(ratio - best) <= kRatioTieTol &&
               (leave == m || basis[r] < basis[leave]))) {
            best = ratio;
            leave = r;
          }
        }
      }
      if (leave == m) return false;  // unbounded in the entering direction
      pivot(leave, enter);
    }
  };

  LpSolution solution;

  bool need_phase1 = false;
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] >= art0) need_phase1 = true;
  }
  if (need_phase1) {
    std::vector<double> artcost(ncol, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] >= art0) artcost[basis[r]] = 1.0;
    }
    run(artcost, ncol);
    double infeas = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] >= art0) infeas += tab[r][rhs];
    }
    if (infeas > kFeasibilityTol) {
      solution.status = SolveStatus::infeasible;
      return solution;
    }
    // Pivot leftover zero-level artificials onto structural columns.
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] >= art0) {
        for (std::size_t j = 0; j < art0; ++j) {
          if (std::abs(tab[r][j]) > kPivotTol) {
            pivot(r, j);
            break;
          }
        }
      }
    }
  }

  std::vector<double> cost(nv, 0.0);
  for (std::size_t v = 0; v < nv; ++v) cost[v] = objective_[v];
  if (!run(cost, art0)) {
    solution.status = SolveStatus::unbounded;
    return solution;
  }

  solution.status = SolveStatus::optimal;
  solution.values = lower_;
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < nv) solution.values[basis[r]] += tab[r][rhs];
  }
  double obj = 0.0;
  for (std::size_t v = 0; v < nv; ++v) obj += objective_[v] * solution.values[v];
  solution.objective = obj;
  return solution;
}

std::string LinearProgram::dump_lp() const {
  std::ostringstream out;
  out.precision(17);
  auto write_expr = [&](const LinearExpr& expr) {
    bool first = true;
    for (const auto& t : expr) {
      if (t.coef >= 0.0 && !first) out << " + ";
      if (t.coef < 0.0) out << (first ? "- " : " - ");
      out << std::abs(t.coef) << " " << names_[t.var];
      first = false;
    }
    if (first) out << "0";
  };
  out << "Minimize\n obj: ";
  LinearExpr obj;
  for (std::size_t v = 0; v < names_.size(); ++v) {
    if (objective_[v] != 0.0) obj.push_back(LinearTerm{v, objective_[v]});
  }
  write_expr(obj);
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    out << " c" << (i + 1) << ": ";
    write_expr(constraints_[i].expr);
    switch (constraints_[i].rel) {
      case Relation::less_equal: out << " <= "; break;
      case Relation::equal: out << " = "; break;
      case Relation::greater_equal: out << " >= "; break;
    }
    out << constraints_[i].rhs << "\n";
  }
  out << "Bounds\n";
  for (std::size_t v = 0; v < names_.size(); ++v) {
    if (upper_[v] < kInfinity) {
      out << " " << lower_[v] << " <= " << names_[v] << " <= " << upper_[v] << "\n";
    } else {
      out << " " << names_[v] << " >= " << lower_[v] << "\n";
    }
  }
  out << "End\n";
  return out.str();
}

}  // namespace qrohf::lp
