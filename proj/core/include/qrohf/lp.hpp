#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace qrohf::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr double kFeasibilityTol = 1e-7;
inline constexpr double kReducedCostTol = 1e-9;

struct LinearTerm {
  std::size_t var;
  double coef;
};
using LinearExpr = std::vector<LinearTerm>;

enum class Relation { less_equal, equal, greater_equal };
enum class SolveStatus { optimal, infeasible, unbounded };

struct LpSolution {
  SolveStatus status = SolveStatus::infeasible;
  std::vector<double> values;   // per registered variable, empty unless optimal
  double objective = 0.0;
};

// A minimization problem over named bounded variables with linear
// constraints. solve() runs a dense two-phase simplex with Bland's rule, so
// repeated solves of the same program produce bit-identical results.
class LinearProgram {
 public:
  // Lower bound must be finite; upper may be kInfinity.
  std::size_t add_variable(std::string name, double lower, double upper);

  std::size_t variable_count() const { return names_.size(); }
  const std::string& variable_name(std::size_t v) const { return names_[v]; }

  void add_constraint(LinearExpr expr, Relation rel, double rhs);

  void add_objective_term(std::size_t var, double coef);

  // Goal-programming helper: registers d+, d- >= 0, adds the constraint
  // expr + constant - d+ + d- = 0 and puts d+ + d- into the objective, so
  // d+ + d- equals |expr + constant| at any optimum (the complementarity
  // d+ * d- = 0 holds there without an explicit nonconvex constraint).
  std::pair<std::size_t, std::size_t> add_abs_deviation(LinearExpr expr,
                                                        double constant);

  LpSolution solve() const;

  // CPLEX-style LP text, for cross-checking against external solvers.
  std::string dump_lp() const;

 private:
  struct Constraint {
    LinearExpr expr;
    Relation rel;
    double rhs;
  };

  void check_expr(const LinearExpr& expr) const;

  std::vector<std::string> names_;
  std::vector<double> lower_, upper_;
  std::vector<Constraint> constraints_;
  std::vector<double> objective_;  // dense, one coefficient per variable
};

}  // namespace qrohf::lp
