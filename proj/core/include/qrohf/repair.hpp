#pragma once

#include "qrohf/relation.hpp"

namespace qrohf {

struct RepairResult {
  Qrohfpr repaired;
  double objective = 0.0;    // total q-power deviation from the input
  double achieved_ci = 0.0;  // consistency index of the repaired relation
  bool changed = false;
};

// Nearest acceptably consistent relation: minimizes the grade-wise L1
// deviation measured on q-th powers of the upper-triangle entries, subject to
// the consistency-index bound, per-grade ordering and the rung constraint.
// The lower triangle and the diagonal are completed by reciprocity.
RepairResult repair(const Qrohfpr& a, Rung q, double ci_bar);

}  // namespace qrohf
