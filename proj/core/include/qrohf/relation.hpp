#pragma once

#include <cstddef>
#include <vector>

#include "qrohf/number.hpp"

namespace qrohf {

// An n x n reciprocal matrix of q-ROHFNs. Entry (i,j) states how strongly
// alternative i is preferred to j; reciprocity swaps mu and nu across the
// diagonal, and the diagonal holds the neutral element.
class Qrohfpr {
 public:
  Qrohfpr() = default;
  Qrohfpr(std::size_t n, const Qrohfn& fill);

  std::size_t size() const { return n_; }
  const Qrohfn& at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  Qrohfn& at(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }

  // Grade count of the off-diagonal entries (the session's l).
  std::size_t grade_count() const;

  // Copies `value` into (i,j) and its mu/nu-swapped mirror into (j,i).
  void set_reciprocal(std::size_t i, std::size_t j, Qrohfn value);

 private:
  std::size_t n_ = 0;
  std::vector<Qrohfn> cells_;
};

// Scaffold with neutral diagonal and neutral off-diagonal entries.
Qrohfpr make_neutral_relation(std::size_t n, std::size_t l, Rung q);

// Structural validation: size, per-entry validity, uniform grade count,
// neutral diagonal, reciprocity.
ValidationReport validate(const Qrohfpr& a, Rung q);

// Additive-consistency index: mean absolute q-power imbalance over ordered
// triples i<j<k, in [0,1]. Requires n >= 3.
double consistency_index(const Qrohfpr& a, Rung q);

bool is_acceptably_consistent(const Qrohfpr& a, Rung q, double ci_bar);

// Normalized grade-wise L1 distance over the upper triangle,
// coefficient 1/(2l) * 1/((n-1)(n-2)). Requires n >= 3 and equal shape.
double manhattan_distance(const Qrohfpr& a, const Qrohfpr& b);

// Unnormalized upper-triangle grade-wise L1 deviation.
double deviation(const Qrohfpr& a, const Qrohfpr& b);

enum class Transitivity {
  triangle,
  weak,
  max_min,
  max_max,
  restricted_max_min,
  restricted_max_max,
};

struct TripleIndex {
  std::size_t i, j, k;
  bool operator==(const TripleIndex&) const = default;
};

// Evaluates the selected transitivity property over all ordered triples of
// distinct indices and returns the violating ones (empty => property holds).
std::vector<TripleIndex> transitivity_violations(const Qrohfpr& a, Rung q,
                                                 Transitivity kind);

}  // namespace qrohf
