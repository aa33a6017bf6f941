#pragma once

#include <cstddef>
#include <vector>

#include "qrohf/relation.hpp"

namespace qrohf {

// Per-alternative hesitant fuzzy priority weights, normalized by
//   sum_{j != i} (w_ju^s)^q <= (w_iv^s)^q   and
//   (w_iu^s)^q + n - 2 >= sum_{j != i} (w_jv^s)^q   for all i, s.
struct WeightVector {
  std::vector<Qrohfn> weights;

  std::size_t alternative_count() const { return weights.size(); }
};

struct RankedAlternative {
  std::size_t index = 0;  // 0-based alternative index
  double score = 0.0;
  double accuracy = 0.0;
};

struct PriorityResult {
  WeightVector weights;
  double objective = 0.0;  // total absolute deviation of the goal program
  std::vector<RankedAlternative> ranking;
};

// Builds the fully consistent relation induced by a weight vector:
// u_ij^s = (0.5 (w_iu^s)^q + 0.5 (w_jv^s)^q)^(1/q) and symmetrically for v.
// The result has consistency index 0.
Qrohfpr consistent_relation_from_weights(const WeightVector& w, Rung q);

// Derives a normalized weight vector from a relation by minimizing the total
// absolute deviation between the q-th powers of the entries and the weight
// combinations of the consistency form above, then ranks by score.
PriorityResult derive_weights(const Qrohfpr& a, Rung q);

// Sort alternatives by descending score; ties by accuracy, then by index.
std::vector<RankedAlternative> rank(const WeightVector& w, Rung q);

}  // namespace qrohf
