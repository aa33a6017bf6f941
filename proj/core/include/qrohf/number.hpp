#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qrohf {

// Absolute tolerance for grade comparisons, tie detection and deduplication.
inline constexpr double kGradeEps = 1e-9;

// Rung exponent q of the orthopair constraint u^q + v^q <= 1.
// One rung is shared by every value in a decision session.
class Rung {
 public:
  explicit Rung(double q);
  double value() const { return q_; }

 private:
  double q_;
};

// A q-rung orthopair hesitant fuzzy number: a set of possible membership
// grades `mu` and a set of possible non-membership grades `nu`, each sorted
// ascending within [0,1], with max(mu)^q + max(nu)^q <= 1.
struct Qrohfn {
  std::vector<double> mu;
  std::vector<double> nu;

  bool same_shape(const Qrohfn& other) const {
    return mu.size() == other.mu.size() && nu.size() == other.nu.size();
  }
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

enum class Ordering { less, equal, greater };

// Indifference element <{2^(-1/q)}, {2^(-1/q)}> with l copies of each grade.
Qrohfn neutral(Rung q, std::size_t l);

// Structural check: non-empty equal-length grade sets, values in [0,1],
// ascending order, rung constraint. Violations are reported, not thrown.
ValidationReport validate(const Qrohfn& x, Rung q);

// Score (1/l)*sum(mu^q) - (1/l)*sum(nu^q), in [-1,1].
double score(const Qrohfn& x, Rung q);

// Accuracy (1/l)*sum(mu^q) + (1/l)*sum(nu^q), in [0,1].
double accuracy(const Qrohfn& x, Rung q);

// Order by score, break ties (within kGradeEps) by accuracy.
Ordering compare(const Qrohfn& a, const Qrohfn& b, Rung q);

// Element-wise hesitancy (1 - mu_s^q - nu_s^q)^(1/q).
std::vector<double> hesitancy(const Qrohfn& x, Rung q);

// (1/2l) * sum_s(|mu1-mu2| + |nu1-nu2| + |pi1-pi2|). Requires equal l.
double hamming_distance(const Qrohfn& a, const Qrohfn& b, Rung q);

// Hesitant arithmetic. Each combines grades over the cartesian product of the
// operand grade sets, deduplicates within kGradeEps and sorts ascending.
Qrohfn add(const Qrohfn& a, const Qrohfn& b, Rung q);
Qrohfn mul(const Qrohfn& a, const Qrohfn& b, Rung q);
Qrohfn scale(double lambda, const Qrohfn& x, Rung q);  // lambda != 0
Qrohfn pow(const Qrohfn& x, double lambda, Rung q);    // lambda != 0

}  // namespace qrohf
