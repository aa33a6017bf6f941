#include "qrohf/relation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qrohf {

namespace {

void require_same_shape(const Qrohfpr& a, const Qrohfpr& b) {
  if (a.size() != b.size() || a.grade_count() != b.grade_count()) {
    throw std::invalid_argument("relation shapes do not match");
  }
}

std::string cell_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

Qrohfpr::Qrohfpr(std::size_t n, const Qrohfn& fill) : n_(n), cells_(n * n, fill) {}

std::size_t Qrohfpr::grade_count() const {
  if (n_ < 2) return n_ == 0 ? 0 : cells_[0].mu.size();
  return cells_[1].mu.size();  // entry (0,1)
}

void Qrohfpr::set_reciprocal(std::size_t i, std::size_t j, Qrohfn value) {
  at(j, i) = Qrohfn{value.nu, value.mu};
  at(i, j) = std::move(value);
}

Qrohfpr make_neutral_relation(std::size_t n, std::size_t l, Rung q) {
  if (n < 2) {
    throw std::invalid_argument("relation needs at least 2 alternatives");
  }
  return Qrohfpr(n, neutral(q, l));
}

ValidationReport validate(const Qrohfpr& a, Rung q) {
  ValidationReport report;
  const std::size_t n = a.size();
  if (n < 2) {
    report.issues.push_back("relation must have at least 2 alternatives");
    return report;
  }
  const std::size_t l = a.grade_count();
  const Qrohfn ref = neutral(q, l);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Qrohfn& cell = a.at(i, j);
      ValidationReport entry = validate(cell, q);
      for (const auto& issue : entry.issues) {
        report.issues.push_back("entry " + cell_name(i, j) + ": " + issue);
      }
      if (!entry.ok()) continue;
      if (cell.mu.size() != l || cell.nu.size() != l) {
        report.issues.push_back("entry " + cell_name(i, j) +
                                ": grade count differs from the session length");
        continue;
      }
      if (i == j) {
        for (std::size_t s = 0; s < l; ++s) {
          if (std::abs(cell.mu[s] - ref.mu[s]) > kGradeEps ||
              std::abs(cell.nu[s] - ref.nu[s]) > kGradeEps) {
            report.issues.push_back("diagonal entry " + cell_name(i, j) +
                                    " is not the neutral element 2^(-1/q)");
            break;
          }
        }
      } else if (i < j) {
        const Qrohfn& mirror = a.at(j, i);
        if (mirror.mu.size() != l || mirror.nu.size() != l) continue;  // reported above
        for (std::size_t s = 0; s < l; ++s) {
          if (std::abs(cell.mu[s] - mirror.nu[s]) > kGradeEps ||
              std::abs(cell.nu[s] - mirror.mu[s]) > kGradeEps) {
            report.issues.push_back("reciprocity violated between " + cell_name(i, j) +
                                    " and " + cell_name(j, i));
            break;
          }
        }
      }
    }
  }
  return report;
}

double consistency_index(const Qrohfpr& a, Rung q) {
  const std::size_t n = a.size();
  if (n < 3) {
    throw std::invalid_argument("consistency index needs n >= 3");
  }
  const std::size_t l = a.grade_count();
  const double qv = q.value();
  double total = 0.0;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t s = 0; s < l; ++s) {
          const double phi = std::pow(a.at(i, j).mu[s], qv) + std::pow(a.at(j, k).mu[s], qv) +
                             std::pow(a.at(i, k).nu[s], qv) - std::pow(a.at(i, j).nu[s], qv) -
                             std::pow(a.at(j, k).nu[s], qv) - std::pow(a.at(i, k).mu[s], qv);
          total += std::abs(phi);
        }
      }
    }
  }
  const double nd = static_cast<double>(n);
  return total * (1.0 / static_cast<double>(l)) * (2.0 / (nd * (nd - 1.0) * (nd - 2.0)));
}

bool is_acceptably_consistent(const Qrohfpr& a, Rung q, double ci_bar) {
  if (ci_bar < 0.0 || ci_bar > 1.0) {
    throw std::invalid_argument("consistency threshold must lie in [0,1]");
  }
  return consistency_index(a, q) <= ci_bar + kGradeEps;
}

double manhattan_distance(const Qrohfpr& a, const Qrohfpr& b) {
  const std::size_t n = a.size();
  if (n < 3) {
    throw std::invalid_argument("Manhattan distance coefficient needs n >= 3");
  }
  const double nd = static_cast<double>(n);
  const double l = static_cast<double>(a.grade_count());
  return deviation(a, b) / (2.0 * l * (nd - 1.0) * (nd - 2.0));
}

double deviation(const Qrohfpr& a, const Qrohfpr& b) {
  require_same_shape(a, b);
  const std::size_t n = a.size();
  const std::size_t l = a.grade_count();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t s = 0; s < l; ++s) {
        total += std::abs(a.at(i, j).mu[s] - b.at(i, j).mu[s]) +
                 std::abs(a.at(i, j).nu[s] - b.at(i, j).nu[s]);
      }
    }
  }
  return total;
}

std::vector<TripleIndex> transitivity_violations(const Qrohfpr& a, Rung q,
                                                 Transitivity kind) {
  const std::size_t n = a.size();
  if (n < 3) {
    throw std::invalid_argument("transitivity checks need n >= 3");
  }
  const Qrohfn mid = neutral(q, a.grade_count());
  auto geq = [&](const Qrohfn& x, const Qrohfn& y) {
    return compare(x, y, q) != Ordering::less;
  };
  auto min_of = [&](const Qrohfn& x, const Qrohfn& y) -> const Qrohfn& {
    return compare(x, y, q) == Ordering::greater ? y : x;
  };
  auto max_of = [&](const Qrohfn& x, const Qrohfn& y) -> const Qrohfn& {
    return compare(x, y, q) == Ordering::less ? y : x;
  };

  std::vector<TripleIndex> violating;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const Qrohfn& aij = a.at(i, j);
        const Qrohfn& aik = a.at(i, k);
        const Qrohfn& akj = a.at(k, j);
        bool holds = true;
        switch (kind) {
          case Transitivity::triangle:
            holds = geq(add(aik, akj, q), aij);
            break;
          case Transitivity::weak:
            holds = !(geq(aik, mid) && geq(akj, mid)) || geq(aij, mid);
            break;
          case Transitivity::max_min:
            holds = geq(aij, min_of(aik, akj));
            break;
          case Transitivity::max_max:
            holds = geq(aij, max_of(aik, akj));
            break;
          case Transitivity::restricted_max_min:
            holds = !(geq(aik, mid) && geq(akj, mid)) || geq(aij, min_of(aik, akj));
            break;
          case Transitivity::restricted_max_max:
            holds = !(geq(aik, mid) && geq(akj, mid)) || geq(aij, max_of(aik, akj));
            break;
          default:
            throw std::invalid_argument("unknown transitivity selector");
        }
        if (!holds) {
          violating.push_back(TripleIndex{i, j, k});
        }
      }
    }
  }
  return violating;
}

}  // namespace qrohf
