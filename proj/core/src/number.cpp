#include "qrohf/number.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qrohf {

namespace {

double pow_q(double x, double q) { return std::pow(x, q); }

void require_nonempty(const Qrohfn& x) {
  if (x.mu.empty() || x.nu.empty()) {
    throw std::invalid_argument("q-ROHFN has an empty grade set");
  }
}

std::vector<double> dedup_sorted(std::vector<double> grades) {
  std::sort(grades.begin(), grades.end());
  std::vector<double> out;
  out.reserve(grades.size());
  for (double g : grades) {
    if (out.empty() || g - out.back() > kGradeEps) {
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace

Rung::Rung(double q) : q_(q) {
  if (!(q >= 1.0)) {
    throw std::invalid_argument("rung must satisfy q >= 1");
  }
}

Qrohfn neutral(Rung q, std::size_t l) {
  if (l == 0) {
    throw std::invalid_argument("hesitancy length must be >= 1");
  }
  const double g = std::pow(2.0, -1.0 / q.value());
  return Qrohfn{std::vector<double>(l, g), std::vector<double>(l, g)};
}

ValidationReport validate(const Qrohfn& x, Rung q) {
  ValidationReport report;
  if (x.mu.empty() || x.nu.empty()) {
    report.issues.push_back("empty grade set");
    return report;
  }
  if (x.mu.size() != x.nu.size()) {
    report.issues.push_back("membership and non-membership grade counts differ");
  }
  auto check_set = [&](const std::vector<double>& grades, const char* side) {
    for (std::size_t s = 0; s < grades.size(); ++s) {
      if (!(grades[s] >= 0.0 && grades[s] <= 1.0)) {
        report.issues.push_back(std::string(side) + " grade " + std::to_string(s + 1) +
                                " outside [0,1]");
      }
      if (s > 0 && grades[s] < grades[s - 1] - kGradeEps) {
        report.issues.push_back(std::string(side) + " grades not ascending at position " +
                                std::to_string(s + 1));
      }
    }
  };
  check_set(x.mu, "membership");
  check_set(x.nu, "non-membership");
  const double umax = *std::max_element(x.mu.begin(), x.mu.end());
  const double vmax = *std::max_element(x.nu.begin(), x.nu.end());
  if (pow_q(umax, q.value()) + pow_q(vmax, q.value()) > 1.0 + kGradeEps) {
    report.issues.push_back("rung constraint violated: max(mu)^q + max(nu)^q > 1");
  }
  return report;
}

double score(const Qrohfn& x, Rung q) {
  require_nonempty(x);
  double su = 0.0;
  double sv = 0.0;
  for (double u : x.mu) su += pow_q(u, q.value());
  for (double v : x.nu) sv += pow_q(v, q.value());
  return su / static_cast<double>(x.mu.size()) - sv / static_cast<double>(x.nu.size());
}

double accuracy(const Qrohfn& x, Rung q) {
  require_nonempty(x);
  double su = 0.0;
  double sv = 0.0;
  for (double u : x.mu) su += pow_q(u, q.value());
  for (double v : x.nu) sv += pow_q(v, q.value());
  return su / static_cast<double>(x.mu.size()) + sv / static_cast<double>(x.nu.size());
}

Ordering compare(const Qrohfn& a, const Qrohfn& b, Rung q) {
  const double sa = score(a, q);
  const double sb = score(b, q);
  if (sa > sb + kGradeEps) return Ordering::greater;
  if (sb > sa + kGradeEps) return Ordering::less;
  const double da = accuracy(a, q);
  const double db = accuracy(b, q);
  if (da > db + kGradeEps) return Ordering::greater;
  if (db > da + kGradeEps) return Ordering::less;
  return Ordering::equal;
}

std::vector<double> hesitancy(const Qrohfn& x, Rung q) {
  require_nonempty(x);
  if (x.mu.size() != x.nu.size()) {
    throw std::invalid_argument("hesitancy needs equal grade counts");
  }
  std::vector<double> out(x.mu.size());
  for (std::size_t s = 0; s < x.mu.size(); ++s) {
    const double rest = 1.0 - pow_q(x.mu[s], q.value()) - pow_q(x.nu[s], q.value());
    out[s] = std::pow(std::max(rest, 0.0), 1.0 / q.value());
  }
  return out;
}

double hamming_distance(const Qrohfn& a, const Qrohfn& b, Rung q) {
  require_nonempty(a);
  require_nonempty(b);
  if (a.mu.size() != b.mu.size() || a.nu.size() != b.nu.size() ||
      a.mu.size() != a.nu.size()) {
    throw std::invalid_argument("Hamming distance needs equal grade counts");
  }
  const auto pa = hesitancy(a, q);
  const auto pb = hesitancy(b, q);
  double total = 0.0;
  for (std::size_t s = 0; s < a.mu.size(); ++s) {
    total += std::abs(a.mu[s] - b.mu[s]) + std::abs(a.nu[s] - b.nu[s]) +
             std::abs(pa[s] - pb[s]);
  }
  return total / (2.0 * static_cast<double>(a.mu.size()));
}

Qrohfn add(const Qrohfn& a, const Qrohfn& b, Rung q) {
  require_nonempty(a);
  require_nonempty(b);
  const double qv = q.value();
  std::vector<double> mu;
  mu.reserve(a.mu.size() * b.mu.size());
  for (double u1 : a.mu) {
    for (double u2 : b.mu) {
      const double p1 = pow_q(u1, qv);
      const double p2 = pow_q(u2, qv);
      mu.push_back(std::pow(p1 + p2 - p1 * p2, 1.0 / qv));
    }
  }
  std::vector<double> nu;
  nu.reserve(a.nu.size() * b.nu.size());
  for (double v1 : a.nu) {
    for (double v2 : b.nu) {
      nu.push_back(v1 * v2);
    }
  }
  return Qrohfn{dedup_sorted(std::move(mu)), dedup_sorted(std::move(nu))};
}

Qrohfn mul(const Qrohfn& a, const Qrohfn& b, Rung q) {
  require_nonempty(a);
  require_nonempty(b);
  const double qv = q.value();
  std::vector<double> mu;
  mu.reserve(a.mu.size() * b.mu.size());
  for (double u1 : a.mu) {
    for (double u2 : b.mu) {
      mu.push_back(u1 * u2);
    }
  }
  std::vector<double> nu;
  nu.reserve(a.nu.size() * b.nu.size());
  for (double v1 : a.nu) {
    for (double v2 : b.nu) {
      const double p1 = pow_q(v1, qv);
      const double p2 = pow_q(v2, qv);
      nu.push_back(std::pow(p1 + p2 - p1 * p2, 1.0 / qv));
    }
  }
  return Qrohfn{dedup_sorted(std::move(mu)), dedup_sorted(std::move(nu))};
}

Qrohfn scale(double lambda, const Qrohfn& x, Rung q) {
  require_nonempty(x);
  if (lambda == 0.0) {
    throw std::invalid_argument("scale factor must be non-zero");
  }
  const double qv = q.value();
  std::vector<double> mu;
  mu.reserve(x.mu.size());
  for (double u : x.mu) {
    mu.push_back(std::pow(1.0 - std::pow(1.0 - pow_q(u, qv), lambda), 1.0 / qv));
  }
  std::vector<double> nu;
  nu.reserve(x.nu.size());
  for (double v : x.nu) {
    nu.push_back(std::pow(v, lambda));
  }
  return Qrohfn{dedup_sorted(std::move(mu)), dedup_sorted(std::move(nu))};
}

Qrohfn pow(const Qrohfn& x, double lambda, Rung q) {
  require_nonempty(x);
  if (lambda == 0.0) {
    throw std::invalid_argument("exponent must be non-zero");
  }
  const double qv = q.value();
  std::vector<double> mu;
  mu.reserve(x.mu.size());
  for (double u : x.mu) {
    mu.push_back(std::pow(u, lambda));
  }
  std::vector<double> nu;
  nu.reserve(x.nu.size());
  for (double v : x.nu) {
    nu.push_back(std::pow(1.0 - std::pow(1.0 - pow_q(v, qv), lambda), 1.0 / qv));
  }
  return Qrohfn{dedup_sorted(std::move(mu)), dedup_sorted(std::move(nu))};
}

}  // namespace qrohf
