#pragma once

// Shared helpers for the test suites: fixture loading, seeded random
// generators for valid domain values, and the grid-enumeration oracle used to
// cross-check repair optimality. Everything here is test-only and independent
// of the solver path it checks.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrohf/consensus.hpp"
#include "qrohf/priority.hpp"
#include "qrohf/relation.hpp"
#include "qrohf/session.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
#ifdef QROHF_FIXTURE_DIR
  return std::string(QROHF_FIXTURE_DIR) + "/" + name;
#else
  return "fixtures/" + name;
#endif
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline qrohf::Session load_fixture(const std::string& name) {
  return qrohf::parse_session(read_file(fixture_path(name)));
}

// ---------------------------------------------------------------------------
// Random generators (seeded std::mt19937_64 for reproducible suites).

// Grades are stratified within their band so every pair stays well separated;
// Def-2 set semantics would otherwise merge near-duplicates and unbalance the
// grade counts.
inline qrohf::Qrohfn random_number(std::mt19937_64& rng, qrohf::Rung q, std::size_t l) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double a = 0.05 + 0.95 * unit(rng);
  const double cap = std::pow(std::max(0.0, 1.0 - std::pow(a, q.value())), 1.0 / q.value());
  const double b = cap * (0.05 + 0.95 * unit(rng));
  qrohf::Qrohfn x;
  x.mu.resize(l);
  x.nu.resize(l);
  const double ld = static_cast<double>(l);
  for (std::size_t s = 0; s < l; ++s) {
    const double sd = static_cast<double>(s);
    x.mu[s] = a * (sd + 0.1 + 0.8 * unit(rng)) / ld;
    x.nu[s] = b * (sd + 0.1 + 0.8 * unit(rng)) / ld;
  }
  x.mu.back() = a;
  x.nu.back() = b;
  std::sort(x.mu.begin(), x.mu.end());
  std::sort(x.nu.begin(), x.nu.end());
  return x;
}

inline qrohf::Qrohfpr random_relation(std::mt19937_64& rng, std::size_t n, std::size_t l,
                                      qrohf::Rung q) {
  qrohf::Qrohfpr out = qrohf::make_neutral_relation(n, l, q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.set_reciprocal(i, j, random_number(rng, q, l));
    }
  }
  return out;
}

inline std::vector<double> random_weights(std::mt19937_64& rng, std::size_t m) {
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  std::vector<double> w(m);
  double sum = 0.0;
  for (double& x : w) {
    x = unit(rng);
    sum += x;
  }
  for (double& x : w) x /= sum;
  return w;
}

inline qrohf::ExpertPanel random_panel(std::mt19937_64& rng, std::size_t m, std::size_t n,
                                       std::size_t l, qrohf::Rung q) {
  qrohf::ExpertPanel panel;
  for (std::size_t t = 0; t < m; ++t) {
    panel.matrices.push_back(random_relation(rng, n, l, q));
  }
  panel.weights = random_weights(rng, m);
  return panel;
}

// A normalized weight vector built from one feasible q-power slice scaled by
// an ascending factor per grade position, which preserves the normalization
// inequalities grade-wise and keeps both grade sets ascending.
inline qrohf::WeightVector random_weight_vector(std::mt19937_64& rng, std::size_t n,
                                                std::size_t l, qrohf::Rung q) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double qv = q.value();
  std::vector<double> wu(n), wv(n);
  double usum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    wu[i] = unit(rng) / (2.0 * static_cast<double>(n));
    usum += wu[i];
  }
  const double vcap = (static_cast<double>(n) - 2.0) / (static_cast<double>(n) - 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = usum - wu[i];
    const double hi = std::min(1.0 - wu[i], vcap);
    wv[i] = lo + (hi - lo) * unit(rng);
  }
  std::vector<double> gamma(l);
  for (double& g : gamma) g = 0.2 + 0.8 * unit(rng);
  std::sort(gamma.begin(), gamma.end());

  qrohf::WeightVector out;
  out.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.weights[i].mu.resize(l);
    out.weights[i].nu.resize(l);
    for (std::size_t s = 0; s < l; ++s) {
      out.weights[i].mu[s] = std::pow(gamma[s] * wu[i], 1.0 / qv);
      out.weights[i].nu[s] = std::pow(gamma[s] * wv[i], 1.0 / qv);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Repair optimality oracle for n = 3, l = 1.
//
// Enumerates every q-power assignment on a fixed grid. The six variables
// decompose into three (U,V) pairs whose only coupling is the triple
// imbalance U12 - V12 + U23 - V23 + V13 - U13, so the full 101^6 grid is
// searched exactly as three per-pair sweeps followed by a min-convolution
// over the pair contributions.
inline double repair_grid_oracle(const qrohf::Qrohfpr& a, qrohf::Rung q, double ci_bar,
                                 double step = 0.01) {
  if (a.size() != 3 || a.grade_count() != 1) {
    throw std::invalid_argument("grid oracle handles n = 3, l = 1 only");
  }
  const double qv = q.value();
  const int cells = static_cast<int>(std::lround(1.0 / step));

  auto pair_costs = [&](std::size_t i, std::size_t j, bool u_minus_v) {
    const double cu = std::pow(a.at(i, j).mu[0], qv);
    const double cv = std::pow(a.at(i, j).nu[0], qv);
    std::map<int, double> best;
    for (int ui = 0; ui <= cells; ++ui) {
      const double u = ui * step;
      for (int vi = 0; vi + ui <= cells; ++vi) {  // U + V <= 1 on the grid
        const double v = vi * step;
        const int d = u_minus_v ? ui - vi : vi - ui;
        const double cost = std::abs(u - cu) + std::abs(v - cv);
        auto it = best.find(d);
        if (it == best.end() || cost < it->second) best[d] = cost;
      }
    }
    return best;
  };

  const auto f12 = pair_costs(0, 1, true);
  const auto f23 = pair_costs(1, 2, true);
  const auto f13 = pair_costs(0, 2, false);
  std::map<int, double> conv;
  for (const auto& [d1, c1] : f23) {
    for (const auto& [d2, c2] : f13) {
      auto it = conv.find(d1 + d2);
      if (it == conv.end() || c1 + c2 < it->second) conv[d1 + d2] = c1 + c2;
    }
  }
  // CI for n = 3, l = 1 is |Phi| / 3.
  const double phi_bound = 3.0 * ci_bar;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [d0, c0] : f12) {
    for (const auto& [d, c] : conv) {
      if (std::abs((d0 + d) * step) <= phi_bound + 1e-12) {
        best = std::min(best, c0 + c);
      }
    }
  }
  return best;
}

}  // namespace testsupport
