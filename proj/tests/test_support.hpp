// Shared helpers for the unit tests: seeded random instances and an
// independent reference solver used as the oracle for the library's solvers.
#ifndef GWLINE_TEST_SUPPORT_HPP
#define GWLINE_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gwline/types.hpp"

namespace gwtest {

/// Strictly increasing configuration of n points drawn uniformly from
/// [-2, 2]; redraws until adjacent gaps exceed 1e-6 so instances stay
/// numerically benign.
inline gwline::PointConfiguration random_config(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> pts(n);
  for (;;) {
    for (auto& p : pts) p = u(rng);
    std::sort(pts.begin(), pts.end());
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (pts[i + 1] - pts[i] < 1e-6) {
        ok = false;
        break;
      }
    }
    if (ok) return gwline::PointConfiguration(pts);
  }
}

/// Antisymmetric configuration: x_i = -x_{n-i+1} exactly (odd n gets a 0).
inline gwline::PointConfiguration random_antisymmetric_config(std::mt19937_64& rng,
                                                              std::size_t n) {
  std::uniform_real_distribution<double> u(0.1, 2.0);
  const std::size_t half = n / 2;
  std::vector<double> pos(half);
  for (;;) {
    for (auto& p : pos) p = u(rng);
    std::sort(pos.begin(), pos.end());
    bool ok = true;
    for (std::size_t i = 0; i + 1 < half; ++i) {
      if (pos[i + 1] - pos[i] < 1e-6) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<double> pts;
    for (std::size_t i = half; i > 0; --i) pts.push_back(-pos[i - 1]);
    if (n % 2 == 1) pts.push_back(0.0);
    for (std::size_t i = 0; i < half; ++i) pts.push_back(pos[i]);
    return gwline::PointConfiguration(std::move(pts));
  }
}

/// Direct textbook evaluation of F_sigma, written independently of the
/// library (plain loops and std::pow) to serve as an oracle.
inline double reference_objective(const gwline::PointConfiguration& x,
                                  const gwline::PointConfiguration& y,
                                  const std::vector<std::size_t>& sigma, double alpha) {
  const std::size_t n = x.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const double dx = std::abs(x[i] - x[k]);
      const double dy = std::abs(y[sigma[i]] - y[sigma[k]]);
      const double cx = dx == 0.0 ? 0.0 : std::pow(dx, alpha);
      const double cy = dy == 0.0 ? 0.0 : std::pow(dy, alpha);
      total += cx * cy;
    }
  }
  return total;
}

struct ReferenceMaximum {
  double best = 0.0;
  std::vector<std::vector<std::size_t>> argmax; // 0-based mappings, lexicographic
};

/// Exhaustive maximization via std::next_permutation; collects ties with the
/// same relative tolerance the library advertises.
inline ReferenceMaximum reference_maximum(const gwline::PointConfiguration& x,
                                          const gwline::PointConfiguration& y, double alpha,
                                          double tie_tol = 1e-9) {
  const std::size_t n = x.size();
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
  ReferenceMaximum out;
  out.best = -1.0;
  std::vector<std::pair<double, std::vector<std::size_t>>> all;
  do {
    all.emplace_back(reference_objective(x, y, sigma, alpha), sigma);
    out.best = std::max(out.best, all.back().first);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  for (auto& [value, perm] : all) {
    if (std::abs(out.best - value) <= tie_tol * (1.0 + std::abs(out.best))) {
      out.argmax.push_back(perm);
    }
  }
  return out;
}

inline bool close(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

} // namespace gwtest

#endif
