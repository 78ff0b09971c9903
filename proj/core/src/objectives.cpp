#include "gwline/objectives.hpp"

#include <cmath>
#include <string>

namespace gwline {

namespace {

void require_same_size(const PointConfiguration& x, const PointConfiguration& y,
                       const Permutation& sigma) {
  if (x.size() != y.size()) {
    throw dimension_error("x has " + std::to_string(x.size()) + " points but y has " +
                          std::to_string(y.size()));
  }
  if (sigma.size() != x.size()) {
    throw dimension_error("permutation has size " + std::to_string(sigma.size()) +
                          " but the configurations have " + std::to_string(x.size()) + " points");
  }
}

} // namespace

double power_cost(double s, double t, const CostParams& cost) {
  const double d = std::abs(s - t);
  if (d == 0.0) return 0.0;
  return std::pow(d, cost.alpha());
}

std::vector<double> cost_matrix(const PointConfiguration& x, const CostParams& cost) {
  const std::size_t n = x.size();
  std::vector<double> c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const double v = power_cost(x[i], x[k], cost);
      c[i * n + k] = v;
      c[k * n + i] = v;
    }
  }
  return c;
}

double assignment_objective(const PointConfiguration& x, const PointConfiguration& y,
                            const Permutation& sigma, const CostParams& cost) {
  require_same_size(x, y, sigma);
  const std::size_t n = x.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      sum += power_cost(x[i], x[k], cost) * power_cost(y[sigma[i]], y[sigma[k]], cost);
    }
  }
  return sum;
}

double gm_objective(const PointConfiguration& x, const PointConfiguration& y,
                    const Permutation& sigma, const CostParams& cost) {
  require_same_size(x, y, sigma);
  const std::size_t n = x.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double d = power_cost(x[i], x[k], cost) - power_cost(y[sigma[i]], y[sigma[k]], cost);
      sum += d * d;
    }
  }
  const double dn = static_cast<double>(n);
  return sum / (dn * dn);
}

double rearrangement_residual(const PointConfiguration& x, const PointConfiguration& y,
                              const Permutation& sigma, const CostParams& cost) {
  require_same_size(x, y, sigma);
  const std::size_t n = x.size();
  double sum_sq_x = 0.0;
  double sum_sq_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double cx = power_cost(x[i], x[k], cost);
      const double cy = power_cost(y[i], y[k], cost);
      sum_sq_x += cx * cx;
      sum_sq_y += cy * cy;
    }
  }
  const double f = assignment_objective(x, y, sigma, cost);
  const double dn = static_cast<double>(n);
  return dn * dn * gm_objective(x, y, sigma, cost) - (sum_sq_x - 4.0 * f + sum_sq_y);
}

double gw_plan_objective(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                         const TransportPlan& plan, const CostParams& cost) {
  const std::size_t n = mu.size();
  const std::size_t m = nu.size();
  if (plan.rows() != n || plan.cols() != m) {
    throw dimension_error("plan is " + std::to_string(plan.rows()) + "x" +
                          std::to_string(plan.cols()) + " but the measures have " +
                          std::to_string(n) + " and " + std::to_string(m) + " support points");
  }
  constexpr double kMarginalTol = 1e-10;
  const auto rows = plan.row_sums();
  const auto cols = plan.col_sums();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(rows[i] - mu.weights()[i]) > kMarginalTol) {
      throw validation_error("plan row " + std::to_string(i + 1) + " sums to " +
                             std::to_string(rows[i]) + ", expected weight " +
                             std::to_string(mu.weights()[i]));
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (std::abs(cols[j] - nu.weights()[j]) > kMarginalTol) {
      throw validation_error("plan column " + std::to_string(j + 1) + " sums to " +
                             std::to_string(cols[j]) + ", expected weight " +
                             std::to_string(nu.weights()[j]));
    }
  }

  const auto cx = cost_matrix(mu.support(), cost);
  const auto cy = cost_matrix(nu.support(), cost);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double pij = plan.at(i, j);
      if (pij == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
          const double pkl = plan.at(k, l);
          if (pkl == 0.0) continue;
          const double d = cx[i * n + k] - cy[j * m + l];
          sum += d * d * pij * pkl;
        }
      }
    }
  }
  return sum;
}

TransportPlan plan_from_permutation(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  if (n == 0) throw validation_error("cannot embed an empty permutation as a plan");
  std::vector<double> entries(n * n, 0.0);
  const double mass = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + sigma[i]] = mass;
  return TransportPlan(n, n, std::move(entries));
}

} // namespace gwline
