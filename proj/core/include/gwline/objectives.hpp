#ifndef GWLINE_OBJECTIVES_HPP
#define GWLINE_OBJECTIVES_HPP

#include <vector>

#include "gwline/types.hpp"

namespace gwline {

/// c(s,t) = |s-t|^alpha; c(t,t) = 0 for every alpha > 0.
double power_cost(double s, double t, const CostParams& cost);

/// Row-major n x n matrix of pairwise costs c(x_i, x_k).
std::vector<double> cost_matrix(const PointConfiguration& x, const CostParams& cost);

/// Assignment objective
///   F_sigma(x, y) = sum_{i<k} c(x_i, x_k) * c(y_sigma(i), y_sigma(k)),
/// i.e. half of the full symmetric double sum.
double assignment_objective(const PointConfiguration& x, const PointConfiguration& y,
                            const Permutation& sigma, const CostParams& cost);

/// Gromov-Monge map objective
///   (1/n^2) sum_{i,k} | c(x_i, x_k) - c(y_sigma(i), y_sigma(k)) |^2.
double gm_objective(const PointConfiguration& x, const PointConfiguration& y,
                    const Permutation& sigma, const CostParams& cost);

/// Residual of the rearrangement identity
///   n^2 * gm = sum c^2(x_i,x_k) - 4 * F_sigma + sum c^2(y_i,y_k).
/// Zero up to floating-point cancellation; callers should compare against
/// 1e-9 * (1 + magnitude of the participating sums).
double rearrangement_residual(const PointConfiguration& x, const PointConfiguration& y,
                              const Permutation& sigma, const CostParams& cost);

/// Gromov-Wasserstein plan objective for a given coupling:
///   sum_{i,j,k,l} | c(x_i, x_k) - c(y_j, y_l) |^2 pi_{i,j} pi_{k,l}.
/// Plan dimensions must match the supports and its marginals must match the
/// weights within 1e-10, otherwise a validation error is thrown. Evaluation
/// only; no minimization over couplings is performed.
double gw_plan_objective(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                         const TransportPlan& plan, const CostParams& cost);

/// Embed a permutation as a coupling with uniform marginals: entry 1/n at
/// (i, sigma(i)), zero elsewhere. With uniform weights,
/// gw_plan_objective(mu, nu, plan_from_permutation(sigma), cost) equals
/// gm_objective(x, y, sigma, cost).
TransportPlan plan_from_permutation(const Permutation& sigma);

} // namespace gwline

#endif
