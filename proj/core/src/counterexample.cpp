#include "gwline/counterexample.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "gwline/objectives.hpp"

namespace gwline {

namespace {

void require_family_params(std::size_t n, double alpha) {
  if (n <= 3) {
    throw validation_error("instance family needs n > 3, got n = " + std::to_string(n));
  }
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw validation_error("instance family needs alpha > 0, got " + std::to_string(alpha));
  }
}

void require_epsilon(std::size_t n, double epsilon, bool allow_zero) {
  const double bound = CounterexampleSpec::epsilon_bound(n);
  const bool low_ok = allow_zero ? epsilon >= 0.0 : epsilon > 0.0;
  if (!std::isfinite(epsilon) || !low_ok || epsilon >= bound) {
    std::ostringstream msg;
    msg << "epsilon = " << epsilon << " outside " << (allow_zero ? "[0, " : "(0, ") << bound
        << ") for n = " << n;
    throw validation_error(msg.str());
  }
}

// Midpoint coefficient of the interior x-points: x_i = m(i) * eps.
double interior_coeff(std::size_t i, std::size_t n) {
  return (2.0 * static_cast<double>(i) - static_cast<double>(n) - 1.0) / 2.0;
}

double ipow(double base, double alpha) { return base == 0.0 ? 0.0 : std::pow(base, alpha); }

} // namespace

CounterexampleSpec::CounterexampleSpec(std::size_t n, double alpha, double epsilon)
    : n(n), alpha(alpha), epsilon(epsilon) {
  require_family_params(n, alpha);
  require_epsilon(n, epsilon, /*allow_zero=*/false);
}

double CounterexampleSpec::epsilon_bound(std::size_t n) {
  return 2.0 / (static_cast<double>(n) - 3.0);
}

bool CounterexampleSpec::in_proposition_regime() const {
  return static_cast<double>(n) > 2.0 + std::pow(2.0, alpha);
}

std::pair<PointConfiguration, PointConfiguration> construct_instance(const CounterexampleSpec& spec) {
  const std::size_t n = spec.n;
  const double eps = spec.epsilon;

  std::vector<double> x(n);
  x[0] = -1.0;
  for (std::size_t i = 2; i <= n - 1; ++i) x[i - 1] = interior_coeff(i, n) * eps;
  x[n - 1] = 1.0;

  std::vector<double> y(n);
  y[0] = -1.0;
  y[1] = -1.0 + eps;
  for (std::size_t i = 3; i <= n; ++i) y[i - 1] = (static_cast<double>(i) - 2.0) * eps;

  return {PointConfiguration(std::move(x)), PointConfiguration(std::move(y))};
}

double f_id_closed_form(std::size_t n, double alpha, double epsilon) {
  require_family_params(n, alpha);
  require_epsilon(n, epsilon, /*allow_zero=*/true);
  const double nd = static_cast<double>(n);
  const double eps_a = ipow(epsilon, alpha);
  const double eps_2a = ipow(epsilon, 2.0 * alpha);

  // Interior block {3..n-1} x {3..n-1}.
  double interior = 0.0;
  for (std::size_t i = 3; i + 1 <= n - 1; ++i) {
    for (std::size_t k = i + 1; k <= n - 1; ++k) {
      interior += std::pow(static_cast<double>(k - i), 2.0 * alpha);
    }
  }
  double sum = eps_2a * interior;

  // Pairs (i, n), interior i.
  double with_last = 0.0;
  for (std::size_t i = 3; i <= n - 1; ++i) {
    with_last += ipow(std::abs(interior_coeff(i, n) * epsilon - 1.0), alpha) *
                 std::pow(nd - static_cast<double>(i), alpha);
  }
  sum += eps_a * with_last;

  // Pair (1, 2).
  sum += eps_a * ipow(std::abs(interior_coeff(2, n) * epsilon + 1.0), alpha);

  // Pairs (2, k), interior k.
  double with_second = 0.0;
  for (std::size_t k = 3; k <= n - 1; ++k) {
    with_second += std::pow(static_cast<double>(k) - 2.0, alpha) *
                   ipow(std::abs((static_cast<double>(k) - 3.0) * epsilon + 1.0), alpha);
  }
  sum += eps_a * with_second;

  // Pairs (1, k), interior k.
  for (std::size_t k = 3; k <= n - 1; ++k) {
    sum += ipow(std::abs(interior_coeff(k, n) * epsilon + 1.0), alpha) *
           ipow(std::abs((static_cast<double>(k) - 2.0) * epsilon + 1.0), alpha);
  }

  // Pair (1, n).
  sum += std::pow(2.0, alpha) * ipow(std::abs((nd - 2.0) * epsilon + 1.0), alpha);

  // Pair (2, n).
  sum += ipow(std::abs(interior_coeff(2, n) * epsilon - 1.0), alpha) *
         ipow(std::abs((nd - 3.0) * epsilon + 1.0), alpha);

  return sum;
}

double f_cyc_closed_form(std::size_t n, double alpha, double epsilon) {
  require_family_params(n, alpha);
  require_epsilon(n, epsilon, /*allow_zero=*/true);
  const double eps_a = ipow(epsilon, alpha);
  const double eps_2a = ipow(epsilon, 2.0 * alpha);

  // Interior block {2..n-1} x {2..n-1}; under cyc both gaps are |i-k| * eps.
  double interior = 0.0;
  for (std::size_t i = 2; i + 1 <= n - 1; ++i) {
    for (std::size_t k = i + 1; k <= n - 1; ++k) {
      interior += std::pow(static_cast<double>(k - i), 2.0 * alpha);
    }
  }
  double sum = eps_2a * interior;

  // Pair (1, n): x-gap 2, y_cyc-gap eps.
  sum += std::pow(2.0, alpha) * eps_a;

  // Pairs (1, k), 2 <= k <= n-1.
  for (std::size_t k = 2; k <= n - 1; ++k) {
    sum += ipow(std::abs(interior_coeff(k, n) * epsilon + 1.0), alpha) *
           ipow(std::abs((static_cast<double>(k) - 2.0) * epsilon + 1.0), alpha);
  }

  // Pairs (i, n), 2 <= i <= n-1.
  for (std::size_t i = 2; i <= n - 1; ++i) {
    sum += ipow(std::abs(interior_coeff(i, n) * epsilon - 1.0), alpha) *
           ipow(std::abs((static_cast<double>(i) - 1.0) * epsilon + 1.0), alpha);
  }

  return sum;
}

double degenerate_gap(std::size_t n, double alpha) {
  require_family_params(n, alpha);
  return (static_cast<double>(n) - 2.0) - std::pow(2.0, alpha);
}

WitnessEpsilon find_witness_epsilon(std::size_t n, double alpha) {
  require_family_params(n, alpha);
  constexpr int kMaxHalvings = 60;
  constexpr double kMarginThreshold = 1e-9;
  const double bound = CounterexampleSpec::epsilon_bound(n);
  for (int k = 1; k <= kMaxHalvings; ++k) {
    const double eps = std::ldexp(bound, -k);
    const double margin = f_cyc_closed_form(n, alpha, eps) - f_id_closed_form(n, alpha, eps);
    if (margin > kMarginThreshold) return WitnessEpsilon{eps, margin};
  }
  const double gap = degenerate_gap(n, alpha);
  const bool regime = static_cast<double>(n) > 2.0 + std::pow(2.0, alpha);
  std::ostringstream msg;
  msg << "no witness epsilon with margin > " << kMarginThreshold << " within " << kMaxHalvings
      << " halvings of " << bound << "; degenerate gap (n-2) - 2^alpha = " << gap << " ("
      << (regime ? "grid too coarse despite n > 2 + 2^alpha" : "regime n > 2 + 2^alpha violated")
      << ")";
  throw witness_search_error(msg.str(), gap, regime);
}

VerificationRecord verify_proposition(std::size_t n, double alpha) {
  const WitnessEpsilon witness = find_witness_epsilon(n, alpha);
  return verify_proposition(n, alpha, witness.epsilon);
}

VerificationRecord verify_proposition(std::size_t n, double alpha, double epsilon) {
  const CounterexampleSpec spec(n, alpha, epsilon);
  const auto [x, y] = construct_instance(spec);
  const CostParams cost(alpha);

  VerificationRecord record;
  record.n = n;
  record.alpha = alpha;
  record.epsilon = epsilon;
  record.gap_at_zero = degenerate_gap(n, alpha);
  const BaselinePair baselines = evaluate_baselines(x, y, cost);
  record.f_id = baselines.f_id;
  record.f_a_id = baselines.f_a_id;
  record.f_cyc = assignment_objective(x, y, Permutation::cyclic(n), cost);
  record.f_id_closed = f_id_closed_form(n, alpha, epsilon);
  record.f_cyc_closed = f_cyc_closed_form(n, alpha, epsilon);
  record.margin = record.f_cyc_closed - record.f_id_closed;
  record.solve = solve_brute_force(x, y, cost);

  const double best = record.solve.best_value;
  record.baselines_tie = rel_close(record.f_id, record.f_a_id, 1e-12);
  record.max_exceeds_baselines = best > record.f_id && best > record.f_a_id;
  record.max_at_least_f_cyc =
      best >= record.f_cyc_closed || rel_close(best, record.f_cyc_closed, 1e-9);
  const Permutation cyc = Permutation::cyclic(n);
  for (const auto& sigma : record.solve.maximizers) {
    if (sigma == cyc) {
      record.cyc_is_maximizer = true;
      break;
    }
  }
  return record;
}

} // namespace gwline
