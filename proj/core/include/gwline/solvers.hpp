#ifndef GWLINE_SOLVERS_HPP
#define GWLINE_SOLVERS_HPP

#include <cstdint>
#include <vector>

#include "gwline/objectives.hpp"
#include "gwline/types.hpp"

namespace gwline {

enum class SolveMethod { brute, local, baseline };

/// Relative tolerance for collecting co-maximizers.
inline constexpr double kTieTolerance = 1e-9;

/// Default enumeration ceiling: 11! is about 4e7 permutations.
inline constexpr std::size_t kDefaultBruteForceCap = 11;

struct SolveResult {
  double best_value = 0.0;
  /// Every permutation attaining best_value within kTieTolerance (relative),
  /// in lexicographic order of the mapping.
  std::vector<Permutation> maximizers;
  SolveMethod method = SolveMethod::brute;
  /// Objective evaluations performed (incremental neighbor evaluations count).
  std::uint64_t evaluations = 0;
};

/// Exact maximization of F_sigma over all n! permutations, enumerated in
/// lexicographic order. Refuses n > n_cap. The permutation stream may be
/// split across threads; the result is identical for any thread count
/// (threads = 0 picks automatically, 1 forces serial).
SolveResult solve_brute_force(const PointConfiguration& x, const PointConfiguration& y,
                              const CostParams& cost,
                              std::size_t n_cap = kDefaultBruteForceCap, int threads = 0);

/// Steepest-ascent local search over the pairwise-swap neighborhood.
/// Start 1 is the identity, start 2 the anti-identity, further starts are
/// uniform random permutations from the seeded generator. Deterministic for
/// fixed (restarts, seed). A swap is accepted only when it improves the
/// objective by more than 1e-12.
SolveResult solve_local_search(const PointConfiguration& x, const PointConfiguration& y,
                               const CostParams& cost, std::size_t restarts, std::uint64_t seed);

struct BaselinePair {
  double f_id = 0.0;
  double f_a_id = 0.0;
};

/// F_id and F_a-id, with no maximization.
BaselinePair evaluate_baselines(const PointConfiguration& x, const PointConfiguration& y,
                                const CostParams& cost);

} // namespace gwline

#endif
