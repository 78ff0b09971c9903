#include "gwline/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "parallel.hpp"
#include "rng.hpp"

namespace gwline {

namespace {

constexpr double kSwapImprovementThreshold = 1e-12;
// Below this many permutations a single thread wins; 10! and up get chunked.
constexpr std::uint64_t kParallelPermutationThreshold = 1'000'000;

void require_instance(const PointConfiguration& x, const PointConfiguration& y) {
  if (x.size() != y.size()) {
    throw dimension_error("x has " + std::to_string(x.size()) + " points but y has " +
                          std::to_string(y.size()));
  }
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

double evaluate(const std::vector<double>& cx, const std::vector<double>& cy,
                const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t si = perm[i];
    for (std::size_t k = i + 1; k < n; ++k) {
      sum += cx[i * n + k] * cy[si * n + perm[k]];
    }
  }
  return sum;
}

// Lexicographic unranking via the factorial number system.
std::vector<std::size_t> unrank_permutation(std::uint64_t rank, std::size_t n) {
  std::vector<std::size_t> available(n);
  std::iota(available.begin(), available.end(), std::size_t{0});
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const std::size_t idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    out[i] = available[idx];
    available.erase(available.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

struct Candidates {
  double best = -1.0;
  std::vector<std::pair<double, std::vector<std::size_t>>> kept;

  // Collects with a widened tolerance; the final filter against the global
  // best uses kTieTolerance, so chunk-local collection must not drop anything
  // the merge could still want.
  void offer(double value, const std::vector<std::size_t>& perm) {
    const double slack = 2.0 * kTieTolerance * (1.0 + std::abs(std::max(value, best)));
    if (value > best) {
      best = value;
      std::erase_if(kept, [&](const auto& e) { return best - e.first > slack; });
      kept.emplace_back(value, perm);
    } else if (best - value <= slack) {
      kept.emplace_back(value, perm);
    }
  }
};

std::vector<Permutation> filter_ties(const std::vector<std::pair<double, std::vector<std::size_t>>>& kept,
                                     double best) {
  std::vector<Permutation> out;
  for (const auto& [value, perm] : kept) {
    if (best - value <= kTieTolerance * (1.0 + std::abs(best))) {
      out.push_back(Permutation::from_zero_based(perm));
    }
  }
  return out;
}

} // namespace

SolveResult solve_brute_force(const PointConfiguration& x, const PointConfiguration& y,
                              const CostParams& cost, std::size_t n_cap, int threads) {
  require_instance(x, y);
  const std::size_t n = x.size();
  if (n > n_cap || n > 20) {
    throw validation_error("brute force refuses n = " + std::to_string(n) + " (cap " +
                           std::to_string(std::min<std::size_t>(n_cap, 20)) +
                           "); use solve_local_search for instances of this size");
  }

  const auto cx = cost_matrix(x, cost);
  const auto cy = cost_matrix(y, cost);
  const std::uint64_t total = factorial(n);

  // An explicit worker count is honored as-is; automatic mode (threads = 0)
  // only spawns threads once the stream is long enough to amortize them.
  unsigned workers = 1;
  if (threads > 1) {
    workers = detail::resolve_threads(threads);
  } else if (threads == 0 && total >= kParallelPermutationThreshold) {
    workers = detail::resolve_threads(0);
  }

  std::vector<Candidates> chunks(workers);
  detail::run_chunked(total, workers, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    auto perm = unrank_permutation(begin, n);
    Candidates& local = chunks[chunk];
    for (std::uint64_t r = begin; r < end; ++r) {
      local.offer(evaluate(cx, cy, perm), perm);
      std::next_permutation(perm.begin(), perm.end());
    }
  });

  SolveResult result;
  result.method = SolveMethod::brute;
  result.evaluations = total;
  for (const auto& chunk : chunks) result.best_value = std::max(result.best_value, chunk.best);
  for (const auto& chunk : chunks) {
    auto ties = filter_ties(chunk.kept, result.best_value);
    result.maximizers.insert(result.maximizers.end(), std::make_move_iterator(ties.begin()),
                             std::make_move_iterator(ties.end()));
  }
  return result;
}

SolveResult solve_local_search(const PointConfiguration& x, const PointConfiguration& y,
                               const CostParams& cost, std::size_t restarts, std::uint64_t seed) {
  require_instance(x, y);
  if (restarts < 1) throw validation_error("local search needs at least one start");
  const std::size_t n = x.size();
  const auto cx = cost_matrix(x, cost);
  const auto cy = cost_matrix(y, cost);

  std::uint64_t evaluations = 0;
  std::vector<std::pair<double, std::vector<std::size_t>>> optima;

  for (std::size_t start = 0; start < restarts; ++start) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    if (start == 1) {
      std::reverse(perm.begin(), perm.end());
    } else if (start >= 2) {
      auto rng = detail::Rng::child(seed, start);
      rng.shuffle(perm);
    }

    double value = evaluate(cx, cy, perm);
    ++evaluations;
    for (;;) {
      double best_delta = 0.0;
      std::size_t best_a = 0, best_b = 0;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          double delta = 0.0;
          const std::size_t sa = perm[a], sb = perm[b];
          for (std::size_t k = 0; k < n; ++k) {
            if (k == a || k == b) continue;
            const std::size_t sk = perm[k];
            delta += (cx[a * n + k] - cx[b * n + k]) * (cy[sb * n + sk] - cy[sa * n + sk]);
          }
          ++evaluations;
          if (delta > best_delta) {
            best_delta = delta;
            best_a = a;
            best_b = b;
          }
        }
      }
      if (best_delta <= kSwapImprovementThreshold) break;
      std::swap(perm[best_a], perm[best_b]);
      const double updated = evaluate(cx, cy, perm);
      ++evaluations;
      if (updated <= value) {
        // incremental deltas disagreed with a full pass; keep the old state
        std::swap(perm[best_a], perm[best_b]);
        break;
      }
      value = updated;
    }
    optima.emplace_back(value, perm);
  }

  double best = -1.0;
  for (const auto& [value, perm] : optima) best = std::max(best, value);

  std::vector<std::vector<std::size_t>> tied;
  for (const auto& [value, perm] : optima) {
    if (best - value <= kTieTolerance * (1.0 + std::abs(best))) tied.push_back(perm);
  }
  std::sort(tied.begin(), tied.end());
  tied.erase(std::unique(tied.begin(), tied.end()), tied.end());

  SolveResult result;
  result.method = SolveMethod::local;
  result.best_value = best;
  result.evaluations = evaluations;
  for (auto& perm : tied) result.maximizers.push_back(Permutation::from_zero_based(perm));
  return result;
}

BaselinePair evaluate_baselines(const PointConfiguration& x, const PointConfiguration& y,
                                const CostParams& cost) {
  require_instance(x, y);
  const std::size_t n = x.size();
  return BaselinePair{
      assignment_objective(x, y, Permutation::identity(n), cost),
      assignment_objective(x, y, Permutation::anti_identity(n), cost),
  };
}

} // namespace gwline
