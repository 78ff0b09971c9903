#ifndef GWLINE_EXPERIMENTS_HPP
#define GWLINE_EXPERIMENTS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gwline/counterexample.hpp"
#include "gwline/solvers.hpp"
#include "gwline/types.hpp"

namespace gwline {

enum class Distribution { uniform, gaussian };

Distribution parse_distribution(std::string_view name);
std::string_view distribution_name(Distribution dist);

/// One epsilon of a sweep over the counterexample family. Rows whose epsilon
/// was rejected carry the reason in `error` instead of aborting the sweep.
struct SweepRow {
  double epsilon = 0.0;
  double f_id = 0.0;
  double f_cyc = 0.0;
  double f_max = 0.0;
  Permutation argmax; // lexicographically first maximizer
  std::string error;

  bool ok() const { return error.empty(); }
};

/// Default grid 2/(n-3) * 2^-k for k = 1..20, in descending order.
std::vector<double> default_epsilon_grid(std::size_t n);

/// Evaluates f_id and f_cyc (closed forms) per grid point and reports the
/// best known permutation value. With brute force (requires n within the
/// enumeration cap) f_max is the exact maximum; otherwise it is the best of
/// id, a-id, cyc and a deterministic fixed-seed local search.
std::vector<SweepRow> sweep_epsilon(std::size_t n, double alpha, const std::vector<double>& grid,
                                    bool with_brute_force);

/// Tally of a Monte Carlo optimality study. A trial counts as a tie when the
/// maximizer set mixes a baseline with a non-baseline permutation; a set
/// consisting of baselines only counts as id-optimal when id is present,
/// a-id-optimal otherwise.
struct ExperimentReport {
  std::size_t n = 0;
  double alpha = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  Distribution distribution = Distribution::uniform;
  std::uint64_t count_id_optimal = 0;
  std::uint64_t count_aid_optimal = 0;
  std::uint64_t count_other_optimal = 0;
  std::uint64_t count_ties = 0;
  double fraction_id_or_aid = 0.0;
};

/// Draws x and y i.i.d. per trial (sorted, exact duplicates redrawn), solves
/// each instance exactly, and classifies the maximizer set. Per-trial RNG
/// substreams are derived from (seed, trial index), so the report is
/// identical for any worker count.
ExperimentReport monte_carlo_study(std::size_t n, double alpha, std::uint64_t trials,
                                   std::uint64_t seed, Distribution distribution);

/// shortest %.17g decimal; round-trips exactly through text.
std::string format_double(double value);

/// Header epsilon,f_id,f_cyc,f_max,argmax; argmax like "2-3-4-5-6-1".
/// Error rows print nan columns and an "invalid-epsilon" marker.
std::string format_sweep_csv(const std::vector<SweepRow>& rows);

/// Flat snake_case JSON object plus a tool_version string.
std::string format_report_json(const ExperimentReport& report);

/// Writes via a temporary file in the same directory plus rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace gwline

#endif
