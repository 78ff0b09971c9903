#include "gwline/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "gwline/objectives.hpp"
#include "gwline/version.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace gwline {

namespace {

constexpr std::size_t kSweepLocalRestarts = 12;
constexpr std::uint64_t kSweepLocalSeed = 0x5eedull;

std::vector<double> draw_sorted_distinct(detail::Rng& rng, std::size_t n, Distribution dist) {
  std::vector<double> values(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = dist == Distribution::uniform ? rng.uniform01() : rng.gaussian();
    }
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) == values.end()) return values;
    // exact float collision: redraw the whole vector
  }
}

} // namespace

Distribution parse_distribution(std::string_view name) {
  if (name == "uniform") return Distribution::uniform;
  if (name == "gaussian") return Distribution::gaussian;
  throw validation_error("unknown distribution '" + std::string(name) +
                         "'; expected uniform or gaussian");
}

std::string_view distribution_name(Distribution dist) {
  return dist == Distribution::uniform ? "uniform" : "gaussian";
}

std::vector<double> default_epsilon_grid(std::size_t n) {
  if (n <= 3) {
    throw validation_error("epsilon grid needs n > 3, got n = " + std::to_string(n));
  }
  const double bound = CounterexampleSpec::epsilon_bound(n);
  std::vector<double> grid;
  grid.reserve(20);
  for (int k = 1; k <= 20; ++k) grid.push_back(std::ldexp(bound, -k));
  return grid;
}

std::vector<SweepRow> sweep_epsilon(std::size_t n, double alpha, const std::vector<double>& grid,
                                    bool with_brute_force) {
  if (with_brute_force && n > kDefaultBruteForceCap) {
    throw validation_error("sweep with brute force requires n <= " +
                           std::to_string(kDefaultBruteForceCap) + ", got n = " +
                           std::to_string(n));
  }
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  const CostParams cost(alpha);
  for (const double eps : grid) {
    SweepRow row;
    row.epsilon = eps;
    try {
      const CounterexampleSpec spec(n, alpha, eps);
      const auto [x, y] = construct_instance(spec);
      row.f_id = f_id_closed_form(n, alpha, eps);
      row.f_cyc = f_cyc_closed_form(n, alpha, eps);
      if (with_brute_force) {
        const SolveResult solved = solve_brute_force(x, y, cost);
        row.f_max = solved.best_value;
        row.argmax = solved.maximizers.front();
      } else {
        // Best known value: named candidates plus a deterministic local search.
        std::vector<Permutation> candidates{Permutation::identity(n),
                                            Permutation::anti_identity(n),
                                            Permutation::cyclic(n)};
        const SolveResult local =
            solve_local_search(x, y, cost, kSweepLocalRestarts, kSweepLocalSeed);
        candidates.insert(candidates.end(), local.maximizers.begin(), local.maximizers.end());
        std::sort(candidates.begin(), candidates.end());
        double best = -1.0;
        for (const auto& sigma : candidates) {
          best = std::max(best, assignment_objective(x, y, sigma, cost));
        }
        row.f_max = best;
        for (const auto& sigma : candidates) {
          if (best - assignment_objective(x, y, sigma, cost) <=
              kTieTolerance * (1.0 + std::abs(best))) {
            row.argmax = sigma;
            break;
          }
        }
      }
    } catch (const validation_error& e) {
      row.f_id = row.f_cyc = row.f_max = std::numeric_limits<double>::quiet_NaN();
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ExperimentReport monte_carlo_study(std::size_t n, double alpha, std::uint64_t trials,
                                   std::uint64_t seed, Distribution distribution) {
  if (n == 0) throw validation_error("monte carlo study needs n >= 1");
  if (n > kDefaultBruteForceCap) {
    throw validation_error("monte carlo study classifies exact maximizers; n must be <= " +
                           std::to_string(kDefaultBruteForceCap));
  }
  if (trials < 1) throw validation_error("monte carlo study needs at least one trial");
  const CostParams cost(alpha);

  struct Tally {
    std::uint64_t id = 0, aid = 0, other = 0, ties = 0;
  };
  const unsigned workers = detail::resolve_threads(0);
  std::vector<Tally> tallies(workers);

  const Permutation id = Permutation::identity(n);
  const Permutation aid = Permutation::anti_identity(n);

  detail::run_chunked(trials, workers, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    Tally& tally = tallies[chunk];
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      auto rng = detail::Rng::child(seed, trial);
      const PointConfiguration x(draw_sorted_distinct(rng, n, distribution));
      const PointConfiguration y(draw_sorted_distinct(rng, n, distribution));
      const SolveResult solved = solve_brute_force(x, y, cost, kDefaultBruteForceCap,
                                                   /*threads=*/1);
      bool has_id = false, has_aid = false, has_other = false;
      for (const auto& sigma : solved.maximizers) {
        if (sigma == id) {
          has_id = true;
        } else if (sigma == aid) {
          has_aid = true;
        } else {
          has_other = true;
        }
      }
      if ((has_id || has_aid) && has_other) {
        ++tally.ties;
      } else if (has_id) {
        ++tally.id;
      } else if (has_aid) {
        ++tally.aid;
      } else {
        ++tally.other;
      }
    }
  });

  ExperimentReport report;
  report.n = n;
  report.alpha = alpha;
  report.trials = trials;
  report.seed = seed;
  report.distribution = distribution;
  for (const auto& tally : tallies) {
    report.count_id_optimal += tally.id;
    report.count_aid_optimal += tally.aid;
    report.count_other_optimal += tally.other;
    report.count_ties += tally.ties;
  }
  report.fraction_id_or_aid =
      static_cast<double>(report.count_id_optimal + report.count_aid_optimal) /
      static_cast<double>(trials);
  return report;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "epsilon,f_id,f_cyc,f_max,argmax\n";
  for (const auto& row : rows) {
    out += format_double(row.epsilon);
    out += ',';
    if (row.ok()) {
      out += format_double(row.f_id);
      out += ',';
      out += format_double(row.f_cyc);
      out += ',';
      out += format_double(row.f_max);
      out += ',';
      out += format_permutation(row.argmax);
    } else {
      out += "nan,nan,nan,invalid-epsilon";
    }
    out += '\n';
  }
  return out;
}

std::string format_report_json(const ExperimentReport& report) {
  std::string out = "{\n";
  const auto field = [&out](std::string_view key, const std::string& value, bool last = false) {
    out += "  \"";
    out += key;
    out += "\": ";
    out += value;
    out += last ? "\n" : ",\n";
  };
  field("n", std::to_string(report.n));
  field("alpha", format_double(report.alpha));
  field("trials", std::to_string(report.trials));
  field("seed", std::to_string(report.seed));
  field("distribution", "\"" + std::string(distribution_name(report.distribution)) + "\"");
  field("count_id_optimal", std::to_string(report.count_id_optimal));
  field("count_aid_optimal", std::to_string(report.count_aid_optimal));
  field("count_other_optimal", std::to_string(report.count_other_optimal));
  field("count_ties", std::to_string(report.count_ties));
  field("fraction_id_or_aid", format_double(report.fraction_id_or_aid));
  field("tool_version", "\"" + std::string(kToolVersion) + "\"", /*last=*/true);
  out += "}\n";
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  const std::filesystem::path dir = path.parent_path();
  if (!dir.empty() && !std::filesystem::exists(dir, ec)) {
    throw io_error("cannot write " + path.string() + ": directory " + dir.string() +
                   " does not exist");
  }
  static std::atomic<unsigned> counter{0};
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(counter.fetch_add(1));
  {
    std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
    if (!stream) throw io_error("cannot open " + tmp.string() + " for writing");
    stream.write(content.data(), static_cast<std::streamsize>(content.size()));
    stream.flush();
    if (!stream) {
      std::filesystem::remove(tmp, ec);
      throw io_error("failed while writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw io_error("cannot rename temporary file onto " + path.string() + ": " + ec.message());
  }
}

} // namespace gwline
