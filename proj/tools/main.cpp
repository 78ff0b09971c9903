// Command-line front end: evaluate objectives, solve instances, verify the
// counterexample family, and run sweeps / Monte Carlo studies.
//
// Exit codes: 0 success or assertion held, 1 validation error,
// 2 assertion failed, 3 output I/O error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gwline/counterexample.hpp"
#include "gwline/experiments.hpp"
#include "gwline/objectives.hpp"
#include "gwline/solvers.hpp"
#include "gwline/types.hpp"
#include "gwline/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitAssertionFailed = 2;
constexpr int kExitIo = 3;

struct PointsFile {
  gwline::PointConfiguration x;
  gwline::PointConfiguration y;
};

PointsFile load_points(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw gwline::validation_error("cannot open points file " + path);
  }
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(stream);
  } catch (const nlohmann::json::exception& e) {
    throw gwline::validation_error("points file " + path + " is not valid JSON: " + e.what());
  }
  std::vector<double> xs, ys;
  try {
    xs = parsed.at("x").get<std::vector<double>>();
    ys = parsed.at("y").get<std::vector<double>>();
  } catch (const nlohmann::json::exception&) {
    throw gwline::validation_error("points file " + path +
                                   " must be an object {\"x\": [...], \"y\": [...]}");
  }
  if (xs.size() != ys.size()) {
    throw gwline::dimension_error("points file " + path + " has " + std::to_string(xs.size()) +
                                  " x-coordinates but " + std::to_string(ys.size()) +
                                  " y-coordinates");
  }
  return PointsFile{gwline::PointConfiguration(std::move(xs)),
                    gwline::PointConfiguration(std::move(ys))};
}

std::string points_json(const gwline::PointConfiguration& x, const gwline::PointConfiguration& y) {
  const auto array = [](const gwline::PointConfiguration& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i > 0) out += ",";
      out += gwline::format_double(p[i]);
    }
    out += "]";
    return out;
  };
  return "{\"x\":" + array(x) + ",\"y\":" + array(y) + "}\n";
}

void print_value(const std::string& name, double value) {
  std::cout << name << " = " << gwline::format_double(value) << "\n";
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t consumed = 0;
      grid.push_back(std::stod(token, &consumed));
      if (consumed != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw gwline::validation_error("cannot parse grid entry '" + token + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return grid;
}

struct EvalArgs {
  std::string points;
  std::string perm;
  double alpha = 1.0;
};

int run_eval(const EvalArgs& args) {
  const PointsFile points = load_points(args.points);
  const gwline::Permutation sigma = gwline::parse_permutation(args.perm);
  const gwline::CostParams cost(args.alpha);
  print_value("F_sigma", gwline::assignment_objective(points.x, points.y, sigma, cost));
  print_value("gm_objective", gwline::gm_objective(points.x, points.y, sigma, cost));
  print_value("rearrangement_residual",
              gwline::rearrangement_residual(points.x, points.y, sigma, cost));
  return kExitOk;
}

struct SolveArgs {
  std::string points;
  double alpha = 1.0;
  std::string method = "brute";
  std::size_t restarts = 20;
  std::uint64_t seed = 42;
};

int run_solve(const SolveArgs& args) {
  const PointsFile points = load_points(args.points);
  const gwline::CostParams cost(args.alpha);
  gwline::SolveResult result;
  if (args.method == "brute") {
    result = gwline::solve_brute_force(points.x, points.y, cost);
  } else if (args.method == "local") {
    result = gwline::solve_local_search(points.x, points.y, cost, args.restarts, args.seed);
  } else {
    throw gwline::validation_error("unknown method '" + args.method + "'; expected brute or local");
  }
  const gwline::BaselinePair baselines = gwline::evaluate_baselines(points.x, points.y, cost);
  std::cout << "method = " << args.method << "\n";
  std::cout << "n = " << points.x.size() << "\n";
  print_value("best_value", result.best_value);
  std::cout << "evaluations = " << result.evaluations << "\n";
  std::cout << "maximizers = " << result.maximizers.size() << "\n";
  for (const auto& sigma : result.maximizers) {
    std::cout << "maximizer = " << gwline::format_permutation(sigma) << "\n";
  }
  print_value("F_id", baselines.f_id);
  print_value("F_a_id", baselines.f_a_id);
  return kExitOk;
}

struct CounterexampleArgs {
  std::size_t n = 6;
  double alpha = 1.0;
  double eps = 0.0;
  bool auto_eps = false;
  std::string emit_points;
};

int run_counterexample(const CounterexampleArgs& args) {
  gwline::VerificationRecord record;
  try {
    record = args.auto_eps ? gwline::verify_proposition(args.n, args.alpha)
                           : gwline::verify_proposition(args.n, args.alpha, args.eps);
  } catch (const gwline::witness_search_error& e) {
    std::cerr << "counterexample: " << e.what() << "\n";
    print_value("degenerate_gap", e.degenerate_gap());
    return kExitAssertionFailed;
  }

  if (!args.emit_points.empty()) {
    const auto [x, y] =
        gwline::construct_instance(gwline::CounterexampleSpec(args.n, args.alpha, record.epsilon));
    gwline::write_file_atomic(args.emit_points, points_json(x, y));
  }

  std::cout << "n = " << record.n << "\n";
  print_value("alpha", record.alpha);
  print_value("epsilon", record.epsilon);
  print_value("degenerate_gap", record.gap_at_zero);
  print_value("margin", record.margin);
  print_value("F_id", record.f_id);
  print_value("F_a_id", record.f_a_id);
  print_value("f_cyc", record.f_cyc);
  print_value("brute_force_max", record.solve.best_value);
  std::cout << "argmax = " << gwline::format_permutation(record.solve.maximizers.front()) << "\n";
  std::cout << "cyc_is_maximizer = " << (record.cyc_is_maximizer ? "true" : "false") << "\n";
  std::cout << "proposition_holds = " << (record.holds() ? "true" : "false") << "\n";
  return record.holds() ? kExitOk : kExitAssertionFailed;
}

struct SweepArgs {
  std::size_t n = 6;
  double alpha = 1.0;
  std::string grid;
  bool no_brute = false;
  std::string out;
};

int run_sweep(const SweepArgs& args) {
  const std::vector<double> grid =
      args.grid.empty() ? gwline::default_epsilon_grid(args.n) : parse_grid(args.grid);
  const bool with_brute = !args.no_brute && args.n <= gwline::kDefaultBruteForceCap;
  const auto rows = gwline::sweep_epsilon(args.n, args.alpha, grid, with_brute);
  std::size_t failed = 0;
  for (const auto& row : rows) {
    if (!row.ok()) ++failed;
  }
  if (failed > 0) {
    std::cerr << "sweep: " << failed << " of " << rows.size() << " grid points were invalid\n";
  }
  const std::string csv = gwline::format_sweep_csv(rows);
  if (args.out.empty()) {
    std::cout << csv;
  } else {
    gwline::write_file_atomic(args.out, csv);
    std::cout << "rows = " << rows.size() << "\n";
  }
  return kExitOk;
}

struct MonteCarloArgs {
  std::size_t n = 5;
  double alpha = 1.0;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 42;
  std::string dist = "uniform";
  std::string out;
};

int run_montecarlo(const MonteCarloArgs& args) {
  const gwline::Distribution distribution = gwline::parse_distribution(args.dist);
  const gwline::ExperimentReport report =
      gwline::monte_carlo_study(args.n, args.alpha, args.trials, args.seed, distribution);
  const std::string json = gwline::format_report_json(report);
  if (args.out.empty()) {
    std::cout << json;
  } else {
    gwline::write_file_atomic(args.out, json);
    print_value("fraction_id_or_aid", report.fraction_id_or_aid);
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Assignment-problem toolkit for Gromov-Wasserstein on the line"};
  app.set_version_flag("--version", std::string(gwline::kToolVersion));
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate objectives for a fixed permutation");
  eval->add_option("--points", eval_args.points, "JSON file {\"x\": [...], \"y\": [...]}")
      ->required();
  eval->add_option("--perm", eval_args.perm, "1-based permutation, e.g. 3,1,2")->required();
  eval->add_option("--alpha", eval_args.alpha, "cost exponent");

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Maximize the assignment objective");
  solve->add_option("--points", solve_args.points, "JSON file {\"x\": [...], \"y\": [...]}")
      ->required();
  solve->add_option("--alpha", solve_args.alpha, "cost exponent");
  solve->add_option("--method", solve_args.method, "brute or local");
  solve->add_option("--restarts", solve_args.restarts, "local search starts");
  solve->add_option("--seed", solve_args.seed, "local search seed");

  CounterexampleArgs ce_args;
  CLI::App* ce = app.add_subcommand("counterexample",
                                    "Verify that id and a-id are beaten on the witness family");
  ce->add_option("--n", ce_args.n, "number of points (> 3)")->required();
  ce->add_option("--alpha", ce_args.alpha, "cost exponent");
  CLI::Option* eps_opt = ce->add_option("--eps", ce_args.eps, "epsilon in (0, 2/(n-3))");
  CLI::Option* auto_opt =
      ce->add_flag("--auto-eps", ce_args.auto_eps, "search the witness epsilon automatically");
  eps_opt->excludes(auto_opt);
  ce->add_option("--emit-points", ce_args.emit_points, "write the instance as a points file");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Tabulate f_id, f_cyc and the maximum over epsilon");
  sweep->add_option("--n", sweep_args.n, "number of points (> 3)")->required();
  sweep->add_option("--alpha", sweep_args.alpha, "cost exponent");
  sweep->add_option("--grid", sweep_args.grid, "comma-separated epsilon values (default geometric)");
  sweep->add_flag("--no-brute", sweep_args.no_brute, "skip exact maximization");
  sweep->add_option("--out", sweep_args.out, "CSV output path (stdout when omitted)");

  MonteCarloArgs mc_args;
  CLI::App* mc = app.add_subcommand("montecarlo", "Estimate how often id or a-id is optimal");
  mc->add_option("--n", mc_args.n, "number of points")->required();
  mc->add_option("--alpha", mc_args.alpha, "cost exponent");
  mc->add_option("--trials", mc_args.trials, "number of trials");
  mc->add_option("--seed", mc_args.seed, "study seed");
  mc->add_option("--dist", mc_args.dist, "uniform or gaussian");
  mc->add_option("--out", mc_args.out, "JSON output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (eval->parsed()) return run_eval(eval_args);
    if (solve->parsed()) return run_solve(solve_args);
    if (ce->parsed()) {
      if (!ce_args.auto_eps && eps_opt->count() == 0) {
        std::cerr << "counterexample: provide --eps or --auto-eps\n";
        return kExitValidation;
      }
      return run_counterexample(ce_args);
    }
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (mc->parsed()) return run_montecarlo(mc_args);
  } catch (const gwline::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const gwline::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
