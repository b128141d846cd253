#include "exlp/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "exlp/reconstruct.hpp"
#include "exlp/refine.hpp"
#include "exlp/testkit.hpp"
#include "exlp/verify.hpp"

namespace exlp::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitOracleFailure = 2;
constexpr int kExitParseError = 3;
constexpr int kExitLimit = 4;

struct Options {
  std::string file;
  std::string mode = "fac";
  std::string tau = "1e-9";
  std::string alpha = "1073741824";
  std::string beta = "1.1";
  std::string freq = "1.2";
  int stall = 2;
  std::string eta = "1e-6";
  std::string sigma = "1e-4";
  long max_rounds = 1000;
  std::string format = "text";
  bool require_basic = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

Rational parse_flag_rational(const std::string& text, const std::string& flag) {
  auto v = parse_rational(text);
  if (!v) throw CLI::ValidationError(flag, "expected an exact number (p/q, decimal, integer)");
  return *v;
}

/// log10 of the lcm of the denominators of the nonzero entries, rounded down.
long dlcm_magnitude(const RatVector& values) {
  Int l = 1;
  for (const Rational& v : values) {
    if (sgn(v) != 0) l = lcm(l, v.get_den());
  }
  if (l <= 1) return 0;
  long digits = static_cast<long>(mpz_sizeinbase(l.get_mpz_t(), 10));
  Int p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits - 1));
  if (l < p10) --digits;  // sizeinbase may overshoot by one
  return digits - 1;
}

struct SolveArtifacts {
  GeneralLP general;
  StandardLP standard;
  bool have_general = false;
};

int emit_and_exit_code(const Options& opt, const SolveArtifacts& problem,
                       const ExactSolution& solution, bool approximate,
                       const Rational& tau) {
  const StandardLP& lp = problem.standard;

  std::string status;
  int exit_code = kExitOk;
  switch (solution.status) {
    case SolveStatus::kOptimal:
      status = approximate ? "tolerance-reached" : "optimal";
      break;
    case SolveStatus::kOracleFailure:
      status = "oracle-failure";
      exit_code = kExitOracleFailure;
      break;
    case SolveStatus::kRoundLimit:
      status = "round-limit";
      exit_code = kExitLimit;
      break;
  }

  // re-verify before printing: optimal claims must hold exactly, approximate
  // claims must meet the tolerance
  if (exit_code == kExitOk) {
    if (approximate) {
      Residuals res = compute_residuals(lp, solution.x, solution.y);
      if (res.delta > tau) {
        std::cerr << "internal error: reported iterate misses the tolerance\n";
        return kExitError;
      }
    } else if (!exactly_optimal(lp, solution.x, solution.y)) {
      std::cerr << "internal error: reported solution failed exact re-verification\n";
      return kExitError;
    }
  }

  // objective and solution in terms of the original model; a failed initial
  // solve leaves no iterate to report
  const bool have_point = solution.x.size() == static_cast<std::size_t>(lp.num_cols()) &&
                          solution.y.size() == static_cast<std::size_t>(lp.num_rows());
  Rational objective(0);
  std::vector<std::pair<std::string, Rational>> named_values;
  RatVector reported;
  if (have_point) {
    for (std::size_t j = 0; j < solution.x.size(); ++j) objective += lp.cost[j] * solution.x[j];
    if (lp.objective_negated) objective = -objective;
    if (problem.have_general) {
      RatVector original = map_to_original(lp, solution.x, problem.general.num_cols());
      for (int j = 0; j < problem.general.num_cols(); ++j) {
        named_values.emplace_back(problem.general.col_names[static_cast<std::size_t>(j)],
                                  original[static_cast<std::size_t>(j)]);
        reported.push_back(original[static_cast<std::size_t>(j)]);
      }
    } else {
      for (std::size_t j = 0; j < solution.x.size(); ++j) {
        named_values.emplace_back(lp.columns[j].name, solution.x[j]);
        reported.push_back(solution.x[j]);
      }
    }
  }

  if (opt.format == "json") {
    json report;
    report["status"] = status;
    report["mode"] = opt.mode;
    if (have_point) {
      report["objective"] = rational_to_string(objective);
      json sol = json::object();
      for (const auto& [name, value] : named_values) sol[name] = rational_to_string(value);
      report["solution"] = sol;
      report["dlcm"] = dlcm_magnitude(reported);
    }
    report["rounds"] = solution.stats.rounds;
    report["oracle_calls"] = solution.stats.oracle_calls;
    report["factorizations"] = solution.stats.factorizations;
    report["factorization_seconds"] = solution.stats.factorization_seconds;
    report["reconstruction_attempts"] = solution.stats.reconstruction_attempts;
    report["reconstruction_seconds"] = solution.stats.reconstruction_seconds;
    report["final_delta"] = rational_to_string(solution.stats.final_delta);
    report["final_scale"] = rational_to_string(solution.stats.final_scale);
    if (!solution.message.empty()) report["message"] = solution.message;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "status: " << status << "\n";
    if (have_point) {
      std::cout << "objective: " << rational_to_string(objective) << "\n";
      for (const auto& [name, value] : named_values) {
        std::cout << "  " << name << " = " << rational_to_string(value) << "\n";
      }
      std::cout << "dlcm: " << dlcm_magnitude(reported) << "\n";
    }
    std::cout << "rounds: " << solution.stats.rounds
              << "  oracle calls: " << solution.stats.oracle_calls << "\n";
    std::cout << "factorizations: " << solution.stats.factorizations << " ("
              << solution.stats.factorization_seconds << "s)  reconstruction attempts: "
              << solution.stats.reconstruction_attempts << " ("
              << solution.stats.reconstruction_seconds << "s)\n";
    std::cout << "final delta: " << rational_to_string(solution.stats.final_delta)
              << "  final scale: " << rational_to_string(solution.stats.final_scale) << "\n";
    if (!solution.message.empty()) std::cout << "message: " << solution.message << "\n";
  }
  return exit_code;
}

int solve_command(const Options& opt) {
  SolveArtifacts problem;
  if (!opt.file.empty()) {
    std::ifstream in(opt.file);
    if (!in) {
      std::cerr << "error: cannot open '" << opt.file << "'\n";
      return kExitParseError;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    LpFormat format;
    if (opt.file.size() >= 4 && opt.file.substr(opt.file.size() - 4) == ".mps") {
      format = LpFormat::kMpsSubset;
    } else if (opt.file.size() >= 3 && opt.file.substr(opt.file.size() - 3) == ".lp") {
      format = LpFormat::kExactLp;
    } else {
      std::cerr << "error: unknown input extension (expected .lp or .mps)\n";
      return kExitParseError;
    }
    try {
      problem.general = parse_lp_file(buffer.str(), format);
      problem.standard = to_standard_form(problem.general);
      problem.have_general = true;
    } catch (const ParseError& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return kExitParseError;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitParseError;
    }
  } else if (opt.seed_set) {
    problem.standard = testkit::random_feasible_lp(opt.seed, 3, 6);
    problem.have_general = false;
  } else {
    std::cerr << "error: provide an input file or --seed\n";
    return kExitParseError;
  }

  OracleConfig oracle_cfg;
  oracle_cfg.eta = parse_flag_rational(opt.eta, "--eta");
  oracle_cfg.sigma = parse_flag_rational(opt.sigma, "--sigma");
  if (sgn(oracle_cfg.eta) <= 0 || oracle_cfg.eta >= 1) {
    std::cerr << "error: --eta must lie in (0, 1)\n";
    return kExitError;
  }
  if (sgn(oracle_cfg.sigma) <= 0) {
    std::cerr << "error: --sigma must be positive\n";
    return kExitError;
  }
  SimplexOracle oracle(oracle_cfg);

  RefineConfig refine_cfg;
  try {
    refine_cfg.alpha = Int(opt.alpha, 10);
  } catch (const std::invalid_argument&) {
    std::cerr << "error: --alpha must be an integer >= 2\n";
    return kExitError;
  }
  if (refine_cfg.alpha < 2) {
    std::cerr << "error: --alpha must be an integer >= 2\n";
    return kExitError;
  }
  refine_cfg.max_rounds = opt.max_rounds;

  try {
    if (opt.mode == "refine") {
      Rational tau = parse_flag_rational(opt.tau, "--tau");
      refine_cfg.tau = tau;
      RefinementOutcome outcome = iterative_refine(problem.standard, oracle, refine_cfg);
      ExactSolution as_solution;
      as_solution.x = outcome.x;
      as_solution.y = outcome.y;
      as_solution.stats.rounds = outcome.rounds;
      as_solution.stats.oracle_calls = outcome.oracle_calls;
      as_solution.stats.final_delta = outcome.final_delta;
      as_solution.stats.final_scale = outcome.final_scale;
      as_solution.message = outcome.message;
      switch (outcome.status) {
        case RefineStatus::kToleranceReached: as_solution.status = SolveStatus::kOptimal; break;
        case RefineStatus::kOracleFailure: as_solution.status = SolveStatus::kOracleFailure; break;
        default: as_solution.status = SolveStatus::kRoundLimit; break;
      }
      return emit_and_exit_code(opt, problem, as_solution, /*approximate=*/true, tau);
    }
    if (opt.mode == "fac") {
      VerifyConfig cfg;
      cfg.refine = refine_cfg;
      cfg.stall = opt.stall;
      ExactSolution solution = solve_with_basis_verification(problem.standard, oracle, cfg);
      return emit_and_exit_code(opt, problem, solution, /*approximate=*/false, Rational(0));
    }
    if (opt.mode == "rec") {
      ReconConfig rcfg;
      rcfg.beta = parse_flag_rational(opt.beta, "--beta");
      rcfg.freq = parse_flag_rational(opt.freq, "--freq");
      rcfg.require_basic = opt.require_basic;
      if (rcfg.beta <= 1) {
        std::cerr << "error: --beta must exceed 1\n";
        return kExitError;
      }
      if (rcfg.freq < 1) {
        std::cerr << "error: --freq must be at least 1\n";
        return kExitError;
      }
      ExactSolution solution =
          solve_with_reconstruction(problem.standard, oracle, rcfg, refine_cfg);
      return emit_and_exit_code(opt, problem, solution, /*approximate=*/false, Rational(0));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  std::cerr << "error: unknown mode '" << opt.mode << "'\n";
  return kExitError;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"exlp: exact rational LP solver driven by a double-precision simplex"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* solve = app.add_subcommand("solve", "solve an LP exactly");
  solve->add_option("file", opt.file, "input file (.lp exact format or .mps subset)");
  solve->add_option("--mode", opt.mode, "refine | fac | rec")
      ->check(CLI::IsMember({"refine", "fac", "rec"}))
      ->capture_default_str();
  solve->add_option("--tau", opt.tau, "termination tolerance for refine mode")
      ->capture_default_str();
  solve->add_option("--alpha", opt.alpha, "incremental scaling limit (integer >= 2)")
      ->capture_default_str();
  solve->add_option("--beta", opt.beta, "error correction factor for rec mode (> 1)")
      ->capture_default_str();
  solve->add_option("--freq", opt.freq, "reconstruction retry frequency (>= 1)")
      ->capture_default_str();
  solve->add_option("--stall", opt.stall, "stable rounds before basis verification (>= 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--eta", opt.eta, "oracle residual tolerance")->capture_default_str();
  solve->add_option("--sigma", opt.sigma, "oracle complementarity tolerance")
      ->capture_default_str();
  solve->add_option("--max-rounds", opt.max_rounds, "refinement round limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  solve->add_flag("--require-basic", opt.require_basic,
                  "rec mode: only accept vertex solutions");
  solve->add_option("--seed", opt.seed, "solve a generated test instance (no file needed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  opt.seed_set = solve->count("--seed") > 0;

  return solve_command(opt);
}

}  // namespace exlp::cli
