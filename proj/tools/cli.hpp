// Copyright 2026 The eprgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. run() is kept in a header so tests can drive it
// in-process with string streams.

#ifndef EPRGAME_TOOLS_CLI_HPP_
#define EPRGAME_TOOLS_CLI_HPP_

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eprgame/eprgame.hpp"

namespace eprgame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitMalformedInput = 2;

// Raised when a distribution parses but breaks normalization or locality.
class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

inline Json load_json(const std::string& path, std::istream& in) {
  return parse_json(read_text(path, in));
}

inline double to_radians(double v, bool degrees) {
  return degrees ? v * std::numbers::pi / 180.0 : v;
}

// Where a command gets its distribution from: a distribution file or a
// measurement config run through the Born rule.
struct DistSource {
  std::string dist_path;
  std::string config_path;
  bool degrees = false;

  void add_options(CLI::App* sub) {
    auto* d = sub->add_option("--dist", dist_path, "distribution JSON ({\"epsilon\"} or {\"mu\"})");
    auto* c = sub->add_option("--config", config_path, "measurement config JSON");
    d->excludes(c);
    sub->add_flag("--degrees", degrees, "config angles are in degrees");
  }

  EprDistribution load(std::istream& in) const {
    if (!dist_path.empty()) return decode<EprDistribution>(load_json(dist_path, in));
    if (!config_path.empty()) {
      auto config = decode<MeasurementConfig>(load_json(config_path, in));
      for (double& a : config.angles) a = to_radians(a, degrees);
      try {
        return born_distribution(config);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }
    throw InputError("one of --dist or --config is required");
  }
};

inline EprDistribution require_valid(const EprDistribution& d) {
  const ConstraintReport report = validate(d, kExternalTolerance);
  if (!report.is_valid) {
    std::string msg = "distribution fails validation:";
    for (const auto& v : report.violations) {
      msg += "\n  " + v.constraint + " (residual " + format_double(v.residual) + ")";
    }
    throw ValidationFailure(msg);
  }
  return d;
}

inline GameMatrix load_game(const std::string& path, std::istream& in) {
  return decode<GameMatrix>(load_json(path, in));
}

template <std::size_t N>
std::array<double, N> to_array(const std::vector<double>& v, const char* what) {
  if (v.size() != N) {
    throw InputError(std::string(what) + " needs " + std::to_string(N) + " comma-separated values");
  }
  std::array<double, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline void print_table(std::ostream& out, const PayoffTable& t) {
  auto cell = [](const PayoffPair& p) {
    return "(" + format_double(p.alice) + ", " + format_double(p.bob) + ")";
  };
  std::size_t width = 0;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) width = std::max(width, cell(t.at(a, b)).size());
  }
  const int w = static_cast<int>(width) + 2;
  out << std::setw(4) << "" << std::setw(w) << "S1'" << std::setw(w) << "S2'" << '\n';
  out << std::setw(4) << "S1" << std::setw(w) << cell(t.at(0, 0)) << std::setw(w)
      << cell(t.at(0, 1)) << '\n';
  out << std::setw(4) << "S2" << std::setw(w) << cell(t.at(1, 0)) << std::setw(w)
      << cell(t.at(1, 1)) << '\n';
}

}  // namespace detail

/// Runs one CLI invocation; args excludes the program name.
inline int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Two-player games over EPR joint probabilities: CHSH, payoffs, Nash checks, "
               "Bell-equivalent game families and Monte-Carlo runs."};
  app.name("eprgame");
  app.require_subcommand(1);

  // validate
  std::string validate_path;
  double validate_tol = kExternalTolerance;
  auto* validate_cmd = app.add_subcommand("validate", "check range, normalization and locality");
  validate_cmd->add_option("--dist", validate_path, "distribution JSON")->required();
  validate_cmd->add_option("--tol", validate_tol, "residual tolerance")->capture_default_str();

  // complete
  std::vector<double> complete_mu;
  std::string complete_path;
  auto* complete_cmd = app.add_subcommand("complete", "complete a distribution from its mu set");
  auto* mu_opt = complete_cmd
                     ->add_option("--mu", complete_mu,
                                  "eps1,eps4,eps5,eps8,eps9,eps12,eps14,eps15")
                     ->delimiter(',');
  complete_cmd->add_option("--dist", complete_path, "JSON with a \"mu\" field")->excludes(mu_opt);

  // chsh
  detail::DistSource chsh_src;
  bool chsh_json = false;
  auto* chsh_cmd = app.add_subcommand("chsh", "correlations, CHSH sum and Bell discriminant");
  chsh_src.add_options(chsh_cmd);
  chsh_cmd->add_flag("--json", chsh_json, "print JSON only");

  // payoffs
  detail::DistSource pay_src;
  std::string pay_game;
  std::optional<double> pay_p, pay_q;
  bool pay_json = false;
  auto* pay_cmd = app.add_subcommand("payoffs", "pure payoff table and optional mixed payoff");
  pay_cmd->add_option("--game", pay_game, "game JSON")->required();
  pay_src.add_options(pay_cmd);
  auto* pay_p_opt = pay_cmd->add_option("--p", pay_p, "probability Alice plays S1");
  auto* pay_q_opt = pay_cmd->add_option("--q", pay_q, "probability Bob plays S1'");
  pay_p_opt->needs(pay_q_opt);
  pay_q_opt->needs(pay_p_opt);
  pay_cmd->add_flag("--json", pay_json, "print JSON only");

  // nash
  detail::DistSource nash_src;
  std::string nash_game, nash_report;
  double nash_p = 1.0, nash_q = 0.5, nash_tol = kNashTolerance;
  bool nash_json = false;
  auto* nash_cmd = app.add_subcommand("nash", "Nash equilibrium check for a strategy pair");
  nash_cmd->add_option("--game", nash_game, "game JSON")->required();
  nash_src.add_options(nash_cmd);
  nash_cmd->add_option("--p", nash_p, "probability Alice plays S1")->capture_default_str();
  nash_cmd->add_option("--q", nash_q, "probability Bob plays S1'")->capture_default_str();
  nash_cmd->add_option("--tol", nash_tol, "tolerance on deviation gains")->capture_default_str();
  nash_cmd->add_option("--report", nash_report, "also write the report JSON to this file");
  nash_cmd->add_flag("--json", nash_json, "print JSON only");

  // generate
  std::string gen_case, gen_output;
  std::vector<double> gen_free_a(7, 1.0), gen_b_rest(8, 1.0);
  double gen_b_top = 1.0, gen_b_bottom = 1.0;
  auto* gen_cmd = app.add_subcommand("generate", "build a Bell-equivalent family game");
  gen_cmd->add_option("--case", gen_case, "A (Delta >= 0) or B (Delta < 0)")->required();
  gen_cmd->add_option("--free-a", gen_free_a, "a1,a4,a5,a8,a12,a14,a15")
      ->delimiter(',')
      ->capture_default_str();
  gen_cmd->add_option("--b-top", gen_b_top, "b1 = b2 = b5 = b6")->capture_default_str();
  gen_cmd->add_option("--b-bottom", gen_b_bottom, "b3 = b4 = b7 = b8")->capture_default_str();
  gen_cmd->add_option("--b-rest", gen_b_rest, "b9,...,b16")->delimiter(',')->capture_default_str();
  gen_cmd->add_option("--output", gen_output, "write the game JSON here instead of stdout");

  // verify-family
  std::string vf_game, vf_case;
  int vf_samples = 1000;
  std::uint64_t vf_seed = 0;
  auto* vf_cmd = app.add_subcommand("verify-family", "check the family bracket identities");
  vf_cmd->add_option("--game", vf_game, "game JSON")->required();
  vf_cmd->add_option("--case", vf_case, "A or B")->required();
  vf_cmd->add_option("--samples", vf_samples, "random valid distributions")->capture_default_str();
  vf_cmd->add_option("--seed", vf_seed, "sampling seed")->capture_default_str();

  // membership
  std::string mem_game;
  auto* mem_cmd = app.add_subcommand("membership", "recover family constants from a game");
  mem_cmd->add_option("--game", mem_game, "game JSON")->required();

  // sweep
  std::string sw_game, sw_config, sw_output;
  std::vector<std::string> sw_angles;
  double sw_lo = 0.0, sw_hi = std::numbers::pi, sw_p = 1.0, sw_q = 0.5, sw_tol = kNashTolerance;
  int sw_steps = 181;
  bool sw_degrees = false;
  auto* sw_cmd = app.add_subcommand("sweep", "sweep measurement angles, emit CSV");
  sw_cmd->add_option("--game", sw_game, "game JSON")->required();
  sw_cmd->add_option("--config", sw_config, "baseline measurement config JSON")->required();
  sw_cmd->add_option("--angles", sw_angles, "angles to offset: A1,A2,B1,B2")
      ->delimiter(',')
      ->required();
  sw_cmd->add_option("--lo", sw_lo, "start of the offset range")->capture_default_str();
  sw_cmd->add_option("--hi", sw_hi, "end of the offset range")->capture_default_str();
  sw_cmd->add_option("--steps", sw_steps, "number of rows (>= 2)")->capture_default_str();
  sw_cmd->add_option("--p", sw_p, "probability Alice plays S1")->capture_default_str();
  sw_cmd->add_option("--q", sw_q, "probability Bob plays S1'")->capture_default_str();
  sw_cmd->add_option("--tol", sw_tol, "Nash tolerance")->capture_default_str();
  sw_cmd->add_flag("--degrees", sw_degrees, "config angles, --lo and --hi are in degrees");
  sw_cmd->add_option("--output", sw_output, "write CSV here instead of stdout");

  // simulate
  detail::DistSource sim_src;
  std::string sim_game, sim_runs_csv;
  double sim_p = 1.0, sim_q = 0.5;
  std::uint64_t sim_n = 100000, sim_seed = 0;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo EPR runs with mixed strategies");
  sim_cmd->add_option("--game", sim_game, "game JSON")->required();
  sim_src.add_options(sim_cmd);
  sim_cmd->add_option("--p", sim_p, "probability Alice plays S1")->capture_default_str();
  sim_cmd->add_option("--q", sim_q, "probability Bob plays S1'")->capture_default_str();
  sim_cmd->add_option("--n", sim_n, "number of runs")->capture_default_str();
  sim_cmd->add_option("--seed", sim_seed, "PRNG seed (mt19937_64)")->capture_default_str();
  sim_cmd->add_option("--runs-csv", sim_runs_csv, "write per-run CSV here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    if (app.get_subcommands().empty()) io.err << "run 'eprgame --help' for usage\n";
    return kExitMalformedInput;
  }

  try {
    if (*validate_cmd) {
      const auto dist = decode<EprDistribution>(detail::load_json(validate_path, io.in));
      const ConstraintReport report = validate(dist, validate_tol);
      detail::print_json(io.out, Json(report));
      return report.is_valid ? kExitOk : kExitValidationFailure;
    }

    if (*complete_cmd) {
      IndependentProbs mu;
      if (!complete_path.empty()) {
        const Json j = detail::load_json(complete_path, io.in);
        mu.mu = eprgame::detail::read_number_array<kNumIndependent>(j, "mu");
      } else {
        mu.mu = detail::to_array<kNumIndependent>(complete_mu, "--mu");
      }
      EprDistribution dist;
      try {
        dist = complete_from_independent(mu);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      detail::print_json(io.out, Json(dist));
      const ConstraintReport report = validate(dist, kInternalTolerance);
      if (!report.is_valid) {
        io.err << "warning: completed distribution is not a probability distribution:\n";
        for (const auto& v : report.violations) io.err << "  " << v.constraint << '\n';
      }
      return kExitOk;
    }

    if (*chsh_cmd) {
      const auto dist = detail::require_valid(chsh_src.load(io.in));
      const CorrelationSet c = correlations(dist);
      const double disc = bell_discriminant(dist);
      if (chsh_json) {
        Json j = c;
        j["discriminant"] = disc;
        j["bell_violated"] = disc < 0.0;
        detail::print_json(io.out, j);
      } else {
        io.out << "<S1 S1'> = " << format_double(c.e11) << '\n'
               << "<S1 S2'> = " << format_double(c.e12) << '\n'
               << "<S2 S1'> = " << format_double(c.e21) << '\n'
               << "<S2 S2'> = " << format_double(c.e22) << '\n'
               << "Delta = " << format_double(c.delta) << '\n'
               << "discriminant = " << format_double(disc) << '\n'
               << (disc < 0.0 ? "Bell violated" : "Bell satisfied") << '\n';
      }
      return kExitOk;
    }

    if (*pay_cmd) {
      const GameMatrix game = detail::load_game(pay_game, io.in);
      const auto dist = detail::require_valid(pay_src.load(io.in));
      const PayoffTable table = pure_payoffs(game, dist);
      std::optional<PayoffPair> mixed;
      if (pay_p) {
        const MixedStrategyPair s{*pay_p, *pay_q};
        try {
          check_strategy(s);
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
        mixed = mixed_payoff(table, s);
      }
      if (pay_json) {
        Json j{{"pure", table}};
        if (mixed) j["mixed"] = Json{{"p", *pay_p}, {"q", *pay_q}, {"payoff", *mixed}};
        detail::print_json(io.out, j);
      } else {
        detail::print_table(io.out, table);
        if (mixed) {
          io.out << "mixed (p=" << format_double(*pay_p) << ", q=" << format_double(*pay_q)
                 << "): (" << format_double(mixed->alice) << ", " << format_double(mixed->bob)
                 << ")\n";
        }
      }
      return kExitOk;
    }

    if (*nash_cmd) {
      const GameMatrix game = detail::load_game(nash_game, io.in);
      const auto dist = detail::require_valid(nash_src.load(io.in));
      const MixedStrategyPair pair{nash_p, nash_q};
      try {
        check_strategy(pair);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      const NashReport report = is_nash(game, dist, pair, nash_tol);
      const double delta = chsh_delta_mu(dist);
      Json j = report;
      j["delta"] = delta;
      j["discriminant"] = 2.0 - std::abs(delta);
      if (!nash_report.empty()) {
        std::ofstream f(nash_report);
        if (!f) throw InputError("cannot write '" + nash_report + "'");
        f << j.dump(2) << '\n';
      }
      if (nash_json) {
        detail::print_json(io.out, j);
      } else {
        io.out << "pair (p, q) = (" << format_double(nash_p) << ", " << format_double(nash_q)
               << ")\n"
               << "Delta = " << format_double(delta)
               << ", 2 - |Delta| = " << format_double(2.0 - std::abs(delta)) << '\n'
               << "gains: A->p0 " << format_double(report.gain_A_at_p0) << ", A->p1 "
               << format_double(report.gain_A_at_p1) << ", B->q0 "
               << format_double(report.gain_B_at_q0) << ", B->q1 "
               << format_double(report.gain_B_at_q1) << '\n'
               << (report.is_ne ? "Nash equilibrium" : "not a Nash equilibrium");
        if (report.is_ne && (report.alice_weak || report.bob_weak)) {
          io.out << " (weak: "
                 << (report.alice_weak && report.bob_weak ? "both players"
                     : report.alice_weak                  ? "Alice"
                                                          : "Bob")
                 << " indifferent)";
        }
        io.out << '\n';
      }
      return kExitOk;
    }

    if (*gen_cmd) {
      FamilyParams params;
      try {
        params.family_case = family_case_from_string(gen_case);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      params.free_a = detail::to_array<7>(gen_free_a, "--free-a");
      params.b_top = gen_b_top;
      params.b_bottom = gen_b_bottom;
      params.b_rest = detail::to_array<8>(gen_b_rest, "--b-rest");
      const Json j = generate(params);
      if (gen_output.empty()) {
        detail::print_json(io.out, j);
      } else {
        std::ofstream f(gen_output);
        if (!f) throw InputError("cannot write '" + gen_output + "'");
        f << j.dump(2) << '\n';
      }
      return kExitOk;
    }

    if (*vf_cmd) {
      const GameMatrix game = detail::load_game(vf_game, io.in);
      FamilyCase c;
      try {
        c = family_case_from_string(vf_case);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      if (vf_samples < 1) throw InputError("--samples must be at least 1");
      const FamilyVerification v = verify_family(game, c, vf_samples, vf_seed);
      detail::print_json(io.out, Json(v));
      return v.passed ? kExitOk : kExitValidationFailure;
    }

    if (*mem_cmd) {
      const GameMatrix game = detail::load_game(mem_game, io.in);
      const auto params = membership_test(game);
      Json j{{"member", params.has_value()}};
      if (params) j["params"] = *params;
      detail::print_json(io.out, j);
      return kExitOk;
    }

    if (*sw_cmd) {
      SweepSpec spec;
      spec.game = detail::load_game(sw_game, io.in);
      spec.baseline = decode<MeasurementConfig>(detail::load_json(sw_config, io.in));
      for (double& a : spec.baseline.angles) a = detail::to_radians(a, sw_degrees);
      try {
        for (const auto& name : sw_angles) spec.swept.push_back(angle_slot_from_string(name));
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      spec.lo = detail::to_radians(sw_lo, sw_degrees);
      spec.hi = detail::to_radians(sw_hi, sw_degrees);
      spec.steps = sw_steps;
      spec.pair = {sw_p, sw_q};
      spec.tol = sw_tol;
      std::vector<SweepRow> rows;
      try {
        rows = run_sweep(spec);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      if (sw_output.empty()) {
        write_sweep_csv(io.out, rows);
      } else {
        std::ofstream f(sw_output);
        if (!f) throw InputError("cannot write '" + sw_output + "'");
        write_sweep_csv(f, rows);
      }
      return kExitOk;
    }

    if (*sim_cmd) {
      const GameMatrix game = detail::load_game(sim_game, io.in);
      const auto dist = detail::require_valid(sim_src.load(io.in));
      const MixedStrategyPair s{sim_p, sim_q};
      std::ofstream runs;
      RunCallback on_run;
      if (!sim_runs_csv.empty()) {
        runs.open(sim_runs_csv);
        if (!runs) throw InputError("cannot write '" + sim_runs_csv + "'");
        runs << kRunCsvHeader << '\n';
        on_run = [&runs](const RunRecord& r) { write_run_csv_row(runs, r); };
      }
      SimulationSummary summary;
      try {
        summary = simulate(game, dist, s, sim_n, sim_seed, on_run);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      detail::print_json(io.out, Json(summary));
      return kExitOk;
    }
  } catch (const ValidationFailure& e) {
    io.err << "validation failure: " << e.what() << '\n';
    return kExitValidationFailure;
  } catch (const InputError& e) {
    io.err << "malformed input: " << e.what() << '\n';
    return kExitMalformedInput;
  }
  return kExitMalformedInput;
}

}  // namespace eprgame::cli

#endif  // EPRGAME_TOOLS_CLI_HPP_
