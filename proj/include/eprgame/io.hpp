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

#ifndef EPRGAME_IO_HPP_
#define EPRGAME_IO_HPP_

#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "eprgame/family.hpp"
#include "eprgame/game.hpp"
#include "eprgame/monte_carlo.hpp"
#include "eprgame/nash.hpp"
#include "eprgame/probability.hpp"
#include "eprgame/quantum_source.hpp"
#include "eprgame/sweep.hpp"

namespace eprgame {

using Json = nlohmann::json;

// Malformed external input: bad JSON shape, wrong lengths, non-numbers, or
// probabilities outside [0, 1].
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <std::size_t N>
std::array<double, N> read_number_array(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  const Json& arr = j.at(key);
  if (!arr.is_array() || arr.size() != N) {
    throw InputError(std::string("field \"") + key + "\" must be an array of " +
                     std::to_string(N) + " numbers");
  }
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!arr[i].is_number()) {
      throw InputError(std::string("field \"") + key + "\" entry " + std::to_string(i + 1) +
                       " is not a number");
    }
    out[i] = arr[i].get<double>();
    if (!std::isfinite(out[i])) {
      throw InputError(std::string("field \"") + key + "\" entry " + std::to_string(i + 1) +
                       " is not finite");
    }
  }
  return out;
}

inline double read_number(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
    throw InputError(std::string("field \"") + key + "\" must be a number");
  }
  return j.at(key).get<double>();
}

}  // namespace detail

// ---- distributions -------------------------------------------------------

inline void to_json(Json& j, const EprDistribution& d) { j = Json{{"epsilon", d.eps}}; }

/// Accepts {"epsilon": [16]} or {"mu": [8]}; the mu form is completed. Entries
/// outside [0, 1] are rejected as malformed.
inline void from_json(const Json& j, EprDistribution& d) {
  if (j.is_object() && j.contains("epsilon")) {
    d.eps = detail::read_number_array<kNumOutcomes>(j, "epsilon");
    for (std::size_t i = 0; i < kNumOutcomes; ++i) {
      if (d.eps[i] < -kExternalTolerance || d.eps[i] > 1.0 + kExternalTolerance) {
        throw InputError("probability " + epsilon_label(i) + " outside [0, 1]");
      }
    }
    return;
  }
  if (j.is_object() && j.contains("mu")) {
    IndependentProbs mu{detail::read_number_array<kNumIndependent>(j, "mu")};
    try {
      d = complete_from_independent(mu);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    return;
  }
  throw InputError("distribution JSON needs an \"epsilon\" or \"mu\" field");
}

inline void to_json(Json& j, const CorrelationSet& c) {
  j = Json{{"e11", c.e11}, {"e12", c.e12}, {"e21", c.e21}, {"e22", c.e22}, {"delta", c.delta}};
}

inline void to_json(Json& j, const ConstraintReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"constraint", v.constraint}, {"residual", v.residual}});
  }
  j = Json{{"is_valid", r.is_valid}, {"violations", violations}};
  if (r.is_local_polytope_member) j["is_local_polytope_member"] = *r.is_local_polytope_member;
}

// ---- measurement configs -------------------------------------------------

inline void to_json(Json& j, const MeasurementConfig& c) {
  j = Json::object();
  if (const auto* s = std::get_if<SchmidtState>(&c.state)) {
    j["state"] = Json{{"schmidt_angle", s->angle}};
  } else {
    j["state"] = "singlet";
  }
  j["angles"] = c.angles;
}

inline void from_json(const Json& j, MeasurementConfig& c) {
  if (!j.is_object() || !j.contains("state")) throw InputError("config JSON needs a \"state\"");
  const Json& st = j.at("state");
  if (st.is_string()) {
    if (st.get<std::string>() != "singlet") {
      throw InputError("unknown state \"" + st.get<std::string>() + "\"");
    }
    c.state = SingletState{};
  } else if (st.is_object()) {
    c.state = SchmidtState{detail::read_number(st, "schmidt_angle")};
  } else {
    throw InputError("\"state\" must be \"singlet\" or {\"schmidt_angle\": x}");
  }
  c.angles = detail::read_number_array<4>(j, "angles");
}

// ---- games ---------------------------------------------------------------

inline void to_json(Json& j, const GameMatrix& g) { j = Json{{"a", g.a}, {"b", g.b}}; }

inline void from_json(const Json& j, GameMatrix& g) {
  g.a = detail::read_number_array<kNumOutcomes>(j, "a");
  g.b = detail::read_number_array<kNumOutcomes>(j, "b");
}

inline void to_json(Json& j, const PayoffPair& p) { j = Json{{"alice", p.alice}, {"bob", p.bob}}; }

inline void to_json(Json& j, const PayoffTable& t) {
  j = Json{{"S1,S1'", t.at(0, 0)}, {"S1,S2'", t.at(0, 1)}, {"S2,S1'", t.at(1, 0)},
           {"S2,S2'", t.at(1, 1)}};
}

// ---- nash ----------------------------------------------------------------

inline void to_json(Json& j, const NashReport& r) {
  j = Json{{"p", r.pair.p},
           {"q", r.pair.q},
           {"gain_A_at_p0", r.gain_A_at_p0},
           {"gain_A_at_p1", r.gain_A_at_p1},
           {"gain_B_at_q0", r.gain_B_at_q0},
           {"gain_B_at_q1", r.gain_B_at_q1},
           {"is_ne", r.is_ne},
           {"is_strict_boundary", r.is_strict_boundary},
           {"alice_weak", r.alice_weak},
           {"bob_weak", r.bob_weak}};
}

inline void from_json(const Json& j, NashReport& r) {
  r.pair = {detail::read_number(j, "p"), detail::read_number(j, "q")};
  r.gain_A_at_p0 = detail::read_number(j, "gain_A_at_p0");
  r.gain_A_at_p1 = detail::read_number(j, "gain_A_at_p1");
  r.gain_B_at_q0 = detail::read_number(j, "gain_B_at_q0");
  r.gain_B_at_q1 = detail::read_number(j, "gain_B_at_q1");
  r.is_ne = j.at("is_ne").get<bool>();
  r.is_strict_boundary = j.at("is_strict_boundary").get<bool>();
  r.alice_weak = j.at("alice_weak").get<bool>();
  r.bob_weak = j.at("bob_weak").get<bool>();
}

inline void to_json(Json& j, const BracketValues& b) {
  j = Json{{"bracket_A", b.bracket_A}, {"bracket_B", b.bracket_B}};
}

// ---- families ------------------------------------------------------------

inline void to_json(Json& j, const FamilyParams& p) {
  j = Json{{"case", std::string(to_string(p.family_case))},
           {"free_a", p.free_a},
           {"b_top", p.b_top},
           {"b_bottom", p.b_bottom},
           {"b_rest", p.b_rest}};
}

inline void from_json(const Json& j, FamilyParams& p) {
  if (!j.is_object() || !j.contains("case") || !j.at("case").is_string()) {
    throw InputError("family params need a \"case\" string");
  }
  try {
    p.family_case = family_case_from_string(j.at("case").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  p.free_a = detail::read_number_array<7>(j, "free_a");
  p.b_top = detail::read_number(j, "b_top");
  p.b_bottom = detail::read_number(j, "b_bottom");
  p.b_rest = detail::read_number_array<8>(j, "b_rest");
}

inline void to_json(Json& j, const FamilyVerification& v) {
  j = Json{{"case", std::string(to_string(v.family_case))},
           {"samples", v.samples},
           {"seed", v.seed},
           {"max_residual_A", v.max_residual_A},
           {"max_residual_B", v.max_residual_B},
           {"tolerance", v.tolerance},
           {"passed", v.passed}};
}

inline void from_json(const Json& j, FamilyVerification& v) {
  v.family_case = family_case_from_string(j.at("case").get<std::string>());
  v.samples = j.at("samples").get<int>();
  v.seed = j.at("seed").get<std::uint64_t>();
  v.max_residual_A = detail::read_number(j, "max_residual_A");
  v.max_residual_B = detail::read_number(j, "max_residual_B");
  v.tolerance = detail::read_number(j, "tolerance");
  v.passed = j.at("passed").get<bool>();
}

// ---- simulation ----------------------------------------------------------

inline void to_json(Json& j, const SimulationSummary& s) {
  Json blocks = Json::array();
  for (const auto& b : s.empirical_blocks) {
    blocks.push_back(b ? Json(*b) : Json(nullptr));
  }
  j = Json{{"n_runs", s.n_runs},
           {"seed", s.seed},
           {"counts", s.counts},
           {"block_visits", s.block_visits},
           {"empirical_blocks", blocks},
           {"payoff_mean", s.payoff_mean},
           {"payoff_stderr", s.payoff_stderr}};
}

inline void from_json(const Json& j, SimulationSummary& s) {
  s.n_runs = j.at("n_runs").get<std::uint64_t>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.counts = j.at("counts").get<std::array<std::uint64_t, kNumOutcomes>>();
  s.block_visits = j.at("block_visits").get<std::array<std::uint64_t, kNumBlocks>>();
  const Json& blocks = j.at("empirical_blocks");
  for (std::size_t k = 0; k < kNumBlocks; ++k) {
    if (blocks.at(k).is_null()) {
      s.empirical_blocks[k].reset();
    } else {
      s.empirical_blocks[k] = blocks.at(k).get<std::array<double, 4>>();
    }
  }
  s.payoff_mean = {j.at("payoff_mean").at("alice").get<double>(),
                   j.at("payoff_mean").at("bob").get<double>()};
  s.payoff_stderr = {j.at("payoff_stderr").at("alice").get<double>(),
                     j.at("payoff_stderr").at("bob").get<double>()};
}

/// Parses a JSON document, turning syntax errors into InputError.
inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T decode(const Json& j) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("unexpected JSON shape: ") + e.what());
  }
}

// ---- CSV -----------------------------------------------------------------

/// Shortest text that reads back to the same double. Locale independent.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InputError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

inline bool parse_bool(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw InputError("not a boolean: '" + std::string(s) + "'");
}

inline const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace detail

inline constexpr std::string_view kSweepCsvHeader =
    "t,theta_a1,theta_a2,theta_b1,theta_b2,delta,discriminant,bracket_a,bracket_b,is_ne,"
    "is_strict_boundary,alice_weak,bob_weak";

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << format_double(r.t);
    for (double a : r.angles) out << ',' << format_double(a);
    out << ',' << format_double(r.delta) << ',' << format_double(r.discriminant) << ','
        << format_double(r.bracket_A) << ',' << format_double(r.bracket_B) << ','
        << detail::bool_text(r.is_ne) << ',' << detail::bool_text(r.is_strict_boundary) << ','
        << detail::bool_text(r.alice_weak) << ',' << detail::bool_text(r.bob_weak) << '\n';
  }
}

inline std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) {
    throw InputError("sweep CSV header mismatch");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != 13) throw InputError("sweep CSV row needs 13 fields");
    SweepRow r;
    r.t = parse_double(f[0]);
    for (std::size_t k = 0; k < 4; ++k) r.angles[k] = parse_double(f[1 + k]);
    r.delta = parse_double(f[5]);
    r.discriminant = parse_double(f[6]);
    r.bracket_A = parse_double(f[7]);
    r.bracket_B = parse_double(f[8]);
    r.is_ne = detail::parse_bool(f[9]);
    r.is_strict_boundary = detail::parse_bool(f[10]);
    r.alice_weak = detail::parse_bool(f[11]);
    r.bob_weak = detail::parse_bool(f[12]);
    rows.push_back(r);
  }
  return rows;
}

inline constexpr std::string_view kRunCsvHeader = "run,alice_dir,bob_dir,x,y,payoff_a,payoff_b";

// Directions are written as S1/S2 for Alice and S1'/S2' for Bob.
inline void write_run_csv_row(std::ostream& out, const RunRecord& r) {
  out << r.run << ',' << (r.alice_dir == 0 ? "S1" : "S2") << ','
      << (r.bob_dir == 0 ? "S1'" : "S2'") << ',' << r.x << ',' << r.y << ','
      << format_double(r.payoff.alice) << ',' << format_double(r.payoff.bob) << '\n';
}

inline std::vector<RunRecord> read_run_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kRunCsvHeader) throw InputError("run CSV header mismatch");
  std::vector<RunRecord> rows;
  auto parse_dir = [](const std::string& s, bool bob) {
    if (s == (bob ? "S1'" : "S1")) return 0;
    if (s == (bob ? "S2'" : "S2")) return 1;
    throw InputError("bad direction '" + s + "'");
  };
  auto parse_outcome = [](const std::string& s) {
    if (s == "1") return 1;
    if (s == "-1") return -1;
    throw InputError("bad outcome '" + s + "'");
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != 7) throw InputError("run CSV row needs 7 fields");
    RunRecord r;
    const auto res = std::from_chars(f[0].data(), f[0].data() + f[0].size(), r.run);
    if (res.ec != std::errc()) throw InputError("bad run index '" + f[0] + "'");
    r.alice_dir = parse_dir(f[1], false);
    r.bob_dir = parse_dir(f[2], true);
    r.x = parse_outcome(f[3]);
    r.y = parse_outcome(f[4]);
    r.payoff = {parse_double(f[5]), parse_double(f[6])};
    rows.push_back(r);
  }
  return rows;
}

}  // namespace eprgame

#endif  // EPRGAME_IO_HPP_
