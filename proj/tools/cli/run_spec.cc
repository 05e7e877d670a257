// Copyright 2026 The vrvi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli/run_spec.h"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "vrvi/bilinear_oracle.h"
#include "vrvi/errors.h"
#include "vrvi/generators.h"
#include "vrvi/matrix_game.h"
#include "vrvi/matrix_market.h"

namespace vrvi::cli {
namespace {

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> SplitList(std::string_view s) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    if (comma == std::string_view::npos) comma = s.size();
    auto item = Trim(s.substr(start, comma - start));
    if (!item.empty()) out.push_back(item);
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void Bad(std::string_view key, std::string_view value,
                      const char* expected) {
  throw ConfigError("bad value '" + std::string(value) + "' for key '" +
                    std::string(key) + "': expected " + expected);
}

double ParseDouble(std::string_view key, std::string_view value) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    Bad(key, value, "a number");
  }
  return v;
}

template <typename Int>
Int ParseInt(std::string_view key, std::string_view value) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    Bad(key, value, "an integer");
  }
  return v;
}

bool ParseBool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  Bad(key, value, "true or false");
}

// "1,2,7" or "1-5" or a mix.
std::vector<uint64_t> ParseSeeds(std::string_view key, std::string_view value) {
  std::vector<uint64_t> seeds;
  for (auto item : SplitList(value)) {
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      seeds.push_back(ParseInt<uint64_t>(key, item));
      continue;
    }
    const auto lo = ParseInt<uint64_t>(key, Trim(item.substr(0, dash)));
    const auto hi = ParseInt<uint64_t>(key, Trim(item.substr(dash + 1)));
    if (hi < lo || hi - lo > 100000) Bad(key, value, "a seed range lo-hi");
    for (uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  if (seeds.empty()) Bad(key, value, "at least one seed");
  return seeds;
}

struct Preset {
  const char* name;
  const char* text;
};

constexpr Preset kPresets[] = {
    {"fig1-policeman",
     "problem = policeman\ngeometry = euclidean\noracle = fixed\n"
     "algorithms = det-eg,vr-eg,vr-mp,vr-fbf,vr-forb\nseeds = 1-5\n"
     "epochs = 5000\neval_every = 5\ntarget_gap = 0.01\n"},
    {"fig1-nemirovski1",
     "problem = nemirovski1\ngeometry = euclidean\noracle = fixed\n"
     "algorithms = det-eg,vr-eg,vr-mp,vr-fbf,vr-forb\nseeds = 1-5\n"
     "epochs = 2000\neval_every = 5\ntarget_gap = 0.01\n"},
    {"fig1-nemirovski2",
     "problem = nemirovski2\ngeometry = euclidean\noracle = fixed\n"
     "algorithms = det-eg,vr-eg,vr-mp,vr-fbf,vr-forb\nseeds = 1-5\n"
     "epochs = 1000\neval_every = 5\ntarget_gap = 0.01\n"},
    {"fig2-policeman",
     "problem = policeman\ngeometry = entropic\noracle = variable-entropic\n"
     "algorithms = det-eg,vr-mp\nseeds = 1-5\n"
     "epochs = 2500\neval_every = 5\ntarget_gap = 0.01\n"},
    {"fig2-nemirovski1",
     "problem = nemirovski1\ngeometry = entropic\noracle = variable-entropic\n"
     "algorithms = det-eg,vr-mp\nseeds = 1-5\n"
     "epochs = 2000\neval_every = 5\ntarget_gap = 0.01\n"},
    {"fig2-nemirovski2",
     "problem = nemirovski2\ngeometry = entropic\noracle = variable-entropic\n"
     "algorithms = det-eg,vr-mp\nseeds = 1-5\n"
     "epochs = 1000\neval_every = 5\ntarget_gap = 0.01\n"},
};

SamplingScheme ResolveScheme(const RunSpec& spec, bool* exact) {
  *exact = false;
  const bool entropic = spec.geometry == GeometryKind::kEntropicSimplex;
  const auto natural = entropic ? SamplingScheme::kVariableEntropic
                                : SamplingScheme::kFixedRowColNorms;
  if (spec.oracle == "auto") return natural;
  if (spec.oracle == "full") {
    *exact = true;
    return natural;
  }
  if (spec.oracle == "fixed") return SamplingScheme::kFixedRowColNorms;
  if (spec.oracle == "variable-euclidean") {
    return SamplingScheme::kVariableEuclidean;
  }
  if (spec.oracle == "variable-entropic") {
    return SamplingScheme::kVariableEntropic;
  }
  throw ConfigError("unknown oracle '" + spec.oracle + "'");
}

}  // namespace

void ApplySetting(RunSpec& spec, std::string_view key, std::string_view value) {
  value = Trim(value);
  if (key == "name") {
    spec.name = std::string(value);
  } else if (key == "problem") {
    spec.problem.generator = std::string(value);
  } else if (key == "n") {
    spec.problem.n = ParseInt<int>(key, value);
  } else if (key == "m") {
    spec.problem.m = ParseInt<int>(key, value);
  } else if (key == "problem_seed") {
    spec.problem.seed = ParseInt<uint64_t>(key, value);
  } else if (key == "matrix") {
    spec.problem.generator = "file";
    spec.problem.matrix_path = std::string(value);
  } else if (key == "geometry") {
    if (value == "euclidean") {
      spec.geometry = GeometryKind::kEuclidean;
    } else if (value == "entropic") {
      spec.geometry = GeometryKind::kEntropicSimplex;
    } else {
      Bad(key, value, "euclidean or entropic");
    }
  } else if (key == "oracle") {
    spec.oracle = std::string(value);
  } else if (key == "algorithms" || key == "algo") {
    std::vector<Algorithm> algos;
    for (auto item : SplitList(value)) {
      auto a = ParseAlgorithm(item);
      if (!a) Bad(key, item, "vr-eg, vr-mp, vr-fbf, vr-forb or det-eg");
      algos.push_back(*a);
    }
    if (algos.empty()) Bad(key, value, "at least one algorithm");
    spec.algorithms = algos;
  } else if (key == "seeds" || key == "seed") {
    spec.seeds = ParseSeeds(key, value);
  } else if (key == "epochs") {
    spec.budget_epochs = ParseDouble(key, value);
  } else if (key == "eval_every") {
    spec.eval_every_epochs = ParseDouble(key, value);
  } else if (key == "p") {
    spec.p = ParseDouble(key, value);
  } else if (key == "alpha") {
    spec.alpha = ParseDouble(key, value);
  } else if (key == "tau") {
    spec.tau = ParseDouble(key, value);
  } else if (key == "gamma") {
    spec.gamma = ParseDouble(key, value);
  } else if (key == "K") {
    spec.inner_loop_length = ParseInt<int64_t>(key, value);
  } else if (key == "target_gap") {
    spec.target_gap = ParseDouble(key, value);
  } else if (key == "out") {
    spec.out_dir = std::string(value);
  } else if (key == "timing") {
    spec.record_wall_clock = ParseBool(key, value);
  } else if (key == "enforce_step_bound") {
    spec.enforce_step_bound = ParseBool(key, value);
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

void ParseRunSpecText(std::string_view text, RunSpec& spec) {
  int line_no = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    try {
      ApplySetting(spec, Trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

std::vector<std::string> PresetNames() {
  std::vector<std::string> names;
  for (const auto& p : kPresets) names.emplace_back(p.name);
  return names;
}

std::optional<std::string> PresetText(std::string_view name) {
  for (const auto& p : kPresets) {
    if (name == p.name) return std::string(p.text);
  }
  return std::nullopt;
}

RunSpec LoadRunSpec(const std::string& path_or_preset) {
  RunSpec spec;
  if (auto preset = PresetText(path_or_preset)) {
    spec.name = path_or_preset;
    ParseRunSpecText(*preset, spec);
    return spec;
  }
  std::ifstream in(path_or_preset, std::ios::binary);
  if (!in) {
    throw IoError("cannot open spec file '" + path_or_preset +
                  "' (not a preset either)");
  }
  std::stringstream body;
  body << in.rdbuf();
  spec.name = std::filesystem::path(path_or_preset).stem().string();
  ParseRunSpecText(body.str(), spec);
  return spec;
}

VIProblem BuildProblem(const RunSpec& spec) {
  const ProblemSpec& ps = spec.problem;
  bool exact = false;
  const SamplingScheme scheme = ResolveScheme(spec, &exact);
  if (ps.generator == "matching-pennies") {
    return MakeMatchingPennies(spec.geometry, scheme, exact);
  }
  if (ps.generator == "rock-paper-scissors") {
    return MakeRockPaperScissors(spec.geometry, scheme, exact);
  }
  if (ps.n < 1 || ps.m < 0) {
    throw ConfigError("problem size must be positive");
  }
  Eigen::MatrixXd a;
  if (ps.generator == "policeman") {
    a = PolicemanBurglarMatrix(ps.n, ps.seed);
  } else if (ps.generator == "nemirovski1") {
    a = NemirovskiTestMatrix(ps.n, 1);
  } else if (ps.generator == "nemirovski2") {
    a = NemirovskiTestMatrix(ps.n, 2);
  } else if (ps.generator == "gaussian") {
    a = GaussianMatrix(ps.m > 0 ? ps.m : ps.n, ps.n, ps.seed);
  } else if (ps.generator == "file") {
    if (ps.matrix_path.empty()) throw ConfigError("matrix path is empty");
    a = ReadMatrixMarket(ps.matrix_path);
  } else {
    throw ConfigError("unknown problem '" + ps.generator + "'");
  }
  VIProblem problem = MakeMatrixGame(a, spec.geometry, scheme, exact);
  problem.name = ps.generator == "file" ? ps.matrix_path : ps.generator;
  return problem;
}

SolverConfig MakeSolverConfig(const RunSpec& spec, Algorithm algorithm,
                              uint64_t seed) {
  SolverConfig c;
  c.algorithm = algorithm;
  c.p = spec.p;
  c.alpha = spec.alpha;
  c.tau = spec.tau;
  c.gamma = spec.gamma;
  c.inner_loop_length = spec.inner_loop_length;
  c.budget_epochs = spec.budget_epochs;
  c.eval_every_epochs = spec.eval_every_epochs;
  c.seed = seed;
  c.target_gap = spec.target_gap;
  c.enforce_step_bound = spec.enforce_step_bound;
  return c;
}

void ValidateRunSpec(const RunSpec& spec) {
  if (spec.algorithms.empty()) throw ConfigError("no algorithms given");
  if (spec.seeds.empty()) throw ConfigError("no seeds given");
  if (spec.out_dir.empty()) throw ConfigError("output directory is empty");
  if (spec.target_gap && !(*spec.target_gap > 0.0)) {
    throw ConfigError("target_gap must be > 0");
  }
  const VIProblem problem = BuildProblem(spec);
  for (Algorithm a : spec.algorithms) {
    ResolveParameters(problem, MakeSolverConfig(spec, a, spec.seeds.front()));
  }
}

}  // namespace vrvi::cli
