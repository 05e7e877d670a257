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


#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cli/commands.h"
#include "vrvi/errors.h"

namespace {

// A --flag that maps onto one spec key.
struct Override {
  const char* key;
  std::optional<std::string> value;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace vrvi::cli;
  CLI::App app{"variance-reduced solvers for monotone variational inequalities"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run an experiment spec or preset");
  std::string spec_path;
  run->add_option("spec", spec_path, "spec file or preset name")->required();
  std::vector<Override> overrides = {
      {"algorithms", {}}, {"seeds", {}},      {"epochs", {}},
      {"out", {}},        {"n", {}},          {"m", {}},
      {"problem", {}},    {"problem_seed", {}}, {"matrix", {}},
      {"geometry", {}},   {"oracle", {}},     {"p", {}},
      {"alpha", {}},      {"tau", {}},        {"gamma", {}},
      {"K", {}},          {"eval_every", {}}, {"target_gap", {}},
      {"name", {}}};
  const char* flag_names[] = {
      "--algo",       "--seed",   "--epochs",  "--out",      "--n",
      "--m",          "--problem", "--problem-seed", "--matrix", "--geometry",
      "--oracle",     "--p",      "--alpha",   "--tau",      "--gamma",
      "--K",          "--eval-every", "--target-gap", "--name"};
  for (size_t i = 0; i < overrides.size(); ++i) {
    run->add_option(flag_names[i], overrides[i].value,
                    std::string("override '") + overrides[i].key + "'");
  }
  std::vector<std::string> sets;
  run->add_option("--set", sets, "extra key=value settings");
  bool no_timing = false;
  run->add_flag("--no-timing", no_timing, "write wall_ns as 0");

  // verify
  auto* verify = app.add_subcommand("verify", "run the property suites");
  VerifyOptions vopt;
  std::optional<double> inject_bias, inject_tau;
  verify->add_option("--inject-bias", inject_bias,
                     "scale every stochastic estimate (mutation check)");
  verify->add_option("--inject-tau", inject_tau,
                     "force tau = value / L in the Lyapunov suite");

  // gen
  auto* gen = app.add_subcommand("gen", "write a generated matrix");
  std::string generator, gen_out;
  int gen_n = 0, gen_m = 0;
  uint64_t gen_seed = 1;
  gen->add_option("generator", generator,
                  "policeman | nemirovski1 | nemirovski2 | gaussian | "
                  "matching-pennies | rock-paper-scissors")
      ->required();
  gen->add_option("--n", gen_n, "size")->required();
  gen->add_option("--m", gen_m, "rows (gaussian)");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output .mtx path")->required();

  app.add_subcommand("presets", "list experiment presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (*run) {
    RunSpec spec;
    try {
      spec = LoadRunSpec(spec_path);
      for (const auto& o : overrides) {
        if (o.value) ApplySetting(spec, o.key, *o.value);
      }
      for (const auto& kv : sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
          throw vrvi::ConfigError("--set expects key=value, got '" + kv + "'");
        }
        ApplySetting(spec, kv.substr(0, eq), kv.substr(eq + 1));
      }
      if (no_timing) spec.record_wall_clock = false;
    } catch (const vrvi::Error& e) {
      std::cerr << "vrvi run: " << e.what() << '\n';
      return kExitBadInput;
    }
    return CmdRun(spec, std::cout, std::cerr);
  }
  if (*verify) {
    if (inject_bias) vopt.oracle_bias = *inject_bias;
    vopt.tau_times_lipschitz = inject_tau;
    return CmdVerify(vopt, std::cout);
  }
  if (*gen) return CmdGen(generator, gen_n, gen_m, gen_seed, gen_out, std::cerr);
  for (const auto& name : PresetNames()) {
    std::cout << name << '\n' << *PresetText(name) << '\n';
  }
  return kExitOk;
}
