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


#include "cli/commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "cli/outputs.h"
#include "vrvi/errors.h"
#include "vrvi/generators.h"
#include "vrvi/matrix_market.h"
#include "vrvi/run.h"

namespace vrvi::cli {

int WorkerCount(size_t tasks) {
  int cap = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("VRVI_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) cap = static_cast<int>(v);
  }
  return static_cast<int>(
      std::max<size_t>(1, std::min<size_t>(tasks, static_cast<size_t>(cap))));
}

int CmdRun(const RunSpec& spec, std::ostream& log, std::ostream& err) {
  VIProblem problem;
  try {
    ValidateRunSpec(spec);
    problem = BuildProblem(spec);
  } catch (const Error& e) {
    err << "vrvi run: " << e.what() << '\n';
    return kExitBadInput;
  }

  struct Task {
    Algorithm algorithm;
    uint64_t seed;
    RunTrace trace;
  };
  std::vector<Task> tasks;
  for (Algorithm a : spec.algorithms) {
    for (uint64_t s : spec.seeds) tasks.push_back({a, s, {}});
  }
  const std::string dir =
      (std::filesystem::path(spec.out_dir) / (spec.name.empty() ? "run" : spec.name))
          .string();

  std::atomic<size_t> next{0};
  std::mutex error_mu;
  std::string first_error;
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
      Task& t = tasks[i];
      try {
        t.trace = Run(problem, MakeSolverConfig(spec, t.algorithm, t.seed));
        const std::string stem = dir + "/" + AlgorithmName(t.algorithm) +
                                 "-seed" + std::to_string(t.seed);
        WriteFileAtomic(stem + ".csv", TraceCsv(t.trace, spec.record_wall_clock));
        WriteFileAtomic(stem + ".json", TraceMetaJson(t.trace, spec, problem));
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (first_error.empty()) first_error = e.what();
      }
    }
  };
  const int workers = WorkerCount(tasks.size());
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  if (!first_error.empty()) {
    err << "vrvi run: " << first_error << '\n';
    return kExitFailure;
  }

  std::vector<LabeledTrace> labeled;
  bool numeric_failure = false;
  for (const auto& t : tasks) {
    labeled.push_back({t.algorithm, t.seed, &t.trace});
    if (t.trace.numeric_failure) {
      numeric_failure = true;
      err << "vrvi run: " << AlgorithmName(t.algorithm) << " seed " << t.seed
          << " stopped: " << t.trace.failure_message << '\n';
    }
  }
  try {
    WriteFileAtomic(dir + "/summary.csv", SummaryCsv(labeled, spec));
    WriteFileAtomic(dir + "/gap.svg",
                    GapPlotSvg(labeled, spec, problem.name + " (" +
                                                  GeometryName(spec.geometry) +
                                                  ")"));
    if (spec.target_gap) {
      WriteFileAtomic(dir + "/targets.csv", TargetsCsv(labeled, *spec.target_gap));
    }
  } catch (const Error& e) {
    err << "vrvi run: " << e.what() << '\n';
    return kExitFailure;
  }

  log << "wrote " << tasks.size() << " runs to " << dir << '\n';
  if (spec.target_gap) {
    std::map<Algorithm, std::vector<double>> epochs;
    for (const auto& t : tasks) {
      epochs[t.algorithm].push_back(EpochsToTarget(t.trace, *spec.target_gap));
    }
    for (auto& [algo, v] : epochs) {
      std::sort(v.begin(), v.end());
      const size_t n = v.size();
      const double median = n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
      log << "  " << AlgorithmName(algo) << ": median epochs to gap "
          << FormatDouble(*spec.target_gap) << " = "
          << (std::isinf(median) ? std::string("not reached")
                                 : FormatDouble(median))
          << '\n';
    }
  }
  return numeric_failure ? kExitNumeric : kExitOk;
}

int CmdVerify(const VerifyOptions& options, std::ostream& out) {
  const auto results = RunVerifySuites(options);
  out << FormatSuiteTable(results);
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const SuiteResult& r) { return r.passed; });
  out << (ok ? "all suites passed" : "some suites FAILED") << '\n';
  return ok ? kExitOk : kExitFailure;
}

int CmdGen(const std::string& generator, int n, int m, uint64_t seed,
           const std::string& out_path, std::ostream& err) {
  try {
    if (n < 1 || m < 0) throw ConfigError("n must be >= 1");
    Eigen::MatrixXd a;
    if (generator == "policeman") {
      a = PolicemanBurglarMatrix(n, seed);
    } else if (generator == "nemirovski1") {
      a = NemirovskiTestMatrix(n, 1);
    } else if (generator == "nemirovski2") {
      a = NemirovskiTestMatrix(n, 2);
    } else if (generator == "gaussian") {
      a = GaussianMatrix(m > 0 ? m : n, n, seed);
    } else if (generator == "matching-pennies") {
      a = MatchingPenniesMatrix();
    } else if (generator == "rock-paper-scissors") {
      a = RockPaperScissorsMatrix();
    } else {
      throw ConfigError("unknown generator '" + generator + "'");
    }
    std::ostringstream body;
    WriteMatrixMarket(body, a, MatrixMarketFormat::kCoordinate);
    WriteFileAtomic(out_path, body.str());
  } catch (const Error& e) {
    err << "vrvi gen: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitOk;
}

}  // namespace vrvi::cli
