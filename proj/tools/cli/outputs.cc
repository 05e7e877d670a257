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


#include "cli/outputs.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "json.hpp"

#include "vrvi/errors.h"
#include "vrvi/generators.h"
#include "vrvi/matrix_market.h"

#if defined(__unix__) || defined(__APPLE__)
#include <unistd.h>
#endif

namespace vrvi::cli {
namespace {

int ProcessId() {
#if defined(__unix__) || defined(__APPLE__)
  return static_cast<int>(::getpid());
#else
  return 0;
#endif
}

// Gap of the last row at or before `epoch`.
double GapAt(const RunTrace& trace, double epoch) {
  double gap = trace.rows.front().gap;
  for (const auto& row : trace.rows) {
    if (row.epoch > epoch * (1.0 + 1e-12) + 1e-12) break;
    gap = row.gap;
  }
  return gap;
}

struct Series {
  std::vector<double> epochs;
  std::vector<double> mean;
  std::vector<double> lo;
  std::vector<double> hi;
  int runs = 0;
};

std::map<Algorithm, Series> GridSeries(const std::vector<LabeledTrace>& traces,
                                       const RunSpec& spec) {
  std::map<Algorithm, std::vector<const RunTrace*>> by_algo;
  for (const auto& t : traces) {
    if (!t.trace->rows.empty()) by_algo[t.algorithm].push_back(t.trace);
  }
  const double step = spec.eval_every_epochs;
  const auto points =
      static_cast<int64_t>(std::floor(spec.budget_epochs / step + 1e-9));
  std::map<Algorithm, Series> out;
  for (const auto& [algo, runs] : by_algo) {
    Series s;
    s.runs = static_cast<int>(runs.size());
    for (int64_t k = 0; k <= points; ++k) {
      const double e = static_cast<double>(k) * step;
      double sum = 0.0;
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (const RunTrace* r : runs) {
        const double g = GapAt(*r, e);
        sum += g;
        lo = std::min(lo, g);
        hi = std::max(hi, g);
      }
      s.epochs.push_back(e);
      s.mean.push_back(sum / static_cast<double>(runs.size()));
      s.lo.push_back(lo);
      s.hi.push_back(hi);
    }
    out.emplace(algo, std::move(s));
  }
  return out;
}

std::string Fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return FormatDouble(v);
}

}  // namespace

void WriteFileAtomic(const std::string& path, const std::string& content) {
  static std::atomic<int> counter{0};
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const std::string tmp = path + ".tmp." + std::to_string(ProcessId()) + "." +
                          std::to_string(counter.fetch_add(1));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp + "'");
    out << content;
    out.flush();
    if (!out) throw IoError("write failed for '" + tmp + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("cannot rename onto '" + path + "': " + ec.message());
  }
}

std::string TraceCsv(const RunTrace& trace, bool with_timing) {
  std::string out = kTraceHeader;
  out += '\n';
  for (const auto& row : trace.rows) {
    out += FormatDouble(row.cost);
    out += ',';
    out += FormatDouble(row.epoch);
    out += ',';
    out += FormatDouble(row.gap);
    out += ',';
    if (row.dist_sq) out += FormatDouble(*row.dist_sq);
    out += ',';
    out += std::to_string(with_timing ? row.wall_ns : 0);
    out += '\n';
  }
  return out;
}

std::string TraceMetaJson(const RunTrace& trace, const RunSpec& spec,
                          const VIProblem& problem) {
  const ResolvedParameters& p = trace.params;
  nlohmann::ordered_json j;
  j["algorithm"] = AlgorithmName(p.algorithm);
  j["seed"] = trace.seed;
  j["problem"] = trace.problem_name;
  j["generator"] = spec.problem.generator;
  j["n"] = problem.oracle->x_dim();
  j["m"] = problem.oracle->y_dim();
  j["problem_seed"] = spec.problem.seed;
  if (problem.matrix) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(problem.matrix->Fingerprint()));
    j["matrix_fingerprint"] = buf;
  }
  if (spec.problem.generator.rfind("nemirovski", 0) == 0) {
    j["nemirovski_formula_version"] = kNemirovskiFormulaVersion;
  }
  j["geometry"] = GeometryName(spec.geometry);
  j["oracle"] = trace.oracle_name;
  j["gap_kind"] = GapKindName(problem.gap_kind);
  j["epoch_unit"] = trace.epoch_unit;
  j["parameters"] = {{"p", p.p},
                     {"alpha", p.alpha},
                     {"tau", p.tau},
                     {"gamma", p.gamma},
                     {"inner_loop_length", p.inner_loop_length},
                     {"lipschitz", p.lipschitz}};
  j["budget_epochs"] = spec.budget_epochs;
  j["eval_every_epochs"] = spec.eval_every_epochs;
  if (spec.target_gap) j["target_gap"] = *spec.target_gap;
  j["iterations"] = trace.iterations;
  j["rows"] = trace.rows.size();
  j["clipped_gaps"] = trace.clipped_gaps;
  j["numeric_failure"] = trace.numeric_failure;
  if (trace.numeric_failure) j["failure_message"] = trace.failure_message;
  return j.dump(2) + "\n";
}

double EpochsToTarget(const RunTrace& trace, double target) {
  for (const auto& row : trace.rows) {
    if (row.gap <= target) return row.epoch;
  }
  return std::numeric_limits<double>::infinity();
}

std::string SummaryCsv(const std::vector<LabeledTrace>& traces,
                       const RunSpec& spec) {
  std::string out = "algorithm,epoch,mean_gap,min_gap,max_gap,runs\n";
  for (const auto& [algo, s] : GridSeries(traces, spec)) {
    for (size_t k = 0; k < s.epochs.size(); ++k) {
      out += AlgorithmName(algo);
      out += ',' + FormatDouble(s.epochs[k]) + ',' + FormatDouble(s.mean[k]) +
             ',' + FormatDouble(s.lo[k]) + ',' + FormatDouble(s.hi[k]) + ',' +
             std::to_string(s.runs) + '\n';
    }
  }
  return out;
}

std::string TargetsCsv(const std::vector<LabeledTrace>& traces, double target) {
  std::string out = "algorithm,seed,epochs_to_target\n";
  std::map<Algorithm, std::vector<double>> by_algo;
  for (const auto& t : traces) {
    const double e = EpochsToTarget(*t.trace, target);
    by_algo[t.algorithm].push_back(e);
    out += std::string(AlgorithmName(t.algorithm)) + ',' +
           std::to_string(t.seed) + ',' + Fmt(e) + '\n';
  }
  for (auto& [algo, v] : by_algo) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    const double median =
        n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    out += std::string(AlgorithmName(algo)) + ",median," + Fmt(median) + '\n';
  }
  return out;
}

std::string GapPlotSvg(const std::vector<LabeledTrace>& traces,
                       const RunSpec& spec, const std::string& title) {
  constexpr double kW = 720, kH = 480, kL = 80, kR = 160, kT = 40, kB = 60;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf"};
  const auto series = GridSeries(traces, spec);

  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& [algo, s] : series) {
    for (double g : s.mean) {
      if (g > 0.0) {
        lo = std::min(lo, g);
        hi = std::max(hi, g);
      }
    }
  }
  if (!(hi > 0.0)) {
    lo = 1e-3;
    hi = 1.0;
  }
  double dlo = std::floor(std::log10(lo));
  double dhi = std::ceil(std::log10(hi));
  if (dhi <= dlo) dhi = dlo + 1;
  const double xmax = spec.budget_epochs;
  auto px = [&](double e) { return kL + (kW - kL - kR) * e / xmax; };
  auto py = [&](double g) {
    const double lg = std::log10(std::max(g, std::pow(10.0, dlo)));
    return kT + (kH - kT - kB) * (dhi - lg) / (dhi - dlo);
  };

  std::ostringstream o;
  o.imbue(std::locale::classic());
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
    << "\" height=\"" << kH << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\">" << title
    << "</text>\n";
  o << "<rect x=\"" << kL << "\" y=\"" << kT << "\" width=\"" << kW - kL - kR
    << "\" height=\"" << kH - kT - kB
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int d = static_cast<int>(dlo); d <= static_cast<int>(dhi); ++d) {
    const double y = py(std::pow(10.0, d));
    o << "<line x1=\"" << kL << "\" x2=\"" << kW - kR << "\" y1=\"" << y
      << "\" y2=\"" << y << "\" stroke=\"#ddd\"/>\n";
    o << "<text x=\"" << kL - 6 << "\" y=\"" << y + 4
      << "\" text-anchor=\"end\">1e" << d << "</text>\n";
  }
  for (int k = 0; k <= 5; ++k) {
    const double e = xmax * k / 5.0;
    o << "<text x=\"" << px(e) << "\" y=\"" << kH - kB + 18
      << "\" text-anchor=\"middle\">" << FormatDouble(e) << "</text>\n";
  }
  o << "<text x=\"" << (kL + kW - kR) / 2 << "\" y=\"" << kH - 18
    << "\" text-anchor=\"middle\">epochs</text>\n";
  o << "<text x=\"18\" y=\"" << (kT + kH - kB) / 2
    << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
    << (kT + kH - kB) / 2 << ")\">mean gap</text>\n";

  int c = 0;
  for (const auto& [algo, s] : series) {
    const char* color = kColors[c % std::size(kColors)];
    o << "<polyline fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"1.5\" points=\"";
    for (size_t k = 0; k < s.epochs.size(); ++k) {
      o << px(s.epochs[k]) << ',' << py(s.mean[k]) << ' ';
    }
    o << "\"/>\n";
    const double ly = kT + 16 + 18 * c;
    o << "<line x1=\"" << kW - kR + 12 << "\" x2=\"" << kW - kR + 36
      << "\" y1=\"" << ly << "\" y2=\"" << ly << "\" stroke=\"" << color
      << "\" stroke-width=\"2\"/>\n";
    o << "<text x=\"" << kW - kR + 42 << "\" y=\"" << ly + 4 << "\">"
      << AlgorithmName(algo) << "</text>\n";
    ++c;
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace vrvi::cli
