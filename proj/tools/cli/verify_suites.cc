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


#include "cli/verify_suites.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <sstream>

#include "vrvi/bilinear_oracle.h"
#include "vrvi/errors.h"
#include "vrvi/finite_sum_oracle.h"
#include "vrvi/generators.h"
#include "vrvi/geometry.h"
#include "vrvi/matrix_game.h"
#include "vrvi/oracle_checks.h"
#include "vrvi/prox.h"
#include "vrvi/rng.h"
#include "vrvi/simplex.h"
#include "vrvi/solvers.h"

namespace vrvi::cli {
namespace {

Eigen::VectorXd Gaussian(Rng& rng, Eigen::Index n, double scale = 1.0) {
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = scale * rng.StandardNormal();
  return v;
}

// Random point of the simplex; with probability 1/4 some entries are zero.
Eigen::VectorXd SimplexSample(Rng& rng, Eigen::Index n, bool allow_zeros) {
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = -std::log(1.0 - rng.Uniform());
  if (allow_zeros && rng.Uniform() < 0.25) {
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      if (rng.Uniform() < 0.4) v[i] = 0.0;
    }
  }
  return v / v.sum();
}

Point SimplexPoint(Rng& rng, Eigen::Index n, Eigen::Index m, bool zeros) {
  return Point::FromBlocks(SimplexSample(rng, n, zeros),
                           SimplexSample(rng, m, zeros));
}

Point GaussianPoint(Rng& rng, Eigen::Index n, Eigen::Index m, double scale) {
  return Point(Gaussian(rng, n + m, scale), n);
}

// Tracks the worst case of one family of checks.
class Tally {
 public:
  void Check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_++ == 0) first_failure_ = what;
  }
  int checks() const { return checks_; }
  bool passed() const { return failures_ == 0; }
  std::string Detail(const std::string& ok_detail) const {
    if (passed()) return ok_detail;
    return std::to_string(failures_) + " failed; first: " + first_failure_;
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string first_failure_;
};

std::string Sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::shared_ptr<const MatrixGame> SuiteGame(uint64_t seed) {
  Eigen::MatrixXd a = GaussianMatrix(5, 4, seed);
  a(1, 2) = 0.0;
  a(3, 0) = 0.0;
  a.row(4).setZero();  // an all-zero row exercises the fallbacks
  return std::make_shared<MatrixGame>(a);
}

std::shared_ptr<const StochasticOracle> MaybeBiased(
    std::shared_ptr<const StochasticOracle> oracle, double bias) {
  if (bias == 1.0) return oracle;
  return std::make_shared<BiasedOracle>(std::move(oracle), bias);
}

std::shared_ptr<const StochasticOracle> FiniteSumFrom(const VIProblem& p,
                                                      uint64_t seed,
                                                      FiniteSumSampling s) {
  Rng rng(seed);
  std::vector<OperatorComponent> comps;
  const Eigen::Index d = p.oracle->x_dim() + p.oracle->y_dim();
  for (int i = 0; i < 4; ++i) {
    Eigen::MatrixXd mat(d, d);
    for (Eigen::Index r = 0; r < d; ++r) mat.row(r) = Gaussian(rng, d, 1.0 + i);
    comps.push_back(AffineComponent(mat, Gaussian(rng, d)));
  }
  return std::make_shared<FiniteSumOracle>(std::move(comps), p.oracle->x_dim(),
                                           p.oracle->y_dim(), s);
}

SuiteResult ProxSuite(const VerifyOptions& opt) {
  Rng rng(opt.seed + 1);
  const Eigen::Index n = 4, m = 3;
  const Point center = GaussianPoint(rng, n, m, 1.0);
  const Eigen::VectorXd b = Gaussian(rng, m);
  Eigen::VectorXd lower = -Eigen::VectorXd::Ones(n), upper(n);
  upper << 0.5, 1.0, 2.0, 0.0;
  const std::vector<ProxFriendlyG> gs = {
      Unconstrained{},
      SimplexIndicator{},
      LinearConstraintTerm{ZeroFunction{}, b},
      LinearConstraintTerm{SquaredDistanceFunction{0.7, center.x()}, b},
      LinearConstraintTerm{L1NormFunction{0.3}, b},
      StronglyConvexQuadratic{0.5, center},
      BoxNonneg{lower, upper},
  };
  Tally t;
  for (const auto& g : gs) {
    for (int trial = 0; trial < 100; ++trial) {
      const double tau = std::exp(rng.Uniform() * 4.0 - 2.0);
      const Point x = GaussianPoint(rng, n, m, 2.0);
      const Point y = GaussianPoint(rng, n, m, 2.0);
      const Point u = ProjectOntoDomain(g, GaussianPoint(rng, n, m, 2.0));
      const Point px = ProxStep(g, x, tau);
      const Point py = ProxStep(g, y, tau);
      // (x - p) / tau is a subgradient of g at p.
      const double lhs = (x.coords() - px.coords()).dot(u.coords() - px.coords());
      const double rhs = tau * (GValue(g, u) - GValue(g, px));
      t.Check(lhs <= rhs + 1e-9 * (1.0 + std::abs(lhs) + std::abs(rhs)),
              std::string(ProxName(g)) + ": prox inequality off by " +
                  Sci(lhs - rhs));
      t.Check(std::sqrt(SquaredDistance(px, py)) <=
                  std::sqrt(SquaredDistance(x, y)) * (1.0 + 1e-12) + 1e-12,
              std::string(ProxName(g)) + ": prox not nonexpansive");
      t.Check(std::isfinite(GValue(g, px)),
              std::string(ProxName(g)) + ": prox left the domain");
    }
  }
  return {"prox-inequality", t.passed(), t.checks(),
          t.Detail("7 regularizers x 100 draws"), 0.0};
}

SuiteResult SimplexSuite(const VerifyOptions& opt) {
  Rng rng(opt.seed + 2);
  Tally t;
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index d = 1 + static_cast<Eigen::Index>(rng.Uniform() * 12);
    const Eigen::VectorXd v = Gaussian(rng, d, 3.0);
    const Eigen::VectorXd w = Gaussian(rng, d, 3.0);
    const Eigen::VectorXd pv = ProjectOntoSimplex(v);
    const Eigen::VectorXd pw = ProjectOntoSimplex(w);
    t.Check(std::abs(pv.sum() - 1.0) <= 1e-12 && pv.minCoeff() >= 0.0,
            "projection not on the simplex");
    t.Check((ProjectOntoSimplex(pv) - pv).lpNorm<Eigen::Infinity>() <= 1e-14,
            "projection not idempotent");
    t.Check((pv - pw).norm() <= (v - w).norm() * (1.0 + 1e-12),
            "projection not nonexpansive");
    const Eigen::VectorXd u = SimplexSample(rng, d, true);
    t.Check((v - pv).dot(u - pv) <= 1e-12 * (1.0 + v.norm()),
            "projection optimality violated");
  }
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 2 + trial % 5, m = 1 + trial % 3;
    const Geometry geom = Geometry::EntropicSimplex(n, m);
    const Point u = SimplexPoint(rng, n, m, true);
    const Point v = SimplexPoint(rng, n, m, false);
    const Point w = SimplexPoint(rng, n, m, false);
    const double d_uv = BregmanDivergence(geom, u, v);
    const Point diff(u.coords() - v.coords(), n);
    const double norm = PrimalNorm(geom, diff);
    t.Check(d_uv + 1e-12 >= 0.5 * norm * norm, "Pinsker bound violated");
    const double three_point =
        BregmanDivergence(geom, u, w) - d_uv - BregmanDivergence(geom, v, w) -
        (MirrorMap(geom, v).coords() - MirrorMap(geom, w).coords())
            .dot(u.coords() - v.coords());
    t.Check(std::abs(three_point) <= 1e-10, "three-point identity off by " +
                                                Sci(three_point));
    const Point back = InverseMirrorMap(geom, MirrorMap(geom, v));
    t.Check((back.coords() - v.coords()).lpNorm<Eigen::Infinity>() <= 1e-12,
            "mirror map round trip");
  }
  {
    DualVector dual(Point::FromBlocks(Eigen::Vector3d(900.0, -900.0, 0.0),
                                      Eigen::Vector2d(-1e3, 1e3)));
    Point primal(3, 2);
    SoftmaxInPlace(dual, primal);
    t.Check(primal.AllFinite() && OnSimplexProduct(primal),
            "softmax overflowed on large duals");
  }
  for (uint64_t seed = 1; seed <= 3; ++seed) {
    const VIProblem problem = MakeMatrixGame(
        GaussianMatrix(6, 5, seed), GeometryKind::kEntropicSimplex,
        SamplingScheme::kVariableEntropic);
    SolverConfig config;
    config.algorithm = Algorithm::kVrMp;
    config.seed = seed;
    SolverState s = InitState(problem, ResolveParameters(problem, config));
    Rng r(seed);
    RngDrawSource draws(r);
    bool ok = true;
    for (int k = 0; k < 500 && ok; ++k) {
      Step(s, problem, draws);
      ok = OnSimplexProduct(s.z) && s.z.coords().minCoeff() > 0.0 &&
           OnSimplexProduct(AveragedIterate(s, problem));
    }
    t.Check(ok, "entropic iterate left the simplex interior");
  }
  return {"simplex-invariants", t.passed(), t.checks(),
          t.Detail("projection, Bregman and entropic iterates"), 0.0};
}

SuiteResult UnbiasednessSuite(const VerifyOptions& opt) {
  Rng rng(opt.seed + 3);
  Tally t;
  auto tol = [](const DualVector& f) {
    return 1e-12 * std::max(1.0, f.coords().lpNorm<Eigen::Infinity>());
  };
  for (uint64_t seed = 1; seed <= 3; ++seed) {
    auto game = SuiteGame(seed);
    const Eigen::Index n = game->cols(), m = game->rows();
    for (auto scheme : {SamplingScheme::kFixedRowColNorms,
                        SamplingScheme::kVariableEuclidean,
                        SamplingScheme::kVariableEntropic}) {
      auto oracle = MaybeBiased(std::make_shared<BilinearOracle>(game, scheme),
                                opt.oracle_bias);
      const bool entropic = scheme == SamplingScheme::kVariableEntropic;
      for (int trial = 0; trial < 20; ++trial) {
        const Point u = entropic ? SimplexPoint(rng, n, m, true)
                                 : GaussianPoint(rng, n, m, 1.0);
        Point v = entropic ? SimplexPoint(rng, n, m, true)
                           : GaussianPoint(rng, n, m, 1.0);
        if (trial == 0) v = u;
        if (trial == 1) v.y() = u.y();  // one block with zero difference
        const double dev = DifferenceUnbiasednessDeviation(*oracle, u, v);
        const DualVector fu = oracle->Full(u);
        t.Check(dev <= tol(fu), std::string(SchemeName(scheme)) +
                                    ": difference bias " + Sci(dev));
        if (scheme == SamplingScheme::kFixedRowColNorms) {
          const double d0 = UnbiasednessDeviation(*oracle, u);
          t.Check(d0 <= tol(fu), "fixed: bias " + Sci(d0));
        }
      }
    }
    const VIProblem fs = MakeLyapunovTestProblem(seed);
    for (auto sampling :
         {FiniteSumSampling::kUniform, FiniteSumSampling::kImportance}) {
      auto oracle =
          MaybeBiased(FiniteSumFrom(fs, seed, sampling), opt.oracle_bias);
      for (int trial = 0; trial < 20; ++trial) {
        const Point z = GaussianPoint(rng, 3, 3, 1.0);
        const double dev = UnbiasednessDeviation(*oracle, z);
        t.Check(dev <= tol(oracle->Full(z)),
                oracle->name() + ": bias " + Sci(dev));
      }
    }
  }
  return {"unbiasedness", t.passed(), t.checks(),
          t.Detail("bilinear schemes and finite sums, exact enumeration"),
          0.0};
}

SuiteResult MeanLipschitzSuite(const VerifyOptions& opt) {
  Rng rng(opt.seed + 4);
  Tally t;
  double worst_ratio = 0.0;
  for (uint64_t seed = 1; seed <= 3; ++seed) {
    auto game = SuiteGame(seed);
    const Eigen::Index n = game->cols(), m = game->rows();
    for (auto scheme : {SamplingScheme::kFixedRowColNorms,
                        SamplingScheme::kVariableEuclidean,
                        SamplingScheme::kVariableEntropic}) {
      auto oracle = MaybeBiased(std::make_shared<BilinearOracle>(game, scheme),
                                opt.oracle_bias);
      const bool entropic = scheme == SamplingScheme::kVariableEntropic;
      for (int trial = 0; trial < 100; ++trial) {
        const Point u = entropic ? SimplexPoint(rng, n, m, true)
                                 : GaussianPoint(rng, n, m, 1.0);
        const Point v = entropic ? SimplexPoint(rng, n, m, true)
                                 : GaussianPoint(rng, n, m, 1.0);
        const auto c = VerifyMeanLipschitz(*oracle, u, v);
        worst_ratio = std::max(worst_ratio, c.lhs / c.rhs);
        t.Check(c.lhs <= c.rhs * (1.0 + 1e-12),
                std::string(SchemeName(scheme)) + ": E|dF|^2 / L^2|du|^2 = " +
                    Sci(c.lhs / c.rhs));
      }
    }
    // At v = 0 the fixed oracle attains the bound with equality when no row
    // or column of A vanishes.
    auto dense = std::make_shared<MatrixGame>(GaussianMatrix(5, 4, seed + 100));
    auto fixed = MaybeBiased(
        std::make_shared<BilinearOracle>(dense, SamplingScheme::kFixedRowColNorms),
        opt.oracle_bias);
    for (int trial = 0; trial < 10; ++trial) {
      const Point u = GaussianPoint(rng, n, m, 1.0);
      const auto c = VerifyMeanLipschitz(*fixed, u, Point(n, m));
      t.Check(std::abs(c.lhs - c.rhs) <= 1e-10 * c.rhs,
              "equality witness off by " + Sci(c.lhs / c.rhs - 1.0));
    }
    const VIProblem fs = MakeLyapunovTestProblem(seed);
    for (auto sampling :
         {FiniteSumSampling::kUniform, FiniteSumSampling::kImportance}) {
      auto oracle =
          MaybeBiased(FiniteSumFrom(fs, seed, sampling), opt.oracle_bias);
      for (int trial = 0; trial < 100; ++trial) {
        const auto c = VerifyMeanLipschitz(*oracle, GaussianPoint(rng, 3, 3, 1),
                                           GaussianPoint(rng, 3, 3, 1));
        t.Check(c.lhs <= c.rhs * (1.0 + 1e-12),
                oracle->name() + ": ratio " + Sci(c.lhs / c.rhs));
      }
    }
  }
  return {"mean-lipschitz", t.passed(), t.checks(),
          t.Detail("worst ratio " + Sci(worst_ratio)), 0.0};
}

SuiteResult LyapunovSuite(const VerifyOptions& opt) {
  Tally t;
  double worst = -std::numeric_limits<double>::infinity();
  double min_forb = std::numeric_limits<double>::infinity();
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const VIProblem problem =
        MakeLyapunovTestProblem(seed, 3, 3, 3, /*on_simplex=*/seed <= 5);
    const Point z_star = SolveReference(problem);
    for (auto algo : {Algorithm::kVrEg, Algorithm::kVrFbf}) {
      SolverConfig config;
      config.algorithm = algo;
      config.seed = seed;
      config.gamma = 0.5;
      if (opt.tau_times_lipschitz) {
        config.tau = *opt.tau_times_lipschitz / problem.oracle->lipschitz();
        config.enforce_step_bound = false;
      }
      const auto r = ExactLyapunovDecrease(problem, config, z_star, 200,
                                           LyapunovKind::kEgFbf);
      worst = std::max(worst, r.max_increase);
      t.Check(r.max_increase <= 1e-9,
              std::string(AlgorithmName(algo)) + " seed " +
                  std::to_string(seed) + ": E[Phi+] - Phi = " +
                  Sci(r.max_increase));
    }
  }
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const VIProblem problem =
        MakeLyapunovTestProblem(seed % 5 + 1, 3, 3, 3, /*on_simplex=*/seed <= 5);
    const Point z_star = SolveReference(problem);
    SolverConfig config;
    config.algorithm = Algorithm::kVrForb;
    config.seed = seed;
    if (opt.tau_times_lipschitz) {
      config.tau = *opt.tau_times_lipschitz / problem.oracle->lipschitz();
      config.enforce_step_bound = false;
    }
    const double phi = MinLyapunovAlongRun(problem, config, z_star, 1000,
                                           LyapunovKind::kForb);
    min_forb = std::min(min_forb, phi);
    t.Check(phi >= -1e-10, "vr-forb seed " + std::to_string(seed) +
                               ": Phi = " + Sci(phi));
  }
  return {"lyapunov", t.passed(), t.checks(),
          t.Detail("max E[Phi+]-Phi " + Sci(worst) + ", min forb Phi " +
                   Sci(min_forb)),
          0.0};
}

}  // namespace

VIProblem MakeLyapunovTestProblem(uint64_t seed, int components, int n,
                                  int m, bool on_simplex) {
  Rng rng(seed * 7919 + 17);
  const int d = n + m;
  std::vector<OperatorComponent> comps;
  for (int i = 0; i < components; ++i) {
    Eigen::MatrixXd g(d, d);
    for (int r = 0; r < d; ++r) g.row(r) = Gaussian(rng, d);
    const Eigen::MatrixXd mat =
        0.5 * (g - g.transpose()) + 0.1 * Eigen::MatrixXd::Identity(d, d);
    comps.push_back(AffineComponent(mat, Gaussian(rng, d, 0.5)));
  }
  const ProxFriendlyG g =
      on_simplex ? ProxFriendlyG(SimplexIndicator{}) : ProxFriendlyG(Unconstrained{});
  VIProblem p = MakeFiniteSumProblem(
      "lyapunov-test", std::move(comps), n, m, g,
      FiniteSumSampling::kUniform,
      Point::FromBlocks(Eigen::VectorXd::Constant(n, 1.0 / n),
                        Eigen::VectorXd::Constant(m, 1.0 / m)));
  return p;
}

Point SolveReference(const VIProblem& problem, double tolerance,
                     int64_t max_iterations) {
  SolverConfig config;
  config.algorithm = Algorithm::kDetEg;
  config.gamma = 0.5;
  SolverState s = InitState(problem, ResolveParameters(problem, config));
  for (int64_t k = 0; k < max_iterations; ++k) {
    StepDetEg(s, problem);
    if (k % 64 == 63 && NaturalResidual(problem, s.z) <= tolerance) break;
  }
  return s.z;
}

LyapunovReport ExactLyapunovDecrease(const VIProblem& problem,
                                     const SolverConfig& config,
                                     const Point& z_star, int iterations,
                                     LyapunovKind kind) {
  if (problem.oracle->is_variable()) {
    throw InvalidInputError(
        "exact Lyapunov enumeration needs an anchor-independent plan");
  }
  SolverState state = InitState(problem, ResolveParameters(problem, config));
  PlanScratch scratch;
  const SamplingPlan plan = problem.oracle->Plan(nullptr, nullptr, scratch);
  Rng rng(config.seed);
  RngDrawSource draws(rng);
  LyapunovReport report;
  report.max_increase = -std::numeric_limits<double>::infinity();
  report.min_phi = std::numeric_limits<double>::infinity();
  const double p = state.params.p;
  for (int it = 0; it < iterations; ++it) {
    const double phi = LyapunovPhi(kind, state, problem, z_star);
    report.min_phi = std::min(report.min_phi, phi);
    double expected = 0.0;
    for (size_t k = 0; k < plan.support_size(); ++k) {
      const double q = plan.probability(k);
      if (q == 0.0) continue;
      for (bool coin : {true, false}) {
        const double pc = coin ? p : 1.0 - p;
        if (pc == 0.0) continue;
        SolverState next = state;
        ForcedDrawSource forced(k, coin);
        Step(next, problem, forced);
        expected += q * pc * LyapunovPhi(kind, next, problem, z_star);
      }
    }
    report.max_increase = std::max(report.max_increase, expected - phi);
    Step(state, problem, draws);
    ++report.iterations;
  }
  report.final_phi = LyapunovPhi(kind, state, problem, z_star);
  return report;
}

double MinLyapunovAlongRun(const VIProblem& problem,
                           const SolverConfig& config, const Point& z_star,
                           int iterations, LyapunovKind kind) {
  SolverState state = InitState(problem, ResolveParameters(problem, config));
  Rng rng(config.seed);
  RngDrawSource draws(rng);
  double lo = LyapunovPhi(kind, state, problem, z_star);
  for (int it = 0; it < iterations; ++it) {
    Step(state, problem, draws);
    lo = std::min(lo, LyapunovPhi(kind, state, problem, z_star));
  }
  return lo;
}

std::vector<SuiteResult> RunVerifySuites(const VerifyOptions& options) {
  struct Suite {
    const char* name;
    std::function<SuiteResult(const VerifyOptions&)> run;
  };
  const Suite suites[] = {{"unbiasedness", UnbiasednessSuite},
                          {"mean-lipschitz", MeanLipschitzSuite},
                          {"lyapunov", LyapunovSuite},
                          {"prox-inequality", ProxSuite},
                          {"simplex-invariants", SimplexSuite}};
  std::vector<SuiteResult> results;
  for (const auto& suite : suites) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), suite.name) ==
            options.only.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    try {
      r = suite.run(options);
    } catch (const std::exception& e) {
      r.name = suite.name;
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
    results.push_back(std::move(r));
  }
  return results;
}

std::string FormatSuiteTable(const std::vector<SuiteResult>& results) {
  std::ostringstream o;
  char line[256];
  std::snprintf(line, sizeof line, "%-20s %-6s %7s %8s  %s\n", "suite",
                "status", "checks", "seconds", "detail");
  o << line;
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-20s %-6s %7d %8.2f  ", r.name.c_str(),
                  r.passed ? "PASS" : "FAIL", r.checks, r.seconds);
    o << line << r.detail << '\n';
  }
  return o.str();
}

}  // namespace vrvi::cli
