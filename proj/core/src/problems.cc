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


#include "vrvi/problems.h"

#include <cmath>
#include <string>
#include <utility>

#include "vrvi/errors.h"
#include "vrvi/generators.h"

namespace vrvi {
namespace {

std::shared_ptr<const StochasticOracle> MaybeExact(
    std::shared_ptr<const StochasticOracle> oracle, bool exact,
    double operator_lipschitz) {
  if (!exact) return oracle;
  return std::make_shared<ExactOracle>(std::move(oracle), operator_lipschitz);
}

}  // namespace

const char* GapKindName(GapKind kind) {
  switch (kind) {
    case GapKind::kSimplexDuality:
      return "simplex-duality";
    case GapKind::kRestrictedMerit:
      return "restricted-merit";
    case GapKind::kNaturalResidual:
      return "natural-residual";
  }
  return "unknown";
}

void VIProblem::Validate() const {
  if (oracle == nullptr) throw InvalidInputError(name + ": missing oracle");
  const Eigen::Index n = oracle->x_dim(), m = oracle->y_dim();
  if (initial_point.x_dim() != n || initial_point.y_dim() != m) {
    throw InvalidInputError(name + ": initial point has the wrong shape");
  }
  if (known_solution && (known_solution->x_dim() != n ||
                         known_solution->y_dim() != m)) {
    throw InvalidInputError(name + ": known solution has the wrong shape");
  }
  if (geometry.n != n || geometry.m != m) {
    throw InvalidInputError(name + ": geometry dimensions disagree");
  }
  if (matrix && (matrix->cols() != n || matrix->rows() != m)) {
    throw InvalidInputError(name + ": matrix dimensions disagree");
  }
  ValidateProx(g, n, m);
  const bool entropic_norms = oracle->norms() == NormPairing::kEntropicL1;
  if (entropic_norms !=
      (geometry.kind == GeometryKind::kEntropicSimplex)) {
    throw InvalidInputError(name +
                            ": oracle norm pairing does not match geometry");
  }
}

VIProblem MakeMatrixGame(std::shared_ptr<const MatrixGame> game,
                         GeometryKind geometry, SamplingScheme scheme,
                         bool exact_oracle) {
  if (game == nullptr) throw InvalidInputError("MakeMatrixGame: null game");
  const bool entropic = geometry == GeometryKind::kEntropicSimplex;
  if (entropic && scheme != SamplingScheme::kVariableEntropic) {
    throw ConfigError(std::string("the entropic geometry requires the ") +
                      SchemeName(SamplingScheme::kVariableEntropic) +
                      " oracle, got " + SchemeName(scheme));
  }
  if (!entropic && scheme == SamplingScheme::kVariableEntropic) {
    throw ConfigError(
        "the variable-entropic oracle has a Lipschitz bound only in the "
        "entropic geometry");
  }
  const Eigen::Index n = game->cols(), m = game->rows();
  VIProblem p;
  p.name = "matrix-game";
  p.matrix = game;
  p.operator_lipschitz = entropic ? game->max_norm() : game->spectral_norm();
  p.oracle = MaybeExact(std::make_shared<BilinearOracle>(game, scheme),
                        exact_oracle, p.operator_lipschitz);
  p.g = SimplexIndicator{};
  p.geometry = {geometry, n, m};
  p.initial_point = Point(n, m);
  p.initial_point.x().setConstant(1.0 / static_cast<double>(n));
  p.initial_point.y().setConstant(1.0 / static_cast<double>(m));
  p.gap_kind = GapKind::kSimplexDuality;
  p.restricted_radius = 2.0;  // covers the simplex product
  return p;
}

VIProblem MakeMatrixGame(const Eigen::MatrixXd& a, GeometryKind geometry,
                         SamplingScheme scheme, bool exact_oracle) {
  return MakeMatrixGame(std::make_shared<const MatrixGame>(a), geometry,
                        scheme, exact_oracle);
}

VIProblem MakeLinearlyConstrained(PrimalFunction f,
                                  std::shared_ptr<const MatrixGame> a,
                                  const Eigen::VectorXd& b,
                                  SamplingScheme scheme, bool exact_oracle) {
  if (a == nullptr) throw InvalidInputError("MakeLinearlyConstrained: null A");
  if (b.size() != a->rows()) {
    throw InvalidInputError("MakeLinearlyConstrained: b has size " +
                            std::to_string(b.size()) + ", A has " +
                            std::to_string(a->rows()) + " rows");
  }
  if (scheme == SamplingScheme::kVariableEntropic) {
    throw ConfigError("linearly constrained problems are Euclidean");
  }
  const Eigen::Index n = a->cols(), m = a->rows();
  VIProblem p;
  p.name = "linearly-constrained";
  p.matrix = a;
  p.operator_lipschitz = a->spectral_norm();
  p.oracle = MaybeExact(std::make_shared<BilinearOracle>(a, scheme),
                        exact_oracle, p.operator_lipschitz);
  p.g = LinearConstraintTerm{std::move(f), b};
  p.geometry = Geometry::Euclidean(n, m);
  p.initial_point = Point(n, m);
  p.gap_kind = GapKind::kNaturalResidual;
  ValidateProx(p.g, n, m);
  return p;
}

VIProblem MakeNonbilinearConstrained(SmoothFunction f,
                                     std::vector<ConstraintFunction> h,
                                     const Eigen::VectorXd& lower,
                                     const Eigen::VectorXd& upper) {
  if (!f.value || !f.gradient) {
    throw InvalidInputError("MakeNonbilinearConstrained: f needs a gradient");
  }
  if (h.empty()) {
    throw InvalidInputError("MakeNonbilinearConstrained: no constraints");
  }
  const Eigen::Index n = lower.size();
  const auto big_n = static_cast<Eigen::Index>(h.size());
  const double inv_n = 1.0 / static_cast<double>(big_n);
  std::vector<OperatorComponent> comps;
  for (Eigen::Index i = 0; i < big_n; ++i) {
    const auto& hi = h[i];
    if (!hi.h.value || !hi.h.gradient) {
      throw InvalidInputError("MakeNonbilinearConstrained: constraint " +
                              std::to_string(i) + " needs a gradient");
    }
    OperatorComponent c;
    c.lipschitz = hi.component_lipschitz;
    c.apply = [f, hi, i, inv_n](const Point& z, DualVector& out) {
      const Eigen::VectorXd x = z.x();
      out.SetZero();
      out.x() = inv_n * f.gradient(x) + z.y()[i] * hi.h.gradient(x);
      out.y()[i] = -hi.h.value(x);
    };
    comps.push_back(std::move(c));
  }
  Point z0(n, big_n);
  z0.x() = Eigen::VectorXd::Zero(n).cwiseMax(lower).cwiseMin(upper);
  VIProblem p = MakeFiniteSumProblem(
      "nonbilinear-constrained", std::move(comps), n, big_n,
      BoxNonneg{lower, upper}, FiniteSumSampling::kUniform, z0);
  p.gap_kind = GapKind::kNaturalResidual;
  return p;
}

VIProblem MakeFiniteSumProblem(std::string name,
                               std::vector<OperatorComponent> components,
                               Eigen::Index x_dim, Eigen::Index y_dim,
                               ProxFriendlyG g, FiniteSumSampling sampling,
                               Point initial_point) {
  // F = sum_i F_i is Lipschitz with constant at most sum_i L_i.
  double lf = 0.0;
  for (const auto& c : components) lf += c.lipschitz;
  VIProblem p;
  p.name = std::move(name);
  p.oracle = std::make_shared<FiniteSumOracle>(std::move(components), x_dim,
                                               y_dim, sampling);
  p.g = std::move(g);
  p.geometry = Geometry::Euclidean(x_dim, y_dim);
  p.initial_point = std::move(initial_point);
  p.gap_kind = GapKind::kRestrictedMerit;
  p.operator_lipschitz = lf;
  p.Validate();
  return p;
}

VIProblem MakeStronglyConvexBilinear(int n, double mu, double scale,
                                     double angle) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidInputError("MakeStronglyConvexBilinear: n must be even");
  }
  if (!(mu > 0.0)) {
    throw InvalidInputError("MakeStronglyConvexBilinear: mu must be > 0");
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  const double c = std::cos(angle) * scale, s = std::sin(angle) * scale;
  for (int k = 0; k < n; k += 2) {
    a(k, k) = c;
    a(k, k + 1) = -s;
    a(k + 1, k) = s;
    a(k + 1, k + 1) = c;
  }
  auto game = std::make_shared<const MatrixGame>(a);
  VIProblem p;
  p.name = "strongly-convex-bilinear";
  p.matrix = game;
  p.operator_lipschitz = game->spectral_norm();
  p.oracle = std::make_shared<BilinearOracle>(
      game, SamplingScheme::kFixedRowColNorms);
  p.g = StronglyConvexQuadratic{mu, Point(n, n)};
  p.geometry = Geometry::Euclidean(n, n);
  p.initial_point = Point(n, n);
  p.initial_point.coords().setOnes();
  p.known_solution = Point(n, n);
  p.gap_kind = GapKind::kNaturalResidual;
  p.Validate();
  return p;
}

VIProblem MakeMatchingPennies(GeometryKind geometry, SamplingScheme scheme,
                              bool exact_oracle) {
  VIProblem p =
      MakeMatrixGame(MatchingPenniesMatrix(), geometry, scheme, exact_oracle);
  p.name = "matching-pennies";
  p.known_solution = p.initial_point;
  return p;
}

VIProblem MakeRockPaperScissors(GeometryKind geometry, SamplingScheme scheme,
                                bool exact_oracle) {
  VIProblem p = MakeMatrixGame(RockPaperScissorsMatrix(), geometry, scheme,
                               exact_oracle);
  p.name = "rock-paper-scissors";
  p.known_solution = p.initial_point;
  return p;
}

}  // namespace vrvi
