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


#include "vrvi/prox.h"

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "vrvi/errors.h"
#include "vrvi/simplex.h"

namespace vrvi {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFeasTol = 1e-9;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <typename Block>
void ProjectBlock(const Block& in, Block out) {
  thread_local std::vector<double> scratch;
  // Segments of a contiguous VectorXd are contiguous.
  ProjectOntoSimplex(std::span<const double>(in.data(), in.size()),
                     std::span<double>(out.data(), out.size()), scratch);
}

void ProxPrimal(const PrimalFunction& f, double tau,
                Eigen::Ref<Eigen::VectorXd> x) {
  std::visit(Overloaded{
                 [](const ZeroFunction&) {},
                 [&](const SquaredDistanceFunction& q) {
                   const double tw = tau * q.weight;
                   x = (x + tw * q.center) / (1.0 + tw);
                 },
                 [&](const L1NormFunction& l1) {
                   const double t = tau * l1.weight;
                   for (Eigen::Index i = 0; i < x.size(); ++i) {
                     const double a = std::abs(x[i]) - t;
                     x[i] = a > 0.0 ? std::copysign(a, x[i]) : 0.0;
                   }
                 },
             },
             f);
}

double PrimalValue(const PrimalFunction& f,
                   const Eigen::Ref<const Eigen::VectorXd>& x) {
  return std::visit(
      Overloaded{
          [](const ZeroFunction&) { return 0.0; },
          [&](const SquaredDistanceFunction& q) {
            return 0.5 * q.weight * (x - q.center).squaredNorm();
          },
          [&](const L1NormFunction& l1) { return l1.weight * x.lpNorm<1>(); },
      },
      f);
}

bool InSimplex(const Eigen::Ref<const Eigen::VectorXd>& b) {
  return (b.array() >= -kFeasTol).all() && std::abs(b.sum() - 1.0) <= kFeasTol;
}

}  // namespace

const char* ProxName(const ProxFriendlyG& g) {
  return std::visit(Overloaded{
                        [](const Unconstrained&) { return "unconstrained"; },
                        [](const SimplexIndicator&) { return "simplex"; },
                        [](const LinearConstraintTerm&) {
                          return "linear-constraint";
                        },
                        [](const StronglyConvexQuadratic&) {
                          return "strongly-convex-quadratic";
                        },
                        [](const BoxNonneg&) { return "box-nonneg"; },
                    },
                    g);
}

void ValidateProx(const ProxFriendlyG& g, Eigen::Index n, Eigen::Index m) {
  std::visit(
      Overloaded{
          [](const Unconstrained&) {},
          [](const SimplexIndicator&) {},
          [&](const LinearConstraintTerm& l) {
            if (l.b.size() != m) {
              throw InvalidInputError("LinearConstraintTerm: b has size " +
                                      std::to_string(l.b.size()) +
                                      ", expected " + std::to_string(m));
            }
            if (const auto* q = std::get_if<SquaredDistanceFunction>(&l.f)) {
              if (q->center.size() != n || !(q->weight >= 0.0)) {
                throw InvalidInputError("SquaredDistanceFunction: bad params");
              }
            }
            if (const auto* l1 = std::get_if<L1NormFunction>(&l.f)) {
              if (!(l1->weight >= 0.0)) {
                throw InvalidInputError("L1NormFunction: negative weight");
              }
            }
          },
          [&](const StronglyConvexQuadratic& q) {
            if (!(q.mu > 0.0)) {
              throw InvalidInputError("StronglyConvexQuadratic: mu must be > 0");
            }
            if (q.center.x_dim() != n || q.center.y_dim() != m) {
              throw InvalidInputError("StronglyConvexQuadratic: bad center");
            }
          },
          [&](const BoxNonneg& b) {
            if (b.lower.size() != n || b.upper.size() != n ||
                (b.lower.array() > b.upper.array()).any()) {
              throw InvalidInputError("BoxNonneg: bad bounds");
            }
          },
      },
      g);
}

void ProxStep(const ProxFriendlyG& g, const Point& anchor, double tau,
              Point& out) {
  if (!(tau > 0.0)) throw InvalidInputError("ProxStep: tau must be > 0");
  if (&out != &anchor) out = anchor;
  std::visit(Overloaded{
                 [](const Unconstrained&) {},
                 [&](const SimplexIndicator&) {
                   ProjectBlock(out.x(), out.x());
                   ProjectBlock(out.y(), out.y());
                 },
                 [&](const LinearConstraintTerm& l) {
                   ProxPrimal(l.f, tau, out.x());
                   out.y() -= tau * l.b;
                 },
                 [&](const StronglyConvexQuadratic& q) {
                   const double tm = tau * q.mu;
                   out.coords() =
                       (out.coords() + tm * q.center.coords()) / (1.0 + tm);
                 },
                 [&](const BoxNonneg& b) {
                   out.x() = out.x().cwiseMax(b.lower).cwiseMin(b.upper);
                   out.y() = out.y().cwiseMax(0.0);
                 },
             },
             g);
}

Point ProxStep(const ProxFriendlyG& g, const Point& anchor, double tau) {
  Point out = anchor;
  ProxStep(g, anchor, tau, out);
  return out;
}

double GValue(const ProxFriendlyG& g, const Point& z) {
  return std::visit(
      Overloaded{
          [](const Unconstrained&) { return 0.0; },
          [&](const SimplexIndicator&) {
            return InSimplex(z.x()) && InSimplex(z.y()) ? 0.0 : kInf;
          },
          [&](const LinearConstraintTerm& l) {
            return PrimalValue(l.f, z.x()) + l.b.dot(z.y());
          },
          [&](const StronglyConvexQuadratic& q) {
            return 0.5 * q.mu * SquaredDistance(z, q.center);
          },
          [&](const BoxNonneg& b) {
            const bool ok =
                (z.x().array() >= b.lower.array() - kFeasTol).all() &&
                (z.x().array() <= b.upper.array() + kFeasTol).all() &&
                (z.y().array() >= -kFeasTol).all();
            return ok ? 0.0 : kInf;
          },
      },
      g);
}

Point ProjectOntoDomain(const ProxFriendlyG& g, const Point& z) {
  if (std::holds_alternative<SimplexIndicator>(g) ||
      std::holds_alternative<BoxNonneg>(g)) {
    // For indicators the prox is the projection, independent of tau.
    return ProxStep(g, z, 1.0);
  }
  return z;
}

void MirrorArgmin(const Geometry& geom, const ProxFriendlyG& g,
                  const DualVector& linear_term, double alpha, double tau,
                  const DualVector& z1_dual, const DualVector& z2_dual,
                  Point& primal, DualVector& dual) {
  if (!(tau > 0.0)) throw InvalidInputError("MirrorArgmin: tau must be > 0");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidInputError("MirrorArgmin: alpha must lie in [0, 1]");
  }
  // Both geometries start from the same dual combination.
  dual.coords() = alpha * z1_dual.coords() + (1.0 - alpha) * z2_dual.coords() -
                  tau * linear_term.coords();
  if (geom.kind == GeometryKind::kEuclidean) {
    ProxStep(g, dual, tau, primal);
    if (!primal.AllFinite()) {
      throw NumericError("MirrorArgmin: non-finite iterate");
    }
    dual = primal;
    return;
  }
  if (!std::holds_alternative<SimplexIndicator>(g)) {
    throw ConfigError("entropic geometry requires the simplex indicator g");
  }
  SoftmaxInPlace(dual, primal);
}

}  // namespace vrvi
