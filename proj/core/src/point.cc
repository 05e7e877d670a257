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

#include "vrvi/point.h"

#include <string>
#include <utility>

#include "vrvi/errors.h"

namespace vrvi {

Point::Point(Eigen::Index x_dim, Eigen::Index y_dim)
    : coords_(Eigen::VectorXd::Zero(x_dim + y_dim)), x_dim_(x_dim) {
  if (x_dim < 1 || y_dim < 1) {
    throw InvalidInputError("Point blocks must have dimension >= 1");
  }
}

Point::Point(Eigen::VectorXd coords, Eigen::Index x_dim)
    : coords_(std::move(coords)), x_dim_(x_dim) {
  if (x_dim < 1 || coords_.size() - x_dim < 1) {
    throw InvalidInputError("Point blocks must have dimension >= 1");
  }
}

Point Point::FromBlocks(const Eigen::Ref<const Eigen::VectorXd>& x,
                        const Eigen::Ref<const Eigen::VectorXd>& y) {
  Point p(x.size(), y.size());
  p.x() = x;
  p.y() = y;
  return p;
}

void CheckSameShape(const Point& a, const Point& b, const char* what) {
  if (!a.SameShape(b)) {
    throw InvalidInputError(std::string(what) + ": block shapes differ (" +
                            std::to_string(a.x_dim()) + "+" +
                            std::to_string(a.y_dim()) + " vs " +
                            std::to_string(b.x_dim()) + "+" +
                            std::to_string(b.y_dim()) + ")");
  }
}

double SquaredDistance(const Point& a, const Point& b) {
  return (a.coords() - b.coords()).squaredNorm();
}

}  // namespace vrvi
