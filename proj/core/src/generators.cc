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


#include "vrvi/generators.h"

#include <cmath>
#include <cstdlib>

#include "vrvi/errors.h"
#include "vrvi/rng.h"

namespace vrvi {

Eigen::MatrixXd PolicemanBurglarMatrix(int n, uint64_t seed, double theta) {
  if (n < 2) throw InvalidInputError("policeman-burglar needs n >= 2");
  Rng rng(seed);
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i) w[i] = std::abs(rng.StandardNormal());
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = w[i] * (1.0 - std::exp(-theta * std::abs(i - j)));
    }
  }
  return a;
}

Eigen::MatrixXd NemirovskiTestMatrix(int n, int family) {
  if (n < 2) throw InvalidInputError("Nemirovski test matrix needs n >= 2");
  if (family != 1 && family != 2) {
    throw InvalidInputError("Nemirovski test family must be 1 or 2");
  }
  const double denom = 2.0 * n - 1.0;
  Eigen::MatrixXd a(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (family == 1) {
        a(i - 1, j - 1) = (i + j - 1) / denom;
      } else {
        const double r = (std::abs(i - j) + 1) / denom;
        a(i - 1, j - 1) = r * r;
      }
    }
  }
  return a;
}

Eigen::MatrixXd GaussianMatrix(int m, int n, uint64_t seed) {
  if (m < 1 || n < 1) throw InvalidInputError("Gaussian matrix: bad shape");
  Rng rng(seed);
  Eigen::MatrixXd a(m, n);
  // Row-major fill order keeps the stream layout obvious.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = rng.StandardNormal();
  }
  return a;
}

Eigen::MatrixXd MatchingPenniesMatrix() {
  Eigen::MatrixXd a(2, 2);
  a << 1, -1, -1, 1;
  return a;
}

Eigen::MatrixXd RockPaperScissorsMatrix() {
  Eigen::MatrixXd a(3, 3);
  a << 0, -1, 1, 1, 0, -1, -1, 1, 0;
  return a;
}

}  // namespace vrvi
