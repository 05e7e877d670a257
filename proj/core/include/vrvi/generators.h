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


#ifndef VRVI_GENERATORS_H_
#define VRVI_GENERATORS_H_

#include <cstdint>

#include <Eigen/Core>

namespace vrvi {

// Parameters of the policeman-and-burglar matrix, frozen so that benchmark
// numbers are stable across versions.
inline constexpr double kPolicemanBurglarTheta = 0.8;

// A_ij = w_i (1 - exp(-theta |i - j|)) with w_i = |N(0, 1)| drawn from a
// seeded generator. Square n x n, n >= 2.
Eigen::MatrixXd PolicemanBurglarMatrix(int n, uint64_t seed,
                                       double theta = kPolicemanBurglarTheta);

// Deterministic test matrices, 1-based indices:
//   family 1: A_ij = (i + j - 1) / (2n - 1)
//   family 2: A_ij = ((|i - j| + 1) / (2n - 1))^2
// Version 1 of these formulas; both have entries in (0, 1].
inline constexpr int kNemirovskiFormulaVersion = 1;
Eigen::MatrixXd NemirovskiTestMatrix(int n, int family);

// m x n matrix with i.i.d. standard normal entries.
Eigen::MatrixXd GaussianMatrix(int m, int n, uint64_t seed);

// [[1, -1], [-1, 1]].
Eigen::MatrixXd MatchingPenniesMatrix();

// 3 x 3 circulant rock-paper-scissors payoff.
Eigen::MatrixXd RockPaperScissorsMatrix();

}  // namespace vrvi

#endif  // VRVI_GENERATORS_H_
