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


#ifndef VRVI_SIMPLEX_H_
#define VRVI_SIMPLEX_H_

#include <span>
#include <vector>

#include <Eigen/Core>

namespace vrvi {

// Euclidean projection onto {x : sum x_i = 1, x >= 0}. Sort-based with the
// exact KKT threshold. `in` and `out` may alias; `scratch` is resized as
// needed and can be reused across calls to avoid allocation.
void ProjectOntoSimplex(std::span<const double> in, std::span<double> out,
                        std::vector<double>& scratch);

Eigen::VectorXd ProjectOntoSimplex(const Eigen::Ref<const Eigen::VectorXd>& v);

}  // namespace vrvi

#endif  // VRVI_SIMPLEX_H_
