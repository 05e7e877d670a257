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


#include "vrvi/simplex.h"

#include <algorithm>
#include <functional>

#include "vrvi/errors.h"

namespace vrvi {

void ProjectOntoSimplex(std::span<const double> in, std::span<double> out,
                        std::vector<double>& scratch) {
  const size_t d = in.size();
  if (d == 0 || out.size() != d) {
    throw InvalidInputError("ProjectOntoSimplex: bad dimensions");
  }
  scratch.assign(in.begin(), in.end());
  std::sort(scratch.begin(), scratch.end(), std::greater<double>());
  // Largest k with s_k - (sum_{i<=k} s_i - 1) / k > 0.
  double cumsum = 0.0;
  double theta = 0.0;
  for (size_t k = 0; k < d; ++k) {
    cumsum += scratch[k];
    const double t = (cumsum - 1.0) / static_cast<double>(k + 1);
    if (scratch[k] - t > 0.0) theta = t;
  }
  for (size_t i = 0; i < d; ++i) out[i] = std::max(in[i] - theta, 0.0);
}

Eigen::VectorXd ProjectOntoSimplex(const Eigen::Ref<const Eigen::VectorXd>& v) {
  Eigen::VectorXd out(v.size());
  std::vector<double> scratch;
  ProjectOntoSimplex(std::span<const double>(v.data(), v.size()),
                     std::span<double>(out.data(), out.size()), scratch);
  return out;
}

}  // namespace vrvi
