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


#ifndef VRVI_SAMPLER_H_
#define VRVI_SAMPLER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "vrvi/rng.h"

namespace vrvi {

// Draws index i with probability weights[i] / sum(weights).
//
// kPrefixSum builds cumulative sums in O(d) and samples by binary search in
// O(log d); it is the cheap choice when the distribution changes every draw.
// kAlias builds Vose's alias table in O(d) and samples in O(1); it pays off
// for distributions that are reused.
class DiscreteSampler {
 public:
  enum class Method { kPrefixSum, kAlias };

  DiscreteSampler() = default;
  explicit DiscreteSampler(std::span<const double> weights,
                           Method method = Method::kPrefixSum) {
    Build(weights, method);
  }

  // Rebuilds in place, reusing storage. Throws InvalidInputError on negative
  // or non-finite weights, or when all weights are zero.
  void Build(std::span<const double> weights,
             Method method = Method::kPrefixSum);

  size_t Sample(Rng& rng) const;

  size_t size() const { return prob_.size(); }
  Method method() const { return method_; }
  // Normalized probability of index i.
  double probability(size_t i) const { return prob_[i]; }
  const std::vector<double>& probabilities() const { return prob_; }

 private:
  Method method_ = Method::kPrefixSum;
  std::vector<double> prob_;
  std::vector<double> cumulative_;
  std::vector<double> alias_prob_;
  std::vector<uint32_t> alias_;
};

}  // namespace vrvi

#endif  // VRVI_SAMPLER_H_
