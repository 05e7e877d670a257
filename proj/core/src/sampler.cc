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


#include "vrvi/sampler.h"

#include <algorithm>
#include <cmath>

#include "vrvi/errors.h"

namespace vrvi {

void DiscreteSampler::Build(std::span<const double> weights, Method method) {
  if (weights.empty()) throw InvalidInputError("DiscreteSampler: no weights");
  method_ = method;
  const size_t d = weights.size();
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InvalidInputError("DiscreteSampler: weights must be finite, >= 0");
    }
    total += w;
  }
  if (!(total > 0.0)) {
    throw InvalidInputError("DiscreteSampler: all weights are zero");
  }
  prob_.resize(d);
  for (size_t i = 0; i < d; ++i) prob_[i] = weights[i] / total;

  if (method == Method::kPrefixSum) {
    cumulative_.resize(d);
    double acc = 0.0;
    for (size_t i = 0; i < d; ++i) {
      acc += prob_[i];
      cumulative_[i] = acc;
    }
    return;
  }

  // Vose's alias method.
  alias_prob_.assign(d, 0.0);
  alias_.assign(d, 0);
  std::vector<double> scaled(d);
  std::vector<uint32_t> small, large;
  small.reserve(d);
  large.reserve(d);
  for (size_t i = 0; i < d; ++i) {
    scaled[i] = prob_[i] * static_cast<double>(d);
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const uint32_t s = small.back();
    small.pop_back();
    const uint32_t l = large.back();
    alias_prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  for (uint32_t l : large) alias_prob_[l] = 1.0;
  // Leftovers in `small` are rounding artifacts. A zero-weight entry must
  // never be selected, so it is routed to the heaviest index.
  const auto heaviest = static_cast<uint32_t>(
      std::max_element(prob_.begin(), prob_.end()) - prob_.begin());
  for (uint32_t s : small) {
    alias_prob_[s] = prob_[s] > 0.0 ? 1.0 : 0.0;
    alias_[s] = heaviest;
  }
}

size_t DiscreteSampler::Sample(Rng& rng) const {
  const double u = rng.Uniform();
  if (method_ == Method::kPrefixSum) {
    // First index whose cumulative mass exceeds u; zero-weight entries share
    // the cumulative value of their predecessor and are skipped.
    const double target = u * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    size_t i = static_cast<size_t>(it - cumulative_.begin());
    if (i >= prob_.size()) i = prob_.size() - 1;
    while (prob_[i] == 0.0 && i > 0) --i;
    return i;
  }
  const double scaled = u * static_cast<double>(prob_.size());
  size_t i = static_cast<size_t>(scaled);
  if (i >= prob_.size()) i = prob_.size() - 1;
  const double frac = scaled - static_cast<double>(i);
  return frac < alias_prob_[i] ? i : alias_[i];
}

}  // namespace vrvi
