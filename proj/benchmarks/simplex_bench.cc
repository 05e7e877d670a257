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


#include <vector>

#include <benchmark/benchmark.h>

#include "vrvi/rng.h"
#include "vrvi/simplex.h"

namespace {

void BM_ProjectOntoSimplex(benchmark::State& state) {
  const auto n = static_cast<size_t>(state.range(0));
  vrvi::Rng rng(1);
  std::vector<double> in(n), out(n), scratch;
  for (auto& v : in) v = 4.0 * rng.Uniform() - 2.0;
  for (auto _ : state) {
    vrvi::ProjectOntoSimplex(in, out, scratch);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_ProjectOntoSimplex)->RangeMultiplier(4)->Range(16, 4096);

}  // namespace
