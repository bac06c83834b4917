// Copyright 2026 The robustcnot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "robustcnot/cost.hpp"
#include "robustcnot/pulse.hpp"

namespace {

using namespace robustcnot;

void BM_BuildCnot(benchmark::State &state) {
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pulse::build_cnot(level));
}
BENCHMARK(BM_BuildCnot)->DenseRange(0, 2);

void BM_Simulate(benchmark::State &state) {
  const auto seq = pulse::build_cnot(static_cast<int>(state.range(0)));
  const pulse::ErrorModel err{-0.49};
  for (auto _ : state) benchmark::DoNotOptimize(pulse::cnot_error(seq, err));
  state.counters["steps"] = static_cast<double>(seq.steps().size());
}
BENCHMARK(BM_Simulate)->DenseRange(0, 2);

void BM_Schedule(benchmark::State &state) {
  const auto seq = pulse::build_cnot(2);
  for (auto _ : state) benchmark::DoNotOptimize(cost::schedule_time(seq));
}
BENCHMARK(BM_Schedule);

}  // namespace
