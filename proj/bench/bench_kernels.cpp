// Copyright 2026 The ionlattice Authors
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


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "ionlattice/codecycle.h"
#include "ionlattice/montecarlo.h"
#include "ionlattice/noise.h"
#include "ionlattice/unit_cell.h"

using namespace ionlattice;

namespace {

TrialConfig mc_config() {
    TrialConfig c;
    c.p = 0.05;
    c.m = 20;
    c.M = 2;
    c.n_repeaters = 3;
    c.trials = 20000;
    c.seed = 42;
    return c;
}

RepeaterComparisonSpec repeater_spec() {
    RepeaterComparisonSpec spec;
    spec.distances_km = default_distance_grid(200, 400);
    spec.repeater_counts = {1, 2, 3, 4};
    return spec;
}

void BM_Enumerate_Serial(benchmark::State &state) {
    auto circuit = build_unit_cell_circuit(UnitCellConfig{});
    for (auto _ : state) {
        benchmark::DoNotOptimize(serial::enumerate_first_order(circuit));
    }
}

void BM_Enumerate_Parallel(benchmark::State &state) {
    auto circuit = build_unit_cell_circuit(UnitCellConfig{});
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_first_order(circuit));
    }
}

void BM_Feasibility_Serial(benchmark::State &state) {
    auto spec = figure_grid_spec("ft17");
    for (auto _ : state) {
        benchmark::DoNotOptimize(serial::feasibility_grid(spec, Thresholds{}));
    }
}

void BM_Feasibility_Parallel(benchmark::State &state) {
    auto spec = figure_grid_spec("ft17");
    for (auto _ : state) {
        benchmark::DoNotOptimize(feasibility_grid(spec, Thresholds{}));
    }
}

void BM_Repeaters_Serial(benchmark::State &state) {
    auto spec = repeater_spec();
    for (auto _ : state) {
        benchmark::DoNotOptimize(serial::repeater_comparison_table(spec, TimingParams::table2(), Geometry{},
                                                                   ChannelParams::standard()));
    }
}

void BM_Repeaters_Parallel(benchmark::State &state) {
    auto spec = repeater_spec();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            repeater_comparison_table(spec, TimingParams::table2(), Geometry{}, ChannelParams::standard()));
    }
}

void BM_Bond_Serial(benchmark::State &state) {
    auto c = mc_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(serial::simulate_bond(c));
    }
}

void BM_Bond_Parallel(benchmark::State &state) {
    auto c = mc_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_bond(c));
    }
}

void BM_Chain_Serial(benchmark::State &state) {
    auto c = mc_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(serial::simulate_chain(c));
    }
}

void BM_Chain_Parallel(benchmark::State &state) {
    auto c = mc_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_chain(c));
    }
}

void BM_TwoLayer_Serial(benchmark::State &state) {
    auto c = mc_config();
    c.trials = 2000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(serial::simulate_two_layer(c, Thresholds{}));
    }
}

void BM_TwoLayer_Parallel(benchmark::State &state) {
    auto c = mc_config();
    c.trials = 2000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_two_layer(c, Thresholds{}));
    }
}

}  // namespace

BENCHMARK(BM_Enumerate_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate_Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Feasibility_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Feasibility_Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Repeaters_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Repeaters_Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Bond_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Bond_Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Chain_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Chain_Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TwoLayer_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwoLayer_Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
