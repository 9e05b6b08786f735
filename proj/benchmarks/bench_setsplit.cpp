// Copyright 2026 The setsplit developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

// Microbenchmarks over the size ladder the toolkit targets. Instance
// generation happens outside the timed region unless it is the subject.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "setsplit/generator.hpp"
#include "setsplit/qubo.hpp"
#include "setsplit/solvers.hpp"

namespace {

setsplit::GeneratedInstance planted(int size, int k = 2) {
    setsplit::GeneratorConfig config;
    config.num_elements = size;
    config.k = k;
    config.seed = static_cast<std::uint64_t>(size);
    return setsplit::generate_unique_solution_instance(config);
}

void BM_GenerateInstance(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        setsplit::GeneratorConfig config;
        config.num_elements = size;
        config.k = 2;
        config.seed = seed++;
        benchmark::DoNotOptimize(setsplit::generate_unique_solution_instance(config));
    }
}
BENCHMARK(BM_GenerateInstance)->Arg(5)->Arg(50)->Arg(100)->Arg(300);

void BM_BuildQubo(benchmark::State& state) {
    const auto gen = planted(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(setsplit::build_qubo(gen.instance));
    }
}
BENCHMARK(BM_BuildQubo)->Arg(5)->Arg(10)->Arg(50)->Arg(75)->Arg(100)->Arg(200)->Arg(250)->Arg(300);

void BM_Energy(benchmark::State& state) {
    const auto gen = planted(static_cast<int>(state.range(0)));
    const auto qubo = setsplit::build_qubo(gen.instance);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qubo.energy(gen.target, true));
    }
}
BENCHMARK(BM_Energy)->Arg(50)->Arg(300);

void BM_FlipDelta(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const auto gen = planted(size);
    const auto qubo = setsplit::build_qubo(gen.instance);
    const setsplit::NeighborIndex index(qubo);
    int i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            setsplit::single_bit_flip_delta(index, gen.target, i));
        i = (i + 1) % size;
    }
}
BENCHMARK(BM_FlipDelta)->Arg(50)->Arg(300);

void BM_BruteForce(benchmark::State& state) {
    const auto gen = planted(static_cast<int>(state.range(0)));
    const auto qubo = setsplit::build_qubo(gen.instance);
    for (auto _ : state) {
        benchmark::DoNotOptimize(setsplit::brute_force(qubo));
    }
}
BENCHMARK(BM_BruteForce)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_AnnealRead(benchmark::State& state) {
    const auto gen = planted(static_cast<int>(state.range(0)));
    const auto qubo = setsplit::build_qubo(gen.instance);
    auto schedule = setsplit::default_schedule(qubo.num_variables(), 1);
    schedule.num_reads = 1;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        schedule.seed = seed++;
        benchmark::DoNotOptimize(setsplit::simulated_anneal(qubo, schedule));
    }
}
BENCHMARK(BM_AnnealRead)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
