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

#include "setsplit/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "rng_util.hpp"
#include "setsplit/errors.hpp"
#include "setsplit/qubo_io.hpp"

namespace setsplit {

NeighborIndex::NeighborIndex(const Qubo& qubo)
    : linear_(static_cast<std::size_t>(qubo.num_variables()), 0.0),
      neighbors_(static_cast<std::size_t>(qubo.num_variables())) {
    for (const auto& [i, coeff] : qubo.linear_terms()) {
        linear_[static_cast<std::size_t>(i)] = coeff;
    }
    for (const auto& [key, coeff] : qubo.quadratic_terms()) {
        neighbors_[static_cast<std::size_t>(key.first)].emplace_back(key.second, coeff);
        neighbors_[static_cast<std::size_t>(key.second)].emplace_back(key.first, coeff);
    }
}

double NeighborIndex::flip_delta(const std::vector<std::uint8_t>& bits, int i) const {
    const std::size_t idx = static_cast<std::size_t>(i);
    double field = linear_[idx];
    for (const auto& [j, coeff] : neighbors_[idx]) {
        if (bits[static_cast<std::size_t>(j)]) field += coeff;
    }
    // Turning the bit on adds the local field; turning it off removes it.
    return bits[idx] ? -field : field;
}

double single_bit_flip_delta(const NeighborIndex& index, const Assignment& x, int i) {
    if (i < 0 || i >= index.num_variables()) {
        throw std::out_of_range("flip delta: variable index " + std::to_string(i) +
                                " outside [0, " + std::to_string(index.num_variables()) +
                                ")");
    }
    if (x.size() != index.num_variables()) {
        throw std::invalid_argument("flip delta: assignment length mismatch");
    }
    return index.flip_delta(x.bits, i);
}

namespace {

void check_capacity(int num_variables, const char* who) {
    if (num_variables > kBruteForceMaxVariables) {
        throw CapacityError(std::string(who) + ": " + std::to_string(num_variables) +
                            " variables exceed the exhaustive limit of " +
                            std::to_string(kBruteForceMaxVariables));
    }
}

}  // namespace

SampleSet brute_force(const Qubo& qubo, const BruteForceOptions& options) {
    check_capacity(qubo.num_variables(), "brute force");
    const auto start = std::chrono::steady_clock::now();

    const int n = qubo.num_variables();
    const std::uint64_t count = 1ULL << n;
    const NeighborIndex index(qubo);

    SampleSet samples;
    samples.num_variables = n;
    samples.offset = qubo.offset();
    samples.metadata.name = "brute_force";
    samples.metadata.params.emplace_back("full_spectrum",
                                         options.full_spectrum ? "true" : "false");

    if (options.full_spectrum) {
        samples.records.reserve(count);
        for (std::uint64_t mask = 0; mask < count; ++mask) {
            Assignment x = Assignment::from_mask(mask, n);
            samples.records.push_back(SampleRecord{x, qubo.energy(x, false), 1});
        }
        samples.sort_records();
    } else {
        // Gray-code sweep: one bit flips per step, so the running energy is
        // updated in O(degree). The running value only steers candidate
        // collection; kept records are re-evaluated exactly below.
        constexpr double kCushion = 1e-6;
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
        double running = 0.0;
        double running_min = 0.0;
        std::vector<std::uint64_t> candidates{0};

        std::uint64_t gray = 0;
        for (std::uint64_t step = 1; step < count; ++step) {
            const int flip = std::countr_zero(step);
            running += index.flip_delta(bits, flip);
            bits[static_cast<std::size_t>(flip)] ^= 1u;
            gray ^= (1ULL << flip);

            if (running <= running_min + kCushion) {
                if (running < running_min) {
                    running_min = running;
                    std::erase_if(candidates, [&](std::uint64_t mask) {
                        return qubo.energy(Assignment::from_mask(mask, n), false) >
                               running_min + kCushion;
                    });
                }
                candidates.push_back(gray);
            }
        }

        double exact_min = std::numeric_limits<double>::infinity();
        std::vector<std::pair<std::uint64_t, double>> evaluated;
        evaluated.reserve(candidates.size());
        for (std::uint64_t mask : candidates) {
            const double e = qubo.energy(Assignment::from_mask(mask, n), false);
            evaluated.emplace_back(mask, e);
            exact_min = std::min(exact_min, e);
        }
        for (const auto& [mask, e] : evaluated) {
            if (e == exact_min) {
                samples.records.push_back(
                    SampleRecord{Assignment::from_mask(mask, n), e, 1});
            }
        }
        samples.sort_records();
    }

    samples.metadata.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return samples;
}

double AnnealSchedule::beta_at(std::uint64_t sweep, std::uint64_t total) const {
    if (total <= 1) return beta_final;
    const double t = static_cast<double>(sweep) / static_cast<double>(total - 1);
    if (shape == ScheduleShape::kGeometric) {
        return beta_initial * std::pow(beta_final / beta_initial, t);
    }
    return beta_initial + (beta_final - beta_initial) * t;
}

void AnnealSchedule::require_valid() const {
    if (!(beta_initial > 0.0) || !(beta_final > beta_initial)) {
        throw std::invalid_argument("anneal schedule: requires beta_final > beta_initial > 0");
    }
    if (num_reads == 0) {
        throw std::invalid_argument("anneal schedule: num_reads must be positive");
    }
}

AnnealSchedule default_schedule(int num_variables, std::uint64_t seed) {
    AnnealSchedule schedule;
    schedule.num_reads = 100;
    schedule.sweeps_per_read = 64ULL * static_cast<std::uint64_t>(num_variables);
    schedule.beta_initial = 0.1;
    schedule.beta_final = 10.0;
    schedule.shape = ScheduleShape::kGeometric;
    schedule.seed = seed;
    return schedule;
}

std::uint64_t derive_read_seed(std::uint64_t master_seed, std::uint64_t read_index) {
    return internal::splitmix64(master_seed + 0x9e3779b97f4a7c15ULL * (read_index + 1));
}

SampleSet simulated_anneal(const Qubo& qubo, const AnnealSchedule& schedule) {
    schedule.require_valid();
    const auto start = std::chrono::steady_clock::now();

    const int n = qubo.num_variables();
    const NeighborIndex index(qubo);

    std::map<Assignment, std::uint64_t> counts;
    for (std::uint64_t read = 0; read < schedule.num_reads; ++read) {
        std::mt19937_64 rng(derive_read_seed(schedule.seed, read));

        std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);

        for (std::uint64_t sweep = 0; sweep < schedule.sweeps_per_read; ++sweep) {
            const double beta = schedule.beta_at(sweep, schedule.sweeps_per_read);
            for (int i = 0; i < n; ++i) {
                const double delta = index.flip_delta(bits, i);
                if (delta <= 0.0 ||
                    internal::uniform01(rng) < std::exp(-beta * delta)) {
                    bits[static_cast<std::size_t>(i)] ^= 1u;
                }
            }
        }
        ++counts[Assignment(std::move(bits))];
    }

    SampleSet samples;
    samples.num_variables = n;
    samples.offset = qubo.offset();
    samples.metadata.name = "simulated_annealing";
    samples.metadata.seed = schedule.seed;
    samples.metadata.params.emplace_back("num_reads", std::to_string(schedule.num_reads));
    samples.metadata.params.emplace_back("sweeps_per_read",
                                         std::to_string(schedule.sweeps_per_read));
    samples.metadata.params.emplace_back("beta_initial", format_double(schedule.beta_initial));
    samples.metadata.params.emplace_back("beta_final", format_double(schedule.beta_final));
    samples.metadata.params.emplace_back(
        "schedule_shape",
        schedule.shape == ScheduleShape::kGeometric ? "geometric" : "linear");

    for (auto& [assignment, occurrences] : counts) {
        // Recorded energies come from a fresh full evaluation, never from the
        // incremental deltas.
        const double energy = qubo.energy(assignment, false);
        samples.records.push_back(SampleRecord{assignment, energy, occurrences});
    }
    samples.sort_records();

    samples.metadata.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return samples;
}

}  // namespace setsplit
