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

#ifndef SETSPLIT_SOLVERS_HPP_
#define SETSPLIT_SOLVERS_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "setsplit/qubo.hpp"
#include "setsplit/sampleset.hpp"

namespace setsplit {

/// Exhaustive enumeration refuses problems past this many variables.
inline constexpr int kBruteForceMaxVariables = 26;

/// Per-variable adjacency over a Qubo, so one-bit energy deltas cost
/// O(degree) instead of a scan over all couplings.
class NeighborIndex {
 public:
    explicit NeighborIndex(const Qubo& qubo);

    int num_variables() const { return static_cast<int>(linear_.size()); }

    /// Energy change from flipping bit i of `bits`.
    double flip_delta(const std::vector<std::uint8_t>& bits, int i) const;

 private:
    std::vector<double> linear_;
    std::vector<std::vector<std::pair<int, double>>> neighbors_;
};

/// energy(x with bit i flipped) - energy(x), in O(degree of i).
/// Throws std::out_of_range on a bad index.
double single_bit_flip_delta(const NeighborIndex& index, const Assignment& x, int i);

struct BruteForceOptions {
    /// When set, the sample set holds every assignment instead of only the
    /// minimum-energy ones.
    bool full_spectrum = false;
};

/// Enumerates all 2^L assignments and returns every minimum-energy one
/// (occurrences = 1 each), or the full spectrum on request. Recorded
/// energies are recomputed from scratch per assignment, so they match
/// Qubo::energy exactly. Throws CapacityError past kBruteForceMaxVariables.
SampleSet brute_force(const Qubo& qubo, const BruteForceOptions& options = {});

enum class ScheduleShape { kGeometric, kLinear };

struct AnnealSchedule {
    std::uint64_t num_reads = 100;
    /// 0 is allowed and returns the initial random assignments unmodified.
    std::uint64_t sweeps_per_read = 0;
    double beta_initial = 0.1;
    double beta_final = 10.0;
    ScheduleShape shape = ScheduleShape::kGeometric;
    std::uint64_t seed = 0;

    /// Inverse temperature for sweep `sweep` of `total`; the last sweep is
    /// always at beta_final.
    double beta_at(std::uint64_t sweep, std::uint64_t total) const;

    /// Throws std::invalid_argument unless
    /// beta_final > beta_initial > 0 and num_reads >= 1.
    void require_valid() const;
};

/// Defaults that pass the oracle-agreement bar on generated k = 2 instances:
/// geometric beta 0.1 -> 10.0 and 64 sweeps per variable. Config, not
/// contract.
AnnealSchedule default_schedule(int num_variables, std::uint64_t seed);

/// Classical single-bit Metropolis annealer. Each read restarts from a
/// uniformly random assignment under a per-read generator whose seed is
/// derived from the master seed by read index, so reads are independent and
/// a parallel merge would equal the sequential one. Sample sets are
/// bit-identical across runs and platforms for identical inputs.
SampleSet simulated_anneal(const Qubo& qubo, const AnnealSchedule& schedule);

/// Deterministic per-read seed derivation (splitmix64 finalizer).
std::uint64_t derive_read_seed(std::uint64_t master_seed, std::uint64_t read_index);

}  // namespace setsplit

#endif  // SETSPLIT_SOLVERS_HPP_
