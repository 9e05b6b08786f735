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

#ifndef SETSPLIT_ANALYSIS_HPP_
#define SETSPLIT_ANALYSIS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "setsplit/instance.hpp"

namespace setsplit {

struct SubsetStatus {
    bool split = false;
    /// Number of the subset's elements assigned bit 1.
    int ones_count = 0;
};

/// Result of decoding an assignment into a partition and checking the split
/// condition subset by subset, independently of any energy value.
struct SplitReport {
    std::vector<int> s1;
    std::vector<int> s2;
    std::vector<SubsetStatus> per_subset;
    int num_split = 0;
    double weighted_split_sum = 0.0;
    bool fully_split = false;
};

/// Scans every subset directly: split means at least one element on each
/// side. Throws std::invalid_argument on length mismatch.
SplitReport decode_and_verify(const Instance& instance, const Assignment& x);

/// Report serialization as JSON mirroring the instance format's vocabulary.
std::string format_split_report(const SplitReport& report);

/// Recovers the number of split subsets from an energy-with-offset value.
///
/// Defined only for unit weights and subsets of cardinality <= 3, where the
/// per-subset penalty takes exactly two levels one unit apart (0/1 for
/// pairs, 0.5/1.5 for triples). Returns nullopt when any subset is larger
/// or a weight differs from 1, since the identity breaks down there.
std::optional<long long> split_count_from_energy(const Instance& instance,
                                                 double energy_with_offset);

/// Exhaustive comparison of the two notions of optimality: minimum QUBO
/// energy versus maximum number of split subsets.
struct LargeKFailureReport {
    int num_elements = 0;
    int num_subsets = 0;
    double min_energy_with_offset = 0.0;
    int max_num_split = 0;
    std::vector<Assignment> energy_argmins;
    std::vector<Assignment> split_argmaxes;
    /// Whether the two sets of optimizers are identical.
    bool coincide = false;
};

/// Enumerates all assignments (capacity-guarded like brute_force), collecting
/// energy argmins at 1e-9 tolerance and split-count argmaxes exactly. For
/// families with subsets larger than 3 the two optimizer sets can differ;
/// this makes that observable instead of silent.
LargeKFailureReport demonstrate_large_k_failure(const Instance& instance);

/// Deterministic text form used for golden-file comparison.
std::string format_large_k_report(const LargeKFailureReport& report);

}  // namespace setsplit

#endif  // SETSPLIT_ANALYSIS_HPP_
