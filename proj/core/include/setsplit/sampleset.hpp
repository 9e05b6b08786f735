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

#ifndef SETSPLIT_SAMPLESET_HPP_
#define SETSPLIT_SAMPLESET_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setsplit/instance.hpp"

namespace setsplit {

struct SampleRecord {
    Assignment assignment;
    /// Energy without offset, recomputable exactly from the assignment.
    double energy = 0.0;
    std::uint64_t occurrences = 1;
};

struct SamplerInfo {
    std::string name;
    std::uint64_t seed = 0;
    /// Schedule parameters and other sampler settings, in export order.
    std::vector<std::pair<std::string, std::string>> params;
    /// Wall-clock duration of the sampling call. Informational; not part of
    /// the deterministic content.
    double wall_seconds = 0.0;
};

/// Occurrence-counted samples sorted by ascending energy, ties broken by
/// lexicographic assignment. Occurrences over all records sum to the number
/// of reads performed.
struct SampleSet {
    int num_variables = 0;
    double offset = 0.0;
    std::vector<SampleRecord> records;
    SamplerInfo metadata;

    double min_energy() const;
    std::uint64_t total_occurrences() const;

    /// Occurrences of records within `tolerance` of `energy`, as a fraction
    /// of all occurrences.
    double occurrence_fraction_at(double energy, double tolerance = 1e-9) const;

    /// Establishes the canonical record order.
    void sort_records();
};

/// Sample-set file format (text):
///   sampleset <num_variables> <offset>
///   meta name <sampler>
///   meta seed <seed>
///   meta param <key> <value>     (one line per schedule parameter)
///   meta wall_seconds <value>
///   <energy> <occurrences> <bitstring>   one line per record
std::string export_sampleset(const SampleSet& samples);

/// Inverse of export_sampleset. Throws ParseError naming the offending line.
SampleSet import_sampleset(std::string_view text);

}  // namespace setsplit

#endif  // SETSPLIT_SAMPLESET_HPP_
