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

#ifndef SETSPLIT_GENERATOR_HPP_
#define SETSPLIT_GENERATOR_HPP_

#include <cstdint>

#include "setsplit/instance.hpp"

namespace setsplit {

struct GeneratorConfig {
    int num_elements = 0;
    int k = 2;
    std::uint64_t seed = 0;
    bool allow_duplicate_subsets = false;
};

struct GeneratedInstance {
    Instance instance;
    Assignment target;
    /// True iff the construction proves the target (and its complement) are
    /// the only assignments splitting every subset. Holds for k == 2; for
    /// k >= 3 uniqueness is not promised and must be checked externally.
    bool unique_by_construction = false;
};

/// Builds an instance with a planted target assignment that splits every
/// subset.
///
/// The target partition is drawn uniformly at random (redrawn if one side is
/// empty). For k == 2 the subsets are cross-partition pairs added until the
/// resulting graph is connected; a connected graph has exactly one proper
/// 2-coloring up to global complement, so the target is the unique solution.
/// For k >= 3, subsets are sampled uniformly among k-subsets, kept only when
/// the target splits them, and added until the element-sharing graph is
/// connected.
///
/// `allow_duplicate_subsets` switches sampling with replacement on, matching
/// the multiset semantics of Instance. Deterministic given the seed,
/// independent of platform.
///
/// Throws std::invalid_argument when num_elements < 2 or k is out of
/// [2, num_elements].
GeneratedInstance generate_unique_solution_instance(const GeneratorConfig& config);

}  // namespace setsplit

#endif  // SETSPLIT_GENERATOR_HPP_
