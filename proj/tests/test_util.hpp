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

// Shared helpers for the test suites.  The penalty oracle here is written
// directly from the objective definition (literal sum over element pairs)
// so it shares no code with the builder it checks.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "setsplit/instance.hpp"

namespace testutil {

// Independent objective evaluator: for each subset of cardinality m and
// weight W, every unordered element pair {a, b} inside it contributes
// W/(m-1) * (x_a x_b + (1-x_a)(1-x_b)).  Includes the constant part by
// construction, so it is comparable to Qubo::energy(x, true).
inline double direct_penalty_sum(const setsplit::Instance& inst,
                                 const setsplit::Assignment& x) {
    double total = 0.0;
    for (std::size_t j = 0; j < inst.num_subsets(); ++j) {
        const auto& subset = inst.subsets[j];
        const double m = static_cast<double>(subset.size());
        const double scale = inst.weight(j) / (m - 1.0);
        for (std::size_t a = 0; a < subset.size(); ++a) {
            for (std::size_t b = a + 1; b < subset.size(); ++b) {
                const double xa = x.bit(subset[a]) ? 1.0 : 0.0;
                const double xb = x.bit(subset[b]) ? 1.0 : 0.0;
                total += scale * (xa * xb + (1.0 - xa) * (1.0 - xb));
            }
        }
    }
    return total;
}

// True when every subset of the instance contains elements from both sides
// of the assignment.  Written as a direct scan so tests do not depend on
// the analysis module to judge the generator or the solvers.
inline bool splits_every_subset(const setsplit::Instance& inst,
                                const setsplit::Assignment& x) {
    for (const auto& subset : inst.subsets) {
        int ones = 0;
        for (int e : subset) ones += x.bit(e) ? 1 : 0;
        if (ones == 0 || ones == static_cast<int>(subset.size())) return false;
    }
    return true;
}

inline int count_splitting_assignments(const setsplit::Instance& inst) {
    if (inst.num_elements > 20) throw std::runtime_error("scan too large");
    int count = 0;
    const std::uint64_t limit = std::uint64_t{1} << inst.num_elements;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (splits_every_subset(
                inst, setsplit::Assignment::from_mask(mask, inst.num_elements)))
            ++count;
    }
    return count;
}

struct RandomInstanceOptions {
    int min_elements = 4;
    int max_elements = 12;
    int min_subsets = 1;
    int max_subsets = 8;
    int min_cardinality = 2;
    int max_cardinality = 3;
    bool weighted = false;
};

// Draws a valid instance: distinct in-range elements per subset, optional
// positive weights.  Duplicate subsets are allowed; the model permits them.
inline setsplit::Instance random_instance(std::mt19937_64& rng,
                                          const RandomInstanceOptions& opts) {
    auto draw = [&rng](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    setsplit::Instance inst;
    inst.num_elements = draw(opts.min_elements, opts.max_elements);
    const int num_subsets = draw(opts.min_subsets, opts.max_subsets);
    for (int j = 0; j < num_subsets; ++j) {
        const int hi = std::min(opts.max_cardinality, inst.num_elements);
        const int m = draw(std::min(opts.min_cardinality, hi), hi);
        std::set<int> members;
        while (static_cast<int>(members.size()) < m)
            members.insert(draw(0, inst.num_elements - 1));
        inst.subsets.emplace_back(members.begin(), members.end());
    }
    if (opts.weighted) {
        std::vector<double> weights;
        for (int j = 0; j < num_subsets; ++j)
            weights.push_back(0.25 * draw(1, 16));
        inst.weights = std::move(weights);
    }
    return inst;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(SETSPLIT_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace testutil
