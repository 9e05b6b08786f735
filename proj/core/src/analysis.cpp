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

#include "setsplit/analysis.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "setsplit/errors.hpp"
#include "setsplit/qubo.hpp"
#include "setsplit/qubo_io.hpp"
#include "setsplit/solvers.hpp"

namespace setsplit {

SplitReport decode_and_verify(const Instance& instance, const Assignment& x) {
    if (x.size() != instance.num_elements) {
        throw std::invalid_argument("verify: assignment length " + std::to_string(x.size()) +
                                    " does not match " +
                                    std::to_string(instance.num_elements) + " elements");
    }

    SplitReport report;
    for (int i = 0; i < instance.num_elements; ++i) {
        (x.bit(i) ? report.s1 : report.s2).push_back(i);
    }

    report.per_subset.reserve(instance.subsets.size());
    for (std::size_t j = 0; j < instance.subsets.size(); ++j) {
        const auto& subset = instance.subsets[j];
        int ones = 0;
        for (int e : subset) ones += x.bit(e) ? 1 : 0;
        const bool split = ones > 0 && ones < static_cast<int>(subset.size());
        report.per_subset.push_back(SubsetStatus{split, ones});
        if (split) {
            ++report.num_split;
            report.weighted_split_sum += instance.weight(j);
        }
    }
    report.fully_split = report.num_split == static_cast<int>(instance.subsets.size());
    return report;
}

std::string format_split_report(const SplitReport& report) {
    nlohmann::json doc;
    doc["s1"] = report.s1;
    doc["s2"] = report.s2;
    nlohmann::json per_subset = nlohmann::json::array();
    for (const auto& status : report.per_subset) {
        per_subset.push_back({{"split", status.split}, {"ones_count", status.ones_count}});
    }
    doc["per_subset"] = per_subset;
    doc["num_split"] = report.num_split;
    doc["weighted_split_sum"] = report.weighted_split_sum;
    doc["fully_split"] = report.fully_split;
    return doc.dump(2) + "\n";
}

std::optional<long long> split_count_from_energy(const Instance& instance,
                                                 double energy_with_offset) {
    if (instance.weights) {
        for (double w : *instance.weights) {
            if (w != 1.0) return std::nullopt;
        }
    }

    // The identity needs every subset to sit at one of exactly two penalty
    // levels a unit gap apart: its split floor and its unsplit value. That
    // holds through cardinality 3 and breaks at 4, where differently
    // balanced splits land on different levels.
    double split_floor_sum = 0.0;
    for (const auto& subset : instance.subsets) {
        const int m = static_cast<int>(subset.size());
        if (m > 3) return std::nullopt;
        split_floor_sum += penalty_value(m, 1, 1.0);
    }

    const double unsplit_count = energy_with_offset - split_floor_sum;
    return static_cast<long long>(instance.subsets.size()) -
           std::llround(unsplit_count);
}

LargeKFailureReport demonstrate_large_k_failure(const Instance& instance) {
    require_valid(instance);
    if (instance.num_elements > kBruteForceMaxVariables) {
        throw CapacityError("large-k demonstration: " +
                            std::to_string(instance.num_elements) +
                            " elements exceed the exhaustive limit of " +
                            std::to_string(kBruteForceMaxVariables));
    }

    const Qubo qubo = build_qubo(instance);
    const std::uint64_t count = 1ULL << instance.num_elements;
    constexpr double kTieTolerance = 1e-9;

    LargeKFailureReport report;
    report.num_elements = instance.num_elements;
    report.num_subsets = static_cast<int>(instance.subsets.size());

    double min_energy = std::numeric_limits<double>::infinity();
    int max_split = -1;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        const Assignment x = Assignment::from_mask(mask, instance.num_elements);
        const double energy = qubo.energy(x, true);
        const int num_split = decode_and_verify(instance, x).num_split;

        if (energy < min_energy - kTieTolerance) {
            min_energy = energy;
            report.energy_argmins.clear();
        }
        if (energy <= min_energy + kTieTolerance) {
            min_energy = std::min(min_energy, energy);
            report.energy_argmins.push_back(x);
        }

        if (num_split > max_split) {
            max_split = num_split;
            report.split_argmaxes.clear();
        }
        if (num_split == max_split) {
            report.split_argmaxes.push_back(x);
        }
    }

    // A late drop of the minimum can leave earlier near-ties stale.
    std::erase_if(report.energy_argmins, [&](const Assignment& x) {
        return qubo.energy(x, true) > min_energy + kTieTolerance;
    });
    std::sort(report.energy_argmins.begin(), report.energy_argmins.end());
    std::sort(report.split_argmaxes.begin(), report.split_argmaxes.end());

    report.min_energy_with_offset = min_energy;
    report.max_num_split = max_split;
    report.coincide = report.energy_argmins == report.split_argmaxes;
    return report;
}

std::string format_large_k_report(const LargeKFailureReport& report) {
    std::ostringstream out;
    out << "large_k_failure_report\n";
    out << "num_elements " << report.num_elements << "\n";
    out << "num_subsets " << report.num_subsets << "\n";
    out << "min_energy_with_offset " << format_double(report.min_energy_with_offset) << "\n";
    out << "max_num_split " << report.max_num_split << "\n";
    out << "energy_argmin_count " << report.energy_argmins.size() << "\n";
    for (const auto& x : report.energy_argmins) {
        out << "energy_argmin " << x.to_string() << "\n";
    }
    out << "split_argmax_count " << report.split_argmaxes.size() << "\n";
    for (const auto& x : report.split_argmaxes) {
        out << "split_argmax " << x.to_string() << "\n";
    }
    out << "argmins_equal_argmaxes " << (report.coincide ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace setsplit
