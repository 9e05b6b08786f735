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

#include "setsplit/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "rng_util.hpp"

namespace setsplit {

namespace {

struct DisjointSets {
    std::vector<int> parent;
    int components;

    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)), components(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }

    bool connected() const { return components == 1; }
};

Assignment draw_target(std::mt19937_64& rng, int n) {
    // Redraw until both sides are populated.
    while (true) {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
        const int ones = static_cast<int>(std::count(bits.begin(), bits.end(), 1));
        if (ones > 0 && ones < n) return Assignment(std::move(bits));
    }
}

std::vector<std::vector<int>> cross_pairs_until_connected(std::mt19937_64& rng,
                                                          const Assignment& target,
                                                          bool allow_duplicates) {
    const int n = target.size();
    std::vector<int> side_one;
    std::vector<int> side_zero;
    for (int i = 0; i < n; ++i) {
        (target.bit(i) ? side_one : side_zero).push_back(i);
    }

    std::vector<std::vector<int>> subsets;
    DisjointSets components(n);

    if (allow_duplicates) {
        while (!components.connected()) {
            const int a = side_one[internal::uniform_below(rng, side_one.size())];
            const int b = side_zero[internal::uniform_below(rng, side_zero.size())];
            subsets.push_back({std::min(a, b), std::max(a, b)});
            components.unite(a, b);
        }
        return subsets;
    }

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(side_one.size() * side_zero.size());
    for (int a : side_one) {
        for (int b : side_zero) {
            pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    internal::shuffle(pairs, rng);

    for (const auto& [a, b] : pairs) {
        if (components.connected()) break;
        subsets.push_back({a, b});
        components.unite(a, b);
    }
    return subsets;
}

std::vector<int> draw_k_subset(std::mt19937_64& rng, int n, int k) {
    // Partial Fisher-Yates over element indices.
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) {
        const std::size_t j =
            static_cast<std::size_t>(i) +
            static_cast<std::size_t>(internal::uniform_below(rng, static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    std::vector<int> subset(pool.begin(), pool.begin() + k);
    std::sort(subset.begin(), subset.end());
    return subset;
}

std::vector<std::vector<int>> split_k_subsets_until_connected(std::mt19937_64& rng,
                                                              const Assignment& target,
                                                              int k,
                                                              bool allow_duplicates) {
    const int n = target.size();
    std::vector<std::vector<int>> subsets;
    std::set<std::vector<int>> seen;
    DisjointSets components(n);

    while (!components.connected()) {
        auto subset = draw_k_subset(rng, n, k);

        int ones = 0;
        for (int e : subset) ones += target.bit(e) ? 1 : 0;
        if (ones == 0 || ones == k) continue;  // target must split it

        if (!allow_duplicates && !seen.insert(subset).second) continue;

        for (std::size_t i = 1; i < subset.size(); ++i) {
            components.unite(subset[0], subset[i]);
        }
        subsets.push_back(std::move(subset));
    }
    return subsets;
}

}  // namespace

GeneratedInstance generate_unique_solution_instance(const GeneratorConfig& config) {
    if (config.num_elements < 2) {
        throw std::invalid_argument("generator: num_elements must be at least 2, got " +
                                    std::to_string(config.num_elements));
    }
    if (config.k < 2 || config.k > config.num_elements) {
        throw std::invalid_argument("generator: k must lie in [2, num_elements], got " +
                                    std::to_string(config.k));
    }

    std::mt19937_64 rng(config.seed);
    const Assignment target = draw_target(rng, config.num_elements);

    GeneratedInstance result;
    result.target = target;
    result.instance.num_elements = config.num_elements;
    result.unique_by_construction = (config.k == 2);

    if (config.k == 2) {
        result.instance.subsets =
            cross_pairs_until_connected(rng, target, config.allow_duplicate_subsets);
    } else {
        result.instance.subsets = split_k_subsets_until_connected(
            rng, target, config.k, config.allow_duplicate_subsets);
    }
    return result;
}

}  // namespace setsplit
