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

#include "setsplit/qubo.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace setsplit {

namespace {

void check_index(int i, int num_variables) {
    if (i < 0 || i >= num_variables) {
        throw std::out_of_range("qubo: variable index " + std::to_string(i) +
                                " outside [0, " + std::to_string(num_variables) + ")");
    }
}

}  // namespace

Qubo::Qubo(int num_variables) : num_variables_(num_variables) {
    if (num_variables <= 0) {
        throw std::invalid_argument("qubo: num_variables must be positive, got " +
                                    std::to_string(num_variables));
    }
}

void Qubo::add_linear(int i, double value) {
    check_index(i, num_variables_);
    const double merged = linear_[i] + value;
    if (merged == 0.0) {
        linear_.erase(i);
    } else {
        linear_[i] = merged;
    }
}

void Qubo::add_quadratic(int i, int j, double value) {
    check_index(i, num_variables_);
    check_index(j, num_variables_);
    if (i == j) {
        throw std::invalid_argument("qubo: quadratic key requires distinct indices, got (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    const Key key{std::min(i, j), std::max(i, j)};
    const double merged = quadratic_[key] + value;
    if (merged == 0.0) {
        quadratic_.erase(key);
    } else {
        quadratic_[key] = merged;
    }
}

double Qubo::linear(int i) const {
    check_index(i, num_variables_);
    const auto it = linear_.find(i);
    return it == linear_.end() ? 0.0 : it->second;
}

double Qubo::quadratic(int i, int j) const {
    check_index(i, num_variables_);
    check_index(j, num_variables_);
    const auto it = quadratic_.find(Key{std::min(i, j), std::max(i, j)});
    return it == quadratic_.end() ? 0.0 : it->second;
}

double Qubo::energy(const Assignment& x, bool include_offset) const {
    if (x.size() != num_variables_) {
        throw std::invalid_argument("qubo: assignment length " + std::to_string(x.size()) +
                                    " does not match " + std::to_string(num_variables_) +
                                    " variables");
    }
    double total = 0.0;
    for (const auto& [i, coeff] : linear_) {
        if (x.bit(i)) total += coeff;
    }
    for (const auto& [key, coeff] : quadratic_) {
        if (x.bit(key.first) && x.bit(key.second)) total += coeff;
    }
    return include_offset ? total + offset_ : total;
}

Qubo build_qubo(const Instance& instance) {
    require_valid(instance);

    Qubo qubo(instance.num_elements);
    for (std::size_t j = 0; j < instance.subsets.size(); ++j) {
        const auto& subset = instance.subsets[j];
        const int m = static_cast<int>(subset.size());
        const double scale = instance.weight(j) / static_cast<double>(m - 1);

        for (std::size_t a = 0; a < subset.size(); ++a) {
            for (std::size_t b = a + 1; b < subset.size(); ++b) {
                // scale * [x_a x_b + (1-x_a)(1-x_b)]
                //   = 2*scale x_a x_b - scale x_a - scale x_b + scale
                qubo.add_quadratic(subset[a], subset[b], 2.0 * scale);
                qubo.add_linear(subset[a], -scale);
                qubo.add_linear(subset[b], -scale);
                qubo.add_offset(scale);
            }
        }
    }
    return qubo;
}

double penalty_value(int cardinality, int ones, double weight) {
    const auto choose2 = [](int c) { return static_cast<double>(c) * (c - 1) / 2.0; };
    return weight / static_cast<double>(cardinality - 1) *
           (choose2(ones) + choose2(cardinality - ones));
}

double subset_penalty(const std::vector<int>& subset, double weight, const Assignment& x) {
    int ones = 0;
    for (int e : subset) ones += x.bit(e) ? 1 : 0;
    return penalty_value(static_cast<int>(subset.size()), ones, weight);
}

}  // namespace setsplit
