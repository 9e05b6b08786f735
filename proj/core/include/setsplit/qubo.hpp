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

#ifndef SETSPLIT_QUBO_HPP_
#define SETSPLIT_QUBO_HPP_

#include <map>
#include <utility>
#include <vector>

#include "setsplit/instance.hpp"

namespace setsplit {

/// A quadratic unconstrained binary optimization problem in upper-triangular
/// form: minimize sum_i Q[i,i] x_i + sum_{i<j} Q[i,j] x_i x_j over binary x.
///
/// The constant term produced by expanding (1-x_a)(1-x_b) penalties is kept
/// in `offset` so that energy-with-offset equals the exact penalty sum.
/// Coefficients accumulate additively and entries that cancel to zero are
/// dropped; iteration order over the maps is the canonical (ascending key)
/// order used by the interchange format.
class Qubo {
 public:
    using Key = std::pair<int, int>;

    Qubo() = default;
    explicit Qubo(int num_variables);

    int num_variables() const { return num_variables_; }

    double offset() const { return offset_; }
    void add_offset(double value) { offset_ += value; }
    void set_offset(double value) { offset_ = value; }

    /// Accumulates onto Q[i,i]. Throws std::out_of_range on a bad index.
    void add_linear(int i, double value);
    /// Accumulates onto Q[min(i,j), max(i,j)]. Requires i != j.
    void add_quadratic(int i, int j, double value);

    double linear(int i) const;
    double quadratic(int i, int j) const;

    const std::map<int, double>& linear_terms() const { return linear_; }
    const std::map<Key, double>& quadratic_terms() const { return quadratic_; }

    std::size_t num_interactions() const { return quadratic_.size(); }

    /// Energy of `x`, optionally shifted by the tracked offset. Summation
    /// order is fixed (ascending keys), so results are reproducible bit for
    /// bit. Throws std::invalid_argument on length mismatch.
    double energy(const Assignment& x, bool include_offset) const;

    bool operator==(const Qubo&) const = default;

 private:
    int num_variables_ = 0;
    double offset_ = 0.0;
    std::map<int, double> linear_;
    std::map<Key, double> quadratic_;
};

/// Compiles an instance into its penalty QUBO.
///
/// Every subset of cardinality m and weight W contributes, for each
/// unordered element pair (a, b) inside it,
///   W/(m-1) * [x_a x_b + (1-x_a)(1-x_b)]
/// expanded as +2W/(m-1) on the (a,b) coupling, -W/(m-1) on each of the two
/// linear terms, and +W/(m-1) on the offset. Repeated pairs accumulate.
/// Throws std::invalid_argument when the instance fails validation.
Qubo build_qubo(const Instance& instance);

/// Exact penalty of one subset under `x`, in closed form:
///   W/(m-1) * [C(a,2) + C(m-a,2)]   with a = ones among the subset.
/// This is the subset's exact contribution to energy-with-offset.
double subset_penalty(const std::vector<int>& subset, double weight, const Assignment& x);

/// Closed-form penalty for a cardinality-m subset with `ones` members on the
/// one side; the single source of truth for per-cardinality penalty levels.
double penalty_value(int cardinality, int ones, double weight);

}  // namespace setsplit

#endif  // SETSPLIT_QUBO_HPP_
