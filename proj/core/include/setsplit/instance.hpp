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

#ifndef SETSPLIT_INSTANCE_HPP_
#define SETSPLIT_INSTANCE_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace setsplit {

/// A Set Splitting instance: a ground set of `num_elements` elements
/// (identified by their indices) and a family of subsets over it.
///
/// The family has multiset semantics: duplicate subsets are permitted and
/// their penalty contributions accumulate. Optional per-subset weights turn
/// the instance into a Weighted Set Splitting problem; absent weights mean
/// weight 1 everywhere.
struct Instance {
    int num_elements = 0;
    std::vector<std::vector<int>> subsets;
    std::optional<std::vector<double>> weights;

    std::size_t num_subsets() const { return subsets.size(); }

    /// Weight of subset `j`; 1 when the instance is unweighted.
    double weight(std::size_t j) const {
        return weights ? (*weights)[j] : 1.0;
    }
};

/// A two-partition of the ground set encoded as a bit per element:
/// bit i == 1 places element i in the first side, 0 in the second.
struct Assignment {
    std::vector<std::uint8_t> bits;

    Assignment() = default;
    explicit Assignment(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

    static Assignment zeros(int n) {
        return Assignment(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
    }

    /// Bits taken from the low `n` bits of `mask`; bit i of the mask is
    /// element i.
    static Assignment from_mask(std::uint64_t mask, int n);

    /// Parses a string of '0'/'1' characters. Throws ParseError otherwise.
    static Assignment from_string(std::string_view text);

    int size() const { return static_cast<int>(bits.size()); }
    bool bit(int i) const { return bits[static_cast<std::size_t>(i)] != 0; }

    Assignment complemented() const;
    int ones_count() const;
    std::string to_string() const;

    auto operator<=>(const Assignment&) const = default;
};

enum class ViolationKind {
    kNonpositiveElementCount,
    kIndexOutOfRange,
    kSubsetTooSmall,
    kDuplicateElement,
    kWeightCountMismatch,
    kNonpositiveWeight,
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

/// Violations are data, not failures: an empty list means the instance is
/// structurally sound.
struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

ValidationResult validate(const Instance& instance);

/// Throws std::invalid_argument carrying the first violation message.
void require_valid(const Instance& instance);

}  // namespace setsplit

#endif  // SETSPLIT_INSTANCE_HPP_
