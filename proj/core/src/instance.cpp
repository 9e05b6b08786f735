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

#include "setsplit/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "setsplit/errors.hpp"

namespace setsplit {

Assignment Assignment::from_mask(std::uint64_t mask, int n) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((mask >> i) & 1u);
    }
    return Assignment(std::move(bits));
}

Assignment Assignment::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c == '0' || c == '1') {
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        } else {
            std::ostringstream msg;
            msg << "assignment: invalid character '" << c << "' at position " << pos;
            throw ParseError(msg.str());
        }
    }
    return Assignment(std::move(bits));
}

Assignment Assignment::complemented() const {
    Assignment out = *this;
    for (auto& b : out.bits) b = static_cast<std::uint8_t>(1 - b);
    return out;
}

int Assignment::ones_count() const {
    int count = 0;
    for (auto b : bits) count += b;
    return count;
}

std::string Assignment::to_string() const {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(b ? '1' : '0');
    return out;
}

namespace {

void add_violation(ValidationResult& result, ViolationKind kind, std::string message) {
    result.violations.push_back(Violation{kind, std::move(message)});
}

}  // namespace

ValidationResult validate(const Instance& instance) {
    ValidationResult result;

    if (instance.num_elements <= 0) {
        add_violation(result, ViolationKind::kNonpositiveElementCount,
                      "num_elements must be positive, got " +
                          std::to_string(instance.num_elements));
    }

    for (std::size_t j = 0; j < instance.subsets.size(); ++j) {
        const auto& subset = instance.subsets[j];
        const std::string where = "subset " + std::to_string(j);

        if (subset.size() < 2) {
            add_violation(result, ViolationKind::kSubsetTooSmall,
                          where + ": cardinality " + std::to_string(subset.size()) +
                              " is below 2");
        }

        std::set<int> seen;
        for (int e : subset) {
            if (e < 0 || e >= instance.num_elements) {
                add_violation(result, ViolationKind::kIndexOutOfRange,
                              where + ": element index " + std::to_string(e) +
                                  " outside [0, " + std::to_string(instance.num_elements) +
                                  ")");
            }
            if (!seen.insert(e).second) {
                add_violation(result, ViolationKind::kDuplicateElement,
                              where + ": duplicate element index " + std::to_string(e));
            }
        }
    }

    if (instance.weights) {
        if (instance.weights->size() != instance.subsets.size()) {
            add_violation(result, ViolationKind::kWeightCountMismatch,
                          "weights count " + std::to_string(instance.weights->size()) +
                              " does not match subset count " +
                              std::to_string(instance.subsets.size()));
        }
        for (std::size_t j = 0; j < instance.weights->size(); ++j) {
            const double w = (*instance.weights)[j];
            if (!(w > 0.0)) {
                add_violation(result, ViolationKind::kNonpositiveWeight,
                              "weight " + std::to_string(j) + " must be positive");
            }
        }
    }

    return result;
}

void require_valid(const Instance& instance) {
    const auto result = validate(instance);
    if (!result.ok()) {
        throw std::invalid_argument("invalid instance: " + result.violations.front().message);
    }
}

}  // namespace setsplit
