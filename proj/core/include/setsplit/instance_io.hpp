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

#ifndef SETSPLIT_INSTANCE_IO_HPP_
#define SETSPLIT_INSTANCE_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "setsplit/instance.hpp"

namespace setsplit {

/// An instance file can embed the assignment it was planted with.
struct ParsedInstance {
    Instance instance;
    std::optional<Assignment> target;
};

/// Instance file format: a UTF-8 JSON object with fields
///   num_elements : integer
///   subsets      : list of integer lists
///   weights      : list of reals (optional)
///   target       : list of 0/1 (optional)
/// Field order is irrelevant; unknown fields are rejected by name.
ParsedInstance parse_instance(std::string_view text);

/// Canonical serialization: keys sorted, two-space indent, trailing newline.
/// parse_instance(format_instance(x)) reproduces x exactly.
std::string format_instance(const Instance& instance,
                            const std::optional<Assignment>& target = std::nullopt);

/// Edge-list import for k = 2 families: lines `u v` (comments with '#');
/// num_elements is 1 + the largest endpoint unless a larger value is given.
Instance parse_edge_list(std::string_view text, int num_elements = -1);

/// Assignment sidecar format: a single line of '0'/'1' characters.
Assignment parse_assignment(std::string_view text);
std::string format_assignment(const Assignment& assignment);

}  // namespace setsplit

#endif  // SETSPLIT_INSTANCE_IO_HPP_
