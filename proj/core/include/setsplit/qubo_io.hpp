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

#ifndef SETSPLIT_QUBO_IO_HPP_
#define SETSPLIT_QUBO_IO_HPP_

#include <string>
#include <string_view>

#include "setsplit/qubo.hpp"

namespace setsplit {

/// QUBO interchange format (text, golden-file stable):
///   qubo <num_variables> <offset>
///   <i> <j> <value>        one line per nonzero coefficient, i <= j,
///                          ascending (i, j); i == j marks a linear term.
/// Values are printed in shortest round-trip decimal form.
std::string export_qubo(const Qubo& qubo);

/// Inverse of export_qubo. Throws ParseError naming the offending line.
Qubo import_qubo(std::string_view text);

/// Shortest decimal representation that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace setsplit

#endif  // SETSPLIT_QUBO_IO_HPP_
