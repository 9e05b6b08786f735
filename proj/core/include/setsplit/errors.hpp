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

#ifndef SETSPLIT_ERRORS_HPP_
#define SETSPLIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace setsplit {

/// Malformed input text (instance, QUBO, assignment or sample-set files).
/// The message names the offending line or field.
class ParseError : public std::runtime_error {
 public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an exhaustive operation would enumerate too many assignments.
class CapacityError : public std::runtime_error {
 public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace setsplit

#endif  // SETSPLIT_ERRORS_HPP_
