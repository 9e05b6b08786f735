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

#include "setsplit/qubo_io.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <system_error>

#include "setsplit/errors.hpp"

namespace setsplit {

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

namespace {

double parse_double_token(const std::string& token, int line_no, const char* what) {
    double value = 0.0;
    const auto result = std::from_chars(token.data(), token.data() + token.size(), value);
    if (result.ec != std::errc{} || result.ptr != token.data() + token.size()) {
        throw ParseError("qubo: line " + std::to_string(line_no) + ": bad " + what +
                         " '" + token + "'");
    }
    return value;
}

long parse_int_token(const std::string& token, int line_no, const char* what) {
    long value = 0;
    const auto result = std::from_chars(token.data(), token.data() + token.size(), value);
    if (result.ec != std::errc{} || result.ptr != token.data() + token.size()) {
        throw ParseError("qubo: line " + std::to_string(line_no) + ": bad " + what +
                         " '" + token + "'");
    }
    return value;
}

}  // namespace

std::string export_qubo(const Qubo& qubo) {
    std::ostringstream out;
    out << "qubo " << qubo.num_variables() << " " << format_double(qubo.offset()) << "\n";

    // Linear (i, i) and quadratic (i, j) entries interleave in ascending
    // (i, j) order.
    auto linear = qubo.linear_terms().begin();
    const auto linear_end = qubo.linear_terms().end();
    auto quad = qubo.quadratic_terms().begin();
    const auto quad_end = qubo.quadratic_terms().end();

    while (linear != linear_end || quad != quad_end) {
        const bool linear_next =
            quad == quad_end ||
            (linear != linear_end &&
             Qubo::Key{linear->first, linear->first} < quad->first);
        if (linear_next) {
            out << linear->first << " " << linear->first << " "
                << format_double(linear->second) << "\n";
            ++linear;
        } else {
            out << quad->first.first << " " << quad->first.second << " "
                << format_double(quad->second) << "\n";
            ++quad;
        }
    }
    return out.str();
}

Qubo import_qubo(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;

    if (!std::getline(stream, line)) throw ParseError("qubo: empty input");
    ++line_no;

    std::istringstream header(line);
    std::string tag, vars_token, offset_token;
    if (!(header >> tag >> vars_token >> offset_token) || tag != "qubo") {
        throw ParseError("qubo: line 1: expected header 'qubo <num_variables> <offset>'");
    }
    std::string extra;
    if (header >> extra) {
        throw ParseError("qubo: line 1: trailing token '" + extra + "'");
    }

    const long num_variables = parse_int_token(vars_token, 1, "variable count");
    if (num_variables <= 0) throw ParseError("qubo: line 1: variable count must be positive");
    Qubo qubo(static_cast<int>(num_variables));
    qubo.set_offset(parse_double_token(offset_token, 1, "offset"));

    while (std::getline(stream, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string i_token, j_token, value_token;
        if (!(fields >> i_token)) continue;  // ignore blank lines
        if (!(fields >> j_token >> value_token)) {
            throw ParseError("qubo: line " + std::to_string(line_no) +
                             ": expected 'i j value'");
        }
        if (fields >> extra) {
            throw ParseError("qubo: line " + std::to_string(line_no) +
                             ": trailing token '" + extra + "'");
        }
        const long i = parse_int_token(i_token, line_no, "row index");
        const long j = parse_int_token(j_token, line_no, "column index");
        const double value = parse_double_token(value_token, line_no, "value");
        if (i < 0 || j < 0 || i >= num_variables || j >= num_variables || i > j) {
            throw ParseError("qubo: line " + std::to_string(line_no) +
                             ": indices must satisfy 0 <= i <= j < num_variables");
        }
        if (i == j) {
            qubo.add_linear(static_cast<int>(i), value);
        } else {
            qubo.add_quadratic(static_cast<int>(i), static_cast<int>(j), value);
        }
    }
    return qubo;
}

}  // namespace setsplit
