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

#include "setsplit/instance_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>

#include "setsplit/errors.hpp"

namespace setsplit {

namespace {

using nlohmann::json;

[[noreturn]] void fail_field(const std::string& field, const std::string& reason) {
    throw ParseError("instance: field '" + field + "': " + reason);
}

int read_int_field(const json& value, const std::string& field) {
    if (!value.is_number_integer()) fail_field(field, "expected an integer");
    return value.get<int>();
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("instance: top level must be an object");

    static const char* known[] = {"num_elements", "subsets", "weights", "target"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char* k) { return key == k; }) == std::end(known)) {
            throw ParseError("instance: unknown field '" + key + "'");
        }
    }
    if (!doc.contains("num_elements")) fail_field("num_elements", "missing");
    if (!doc.contains("subsets")) fail_field("subsets", "missing");

    ParsedInstance parsed;
    parsed.instance.num_elements = read_int_field(doc["num_elements"], "num_elements");

    const json& subsets = doc["subsets"];
    if (!subsets.is_array()) fail_field("subsets", "expected a list of integer lists");
    for (std::size_t j = 0; j < subsets.size(); ++j) {
        const json& subset = subsets[j];
        if (!subset.is_array()) fail_field("subsets", "entry " + std::to_string(j) + " is not a list");
        std::vector<int> elements;
        elements.reserve(subset.size());
        for (const json& e : subset) {
            if (!e.is_number_integer())
                fail_field("subsets", "entry " + std::to_string(j) + " holds a non-integer");
            elements.push_back(e.get<int>());
        }
        parsed.instance.subsets.push_back(std::move(elements));
    }

    if (doc.contains("weights")) {
        const json& weights = doc["weights"];
        if (!weights.is_array()) fail_field("weights", "expected a list of reals");
        std::vector<double> values;
        values.reserve(weights.size());
        for (const json& w : weights) {
            if (!w.is_number()) fail_field("weights", "holds a non-numeric entry");
            values.push_back(w.get<double>());
        }
        parsed.instance.weights = std::move(values);
    }

    if (doc.contains("target")) {
        const json& target = doc["target"];
        if (!target.is_array()) fail_field("target", "expected a list of 0/1");
        std::vector<std::uint8_t> bits;
        bits.reserve(target.size());
        for (const json& b : target) {
            if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1))
                fail_field("target", "entries must be 0 or 1");
            bits.push_back(static_cast<std::uint8_t>(b.get<int>()));
        }
        if (static_cast<int>(bits.size()) != parsed.instance.num_elements)
            fail_field("target", "length differs from num_elements");
        parsed.target = Assignment(std::move(bits));
    }

    return parsed;
}

std::string format_instance(const Instance& instance,
                            const std::optional<Assignment>& target) {
    json doc;
    doc["num_elements"] = instance.num_elements;
    doc["subsets"] = instance.subsets;
    if (instance.weights) doc["weights"] = *instance.weights;
    if (target) {
        std::vector<int> bits(target->bits.begin(), target->bits.end());
        doc["target"] = bits;
    }
    return doc.dump(2) + "\n";
}

Instance parse_edge_list(std::string_view text, int num_elements) {
    Instance instance;
    int max_index = -1;

    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        int u, v;
        if (!(fields >> u >> v)) {
            throw ParseError("edge list: line " + std::to_string(line_no) +
                             ": expected two integer endpoints");
        }
        std::string extra;
        if (fields >> extra) {
            throw ParseError("edge list: line " + std::to_string(line_no) +
                             ": trailing token '" + extra + "'");
        }
        if (u < 0 || v < 0) {
            throw ParseError("edge list: line " + std::to_string(line_no) +
                             ": negative endpoint");
        }
        max_index = std::max({max_index, u, v});
        instance.subsets.push_back({std::min(u, v), std::max(u, v)});
    }

    instance.num_elements = (num_elements >= 0) ? num_elements : max_index + 1;
    return instance;
}

Assignment parse_assignment(std::string_view text) {
    // Trim the ends only; interior whitespace is a format error that
    // Assignment::from_string reports.
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("assignment: empty input");
    const auto last = text.find_last_not_of(" \t\r\n");
    return Assignment::from_string(text.substr(first, last - first + 1));
}

std::string format_assignment(const Assignment& assignment) {
    return assignment.to_string() + "\n";
}

}  // namespace setsplit
