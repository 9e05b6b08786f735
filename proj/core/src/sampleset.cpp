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

#include "setsplit/sampleset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "setsplit/errors.hpp"
#include "setsplit/qubo_io.hpp"

namespace setsplit {

double SampleSet::min_energy() const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& record : records) best = std::min(best, record.energy);
    return best;
}

std::uint64_t SampleSet::total_occurrences() const {
    std::uint64_t total = 0;
    for (const auto& record : records) total += record.occurrences;
    return total;
}

double SampleSet::occurrence_fraction_at(double energy, double tolerance) const {
    const std::uint64_t total = total_occurrences();
    if (total == 0) return 0.0;
    std::uint64_t hits = 0;
    for (const auto& record : records) {
        if (std::abs(record.energy - energy) <= tolerance) hits += record.occurrences;
    }
    return static_cast<double>(hits) / static_cast<double>(total);
}

void SampleSet::sort_records() {
    std::sort(records.begin(), records.end(),
              [](const SampleRecord& a, const SampleRecord& b) {
                  if (a.energy != b.energy) return a.energy < b.energy;
                  return a.assignment < b.assignment;
              });
}

std::string export_sampleset(const SampleSet& samples) {
    std::ostringstream out;
    out << "sampleset " << samples.num_variables << " "
        << format_double(samples.offset) << "\n";
    out << "meta name " << samples.metadata.name << "\n";
    out << "meta seed " << samples.metadata.seed << "\n";
    for (const auto& [key, value] : samples.metadata.params) {
        out << "meta param " << key << " " << value << "\n";
    }
    out << "meta wall_seconds " << format_double(samples.metadata.wall_seconds) << "\n";
    for (const auto& record : samples.records) {
        out << format_double(record.energy) << " " << record.occurrences << " "
            << record.assignment.to_string() << "\n";
    }
    return out.str();
}

namespace {

[[noreturn]] void fail_line(int line_no, const std::string& reason) {
    throw ParseError("sampleset: line " + std::to_string(line_no) + ": " + reason);
}

}  // namespace

SampleSet import_sampleset(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;

    if (!std::getline(stream, line)) throw ParseError("sampleset: empty input");
    ++line_no;

    SampleSet samples;
    {
        std::istringstream header(line);
        std::string tag;
        if (!(header >> tag >> samples.num_variables >> samples.offset) ||
            tag != "sampleset" || samples.num_variables < 0) {
            fail_line(1, "expected header 'sampleset <num_variables> <offset>'");
        }
    }

    while (std::getline(stream, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);

        if (line.rfind("meta ", 0) == 0) {
            std::string meta, key;
            fields >> meta >> key;
            if (key == "name") {
                fields >> samples.metadata.name;
            } else if (key == "seed") {
                if (!(fields >> samples.metadata.seed)) fail_line(line_no, "bad seed");
            } else if (key == "param") {
                std::string name, value;
                if (!(fields >> name >> value)) fail_line(line_no, "bad param");
                samples.metadata.params.emplace_back(name, value);
            } else if (key == "wall_seconds") {
                if (!(fields >> samples.metadata.wall_seconds))
                    fail_line(line_no, "bad wall_seconds");
            } else {
                fail_line(line_no, "unknown meta key '" + key + "'");
            }
            continue;
        }

        SampleRecord record;
        std::string bits;
        if (!(fields >> record.energy >> record.occurrences >> bits)) {
            fail_line(line_no, "expected '<energy> <occurrences> <bitstring>'");
        }
        record.assignment = Assignment::from_string(bits);
        if (record.assignment.size() != samples.num_variables) {
            fail_line(line_no, "bitstring length does not match the header");
        }
        if (record.occurrences == 0) fail_line(line_no, "occurrences must be positive");
        samples.records.push_back(std::move(record));
    }
    return samples;
}

}  // namespace setsplit
