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

// End-to-end coverage of the command-line tool: every suite here launches
// the real binary and inspects files and exit statuses, never internals.

#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "setsplit/instance_io.hpp"
#include "setsplit/sampleset.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;

namespace {

struct CliRun {
    int status = -1;
    std::string out;
    std::string err;
};

fs::path session_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("setsplit_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path fresh_dir(const std::string& label) {
    static int counter = 0;
    fs::path d = session_dir() / (label + "_" + std::to_string(counter++));
    fs::create_directories(d);
    return d;
}

CliRun run_cli(const std::string& args) {
    const fs::path dir = fresh_dir("run");
    const fs::path out_path = dir / "stdout.txt";
    const fs::path err_path = dir / "stderr.txt";
    const std::string command = std::string(SETSPLIT_CLI_PATH) + " " + args + " >" +
                                out_path.string() + " 2>" + err_path.string();
    const int raw = std::system(command.c_str());
    CliRun result;
    REQUIRE(raw != -1);
    REQUIRE(WIFEXITED(raw));
    result.status = WEXITSTATUS(raw);
    result.out = testutil::read_file(out_path.string());
    result.err = testutil::read_file(err_path.string());
    return result;
}

}  // namespace

TEST_CASE("pipeline closes: generate, build, solve, verify") {
    for (int size : {8, 14, 20}) {
        const fs::path dir = fresh_dir("pipeline");
        const std::string instance = (dir / "instance.json").string();
        const std::string qubo = (dir / "problem.qubo").string();
        const std::string samples = (dir / "samples.txt").string();

        CliRun gen = run_cli("generate --size " + std::to_string(size) +
                             " --k 2 --seed 3 --out " + instance);
        REQUIRE(gen.status == 0);
        CHECK(gen.out.find("unique=guaranteed") != std::string::npos);
        CHECK(fs::exists(instance));
        CHECK(fs::exists(instance + ".target"));

        CliRun build = run_cli("build --instance " + instance + " --out " + qubo);
        REQUIRE(build.status == 0);
        CHECK(build.out.find("variables=" + std::to_string(size)) != std::string::npos);

        CliRun solve = run_cli("solve --qubo " + qubo + " --solver brute --out " + samples);
        REQUIRE(solve.status == 0);

        // The planted target is fully split, and so is the best sample.
        CliRun verify_target = run_cli("verify --instance " + instance +
                                       " --assignment " + instance + ".target");
        CHECK(verify_target.status == 0);
        CliRun verify_best =
            run_cli("verify --instance " + instance + " --sampleset " + samples);
        CHECK(verify_best.status == 0);

        const nlohmann::json doc = nlohmann::json::parse(verify_best.out);
        CHECK(doc["fully_split"] == true);
        CHECK(doc["num_split"].get<int>() ==
              static_cast<int>(setsplit::parse_instance(
                                   testutil::read_file(instance)).instance.num_subsets()));
    }
}

TEST_CASE("annealing pipeline splits a planted instance") {
    const fs::path dir = fresh_dir("anneal");
    const std::string instance = (dir / "instance.json").string();
    const std::string qubo = (dir / "problem.qubo").string();
    const std::string samples = (dir / "samples.txt").string();

    REQUIRE(run_cli("generate --size 18 --seed 9 --out " + instance).status == 0);
    REQUIRE(run_cli("build --instance " + instance + " --out " + qubo).status == 0);
    REQUIRE(run_cli("solve --qubo " + qubo +
                    " --solver anneal --reads 200 --seed 4 --out " + samples)
                .status == 0);
    CHECK(run_cli("verify --instance " + instance + " --sampleset " + samples).status == 0);
}

TEST_CASE("generation is byte-identical for identical seeds") {
    const fs::path dir = fresh_dir("determinism");
    const std::string a = (dir / "a.json").string();
    const std::string b = (dir / "b.json").string();
    const std::string c = (dir / "c.json").string();

    REQUIRE(run_cli("generate --size 40 --k 3 --seed 11 --out " + a).status == 0);
    REQUIRE(run_cli("generate --size 40 --k 3 --seed 11 --out " + b).status == 0);
    REQUIRE(run_cli("generate --size 40 --k 3 --seed 12 --out " + c).status == 0);

    CHECK(testutil::read_file(a) == testutil::read_file(b));
    CHECK(testutil::read_file(a + ".target") == testutil::read_file(b + ".target"));
    CHECK(testutil::read_file(a) != testutil::read_file(c));
}

TEST_CASE("build reproduces the golden interchange bytes") {
    const fs::path dir = fresh_dir("golden");
    const std::string out = (dir / "out.qubo").string();
    REQUIRE(run_cli("build --instance " + testutil::fixture_path("worked_example.json") +
                    " --out " + out)
                .status == 0);
    CHECK(testutil::read_file(out) ==
          testutil::read_file(testutil::fixture_path("worked_example.qubo")));
}

TEST_CASE("build accepts edge lists") {
    const fs::path dir = fresh_dir("edges");
    const std::string edges = (dir / "graph.txt").string();
    const std::string qubo = (dir / "graph.qubo").string();
    const std::string assignment = (dir / "x.txt").string();
    testutil::write_file(edges, "# path graph\n0 1\n1 2\n");
    testutil::write_file(assignment, "010\n");

    REQUIRE(run_cli("build --edge-list --instance " + edges + " --out " + qubo).status == 0);
    CHECK(testutil::read_file(qubo).rfind("qubo 3 2\n", 0) == 0);

    CHECK(run_cli("verify --edge-list --instance " + edges + " --assignment " + assignment)
              .status == 0);
}

TEST_CASE("verify distinguishes not-split from operational failure") {
    const fs::path dir = fresh_dir("status");
    const std::string bad_assignment = (dir / "zeros.txt").string();
    testutil::write_file(bad_assignment, "00000\n");

    // Valid inputs, split fails: status 1 with a readable report.
    CliRun not_split =
        run_cli("verify --instance " + testutil::fixture_path("worked_example.json") +
                " --assignment " + bad_assignment);
    CHECK(not_split.status == 1);
    const nlohmann::json doc = nlohmann::json::parse(not_split.out);
    CHECK(doc["fully_split"] == false);
    CHECK(doc["num_split"] == 0);

    // Operational problems: status 2.
    CHECK(run_cli("verify --instance /nonexistent.json --assignment " + bad_assignment)
              .status == 2);
    CHECK(run_cli("verify --instance " + testutil::fixture_path("worked_example.json"))
              .status == 2);

    const std::string malformed = (dir / "malformed.json").string();
    testutil::write_file(malformed, "{\"num_elements\": 5}");
    CHECK(run_cli("verify --instance " + malformed + " --assignment " + bad_assignment)
              .status == 2);

    const std::string invalid = (dir / "invalid.json").string();
    testutil::write_file(invalid, "{\"num_elements\": 3, \"subsets\": [[0, 9]]}");
    CHECK(run_cli("build --instance " + invalid + " --out " + (dir / "x.qubo").string())
              .status == 2);
}

TEST_CASE("usage errors exit with the operational status") {
    CHECK(run_cli("generate --size 1 --out /tmp/too_small.json").status == 2);
    CHECK(run_cli("generate --out /tmp/missing_size.json").status == 2);
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("solve --qubo /nonexistent.qubo --out /tmp/x.txt").status == 2);
    CHECK(run_cli("solve --qubo x --out y --solver quantum").status == 2);
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("generate --help").status == 0);
}

TEST_CASE("solve writes importable sample sets and hist conserves reads") {
    const fs::path dir = fresh_dir("hist");
    const std::string qubo = (dir / "p.qubo").string();
    const std::string samples = (dir / "s.txt").string();
    const std::string csv = (dir / "h.csv").string();

    REQUIRE(run_cli("build --instance " + testutil::fixture_path("worked_example.json") +
                    " --out " + qubo)
                .status == 0);
    REQUIRE(run_cli("solve --qubo " + qubo +
                    " --solver anneal --reads 300 --seed 8 --out " + samples)
                .status == 0);

    const setsplit::SampleSet parsed =
        setsplit::import_sampleset(testutil::read_file(samples));
    CHECK(parsed.num_variables == 5);
    CHECK(parsed.total_occurrences() == 300);

    REQUIRE(run_cli("hist --sampleset " + samples + " --csv " + csv).status == 0);
    std::istringstream lines(testutil::read_file(csv));
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "energy,occurrences");
    std::uint64_t total = 0;
    while (std::getline(lines, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        total += std::stoull(line.substr(comma + 1));
    }
    CHECK(total == 300);

    // Bar chart mode reports to stdout without disturbing the counts.
    CliRun bars = run_cli("hist --sampleset " + samples + " --bars");
    CHECK(bars.status == 0);
    CHECK(bars.out.find('#') != std::string::npos);
}

TEST_CASE("solve records the full spectrum on request") {
    const fs::path dir = fresh_dir("spectrum");
    const std::string qubo = (dir / "p.qubo").string();
    const std::string samples = (dir / "s.txt").string();

    REQUIRE(run_cli("build --instance " + testutil::fixture_path("worked_example.json") +
                    " --out " + qubo)
                .status == 0);
    REQUIRE(run_cli("solve --qubo " + qubo + " --solver brute --spectrum --out " + samples)
                .status == 0);
    const setsplit::SampleSet parsed =
        setsplit::import_sampleset(testutil::read_file(samples));
    CHECK(parsed.records.size() == 32);
    CHECK(parsed.min_energy() == -3.0);
}

TEST_CASE("bench emits one csv row per size and seed") {
    const fs::path dir = fresh_dir("bench");
    const std::string csv = (dir / "bench.csv").string();

    CliRun bench = run_cli("bench --sizes 6,9 --seeds 1,2 --solver brute --csv " + csv);
    REQUIRE(bench.status == 0);
    CHECK(bench.out.find("problem_size") != std::string::npos);

    std::istringstream lines(testutil::read_file(csv));
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line ==
          "problem_size,logical_variables,solver,wall_ms,ground_energy,"
          "ground_hit_fraction");
    std::vector<std::vector<std::string>> rows;
    while (std::getline(lines, line)) {
        std::vector<std::string> fields;
        std::istringstream in(line);
        std::string field;
        while (std::getline(in, field, ',')) fields.push_back(field);
        REQUIRE(fields.size() == 6);
        rows.push_back(fields);
    }
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
        // One logical variable per element, and the exact solver always
        // hits the planted optimum on pair instances.
        CHECK(row[0] == row[1]);
        CHECK(row[2] == "brute");
        CHECK(row[5] == "1");
    }
    CHECK(rows[0][0] == "6");
    CHECK(rows[2][0] == "9");
}
