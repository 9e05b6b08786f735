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

// Batch CLI over the setsplit core: generate benchmark instances, compile
// them to QUBO files, solve with the exact or annealing sampler, verify
// partitions, benchmark scaling, and dump energy histograms.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "setsplit/analysis.hpp"
#include "setsplit/errors.hpp"
#include "setsplit/generator.hpp"
#include "setsplit/instance_io.hpp"
#include "setsplit/qubo.hpp"
#include "setsplit/qubo_io.hpp"
#include "setsplit/sampleset.hpp"
#include "setsplit/solvers.hpp"

namespace {

// Exit status contract: 0 success (verify: fully split), 1 valid input but
// not fully split (verify only), 2 operational failures of any kind.
constexpr int kExitOk = 0;
constexpr int kExitNotSplit = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

setsplit::Instance load_instance(const std::string& path, bool edge_list) {
    const std::string text = read_file(path);
    setsplit::Instance instance = edge_list
                                      ? setsplit::parse_edge_list(text)
                                      : setsplit::parse_instance(text).instance;
    const auto validation = setsplit::validate(instance);
    if (!validation.ok()) {
        std::ostringstream msg;
        msg << "instance '" << path << "' is invalid:";
        for (const auto& violation : validation.violations) {
            msg << "\n  - " << violation.message;
        }
        throw std::runtime_error(msg.str());
    }
    return instance;
}

struct GenerateArgs {
    int size = 0;
    int k = 2;
    std::uint64_t seed = 0;
    std::string out;
    bool allow_duplicate_subsets = false;
};

int cmd_generate(const GenerateArgs& args) {
    setsplit::GeneratorConfig config;
    config.num_elements = args.size;
    config.k = args.k;
    config.seed = args.seed;
    config.allow_duplicate_subsets = args.allow_duplicate_subsets;

    const auto generated = setsplit::generate_unique_solution_instance(config);
    const std::string target_path = args.out + ".target";

    write_file(args.out, setsplit::format_instance(generated.instance));
    write_file(target_path, setsplit::format_assignment(generated.target));

    std::cout << "generated num_elements=" << args.size << " k=" << args.k
              << " num_subsets=" << generated.instance.num_subsets()
              << " seed=" << args.seed << " unique="
              << (generated.unique_by_construction ? "guaranteed" : "not-guaranteed")
              << " -> " << args.out << " (target " << target_path << ")\n";
    return kExitOk;
}

struct BuildArgs {
    std::string instance_path;
    std::string out;
    bool edge_list = false;
};

int cmd_build(const BuildArgs& args) {
    const auto instance = load_instance(args.instance_path, args.edge_list);
    const auto qubo = setsplit::build_qubo(instance);
    write_file(args.out, setsplit::export_qubo(qubo));

    std::cout << "qubo variables=" << qubo.num_variables()
              << " interactions=" << qubo.num_interactions()
              << " offset=" << setsplit::format_double(qubo.offset())
              << " -> " << args.out << "\n";
    return kExitOk;
}

struct SolveArgs {
    std::string qubo_path;
    std::string out;
    std::string solver = "anneal";
    std::uint64_t reads = 100;
    std::uint64_t sweeps = 0;  // 0 means 64 * num_variables
    double beta_initial = 0.1;
    double beta_final = 10.0;
    std::string shape = "geometric";
    std::uint64_t seed = 0;
    bool spectrum = false;
};

int cmd_solve(const SolveArgs& args) {
    const auto qubo = setsplit::import_qubo(read_file(args.qubo_path));

    setsplit::SampleSet samples;
    if (args.solver == "brute") {
        samples = setsplit::brute_force(qubo, {args.spectrum});
    } else {
        setsplit::AnnealSchedule schedule;
        schedule.num_reads = args.reads;
        schedule.sweeps_per_read =
            args.sweeps > 0 ? args.sweeps
                            : 64ULL * static_cast<std::uint64_t>(qubo.num_variables());
        schedule.beta_initial = args.beta_initial;
        schedule.beta_final = args.beta_final;
        schedule.shape = args.shape == "linear" ? setsplit::ScheduleShape::kLinear
                                                : setsplit::ScheduleShape::kGeometric;
        schedule.seed = args.seed;
        samples = setsplit::simulated_anneal(qubo, schedule);
    }

    write_file(args.out, setsplit::export_sampleset(samples));
    std::cout << "solved solver=" << args.solver
              << " min_energy=" << setsplit::format_double(samples.min_energy())
              << " records=" << samples.records.size()
              << " reads=" << samples.total_occurrences() << " -> " << args.out << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string instance_path;
    std::string assignment_path;
    std::string sampleset_path;
    bool edge_list = false;
};

int cmd_verify(const VerifyArgs& args) {
    const auto instance = load_instance(args.instance_path, args.edge_list);

    setsplit::Assignment assignment;
    if (!args.assignment_path.empty()) {
        assignment = setsplit::parse_assignment(read_file(args.assignment_path));
    } else {
        const auto samples = setsplit::import_sampleset(read_file(args.sampleset_path));
        if (samples.records.empty()) {
            throw std::runtime_error("sampleset '" + args.sampleset_path +
                                     "' holds no records");
        }
        // Records are sorted, so the first one is the best sample.
        assignment = samples.records.front().assignment;
    }

    const auto report = setsplit::decode_and_verify(instance, assignment);
    std::cout << setsplit::format_split_report(report);
    return report.fully_split ? kExitOk : kExitNotSplit;
}

struct BenchArgs {
    std::vector<int> sizes;
    int k = 2;
    std::vector<std::uint64_t> seeds{0};
    std::string solver = "anneal";
    std::uint64_t reads = 100;
    std::string csv_path;
    bool allow_duplicate_subsets = false;
};

struct BenchRow {
    int problem_size;
    int logical_variables;
    std::string solver;
    double wall_ms;
    double ground_energy;
    double ground_hit_fraction;
};

int cmd_bench(const BenchArgs& args) {
    std::vector<BenchRow> rows;

    for (int size : args.sizes) {
        for (std::uint64_t seed : args.seeds) {
            setsplit::GeneratorConfig config;
            config.num_elements = size;
            config.k = args.k;
            config.seed = seed;
            config.allow_duplicate_subsets = args.allow_duplicate_subsets;
            const auto generated = setsplit::generate_unique_solution_instance(config);

            const auto qubo = setsplit::build_qubo(generated.instance);
            // Energy of the planted fully-splitting assignment. For k <= 3
            // this is the QUBO minimum; for larger k it is only the
            // fully-split level (see the large-k demonstration).
            const double ground_energy = qubo.energy(generated.target, false);

            setsplit::SampleSet samples;
            if (args.solver == "brute") {
                samples = setsplit::brute_force(qubo);
            } else {
                auto schedule = setsplit::default_schedule(qubo.num_variables(), seed);
                schedule.num_reads = args.reads;
                samples = setsplit::simulated_anneal(qubo, schedule);
            }

            rows.push_back(BenchRow{
                size,
                qubo.num_variables(),
                args.solver,
                samples.metadata.wall_seconds * 1e3,
                ground_energy,
                samples.occurrence_fraction_at(ground_energy),
            });
        }
    }

    std::ostringstream csv;
    csv << "problem_size,logical_variables,solver,wall_ms,ground_energy,"
           "ground_hit_fraction\n";
    for (const auto& row : rows) {
        csv << row.problem_size << "," << row.logical_variables << "," << row.solver
            << "," << setsplit::format_double(row.wall_ms) << ","
            << setsplit::format_double(row.ground_energy) << ","
            << setsplit::format_double(row.ground_hit_fraction) << "\n";
    }
    if (!args.csv_path.empty()) write_file(args.csv_path, csv.str());

    std::cout << std::left << std::setw(14) << "problem_size" << std::setw(19)
              << "logical_variables" << std::setw(8) << "solver" << std::setw(12)
              << "wall_ms" << std::setw(15) << "ground_energy" << "ground_hit_fraction"
              << "\n";
    for (const auto& row : rows) {
        std::ostringstream wall;
        wall << std::fixed << std::setprecision(2) << row.wall_ms;
        std::cout << std::left << std::setw(14) << row.problem_size << std::setw(19)
                  << row.logical_variables << std::setw(8) << row.solver << std::setw(12)
                  << wall.str() << std::setw(15)
                  << setsplit::format_double(row.ground_energy)
                  << setsplit::format_double(row.ground_hit_fraction) << "\n";
    }
    return kExitOk;
}

struct HistArgs {
    std::string sampleset_path;
    std::string csv_path;
    bool bars = false;
};

int cmd_hist(const HistArgs& args) {
    const auto samples = setsplit::import_sampleset(read_file(args.sampleset_path));

    // Exact energies, no lossy bucketing.
    std::map<double, std::uint64_t> histogram;
    for (const auto& record : samples.records) {
        histogram[record.energy] += record.occurrences;
    }

    std::ostringstream csv;
    csv << "energy,occurrences\n";
    for (const auto& [energy, occurrences] : histogram) {
        csv << setsplit::format_double(energy) << "," << occurrences << "\n";
    }
    if (!args.csv_path.empty()) {
        write_file(args.csv_path, csv.str());
    } else {
        std::cout << csv.str();
    }

    if (args.bars) {
        std::uint64_t peak = 1;
        for (const auto& [energy, occurrences] : histogram) {
            peak = std::max(peak, occurrences);
        }
        constexpr int kWidth = 60;
        for (const auto& [energy, occurrences] : histogram) {
            const int filled = static_cast<int>(
                (occurrences * static_cast<std::uint64_t>(kWidth) + peak - 1) / peak);
            std::cout << std::setw(12) << setsplit::format_double(energy) << " |"
                      << std::string(static_cast<std::size_t>(filled), '#') << " "
                      << occurrences << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Set Splitting QUBO toolkit"};
    app.require_subcommand(1);

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand(
        "generate", "Generate an instance with a planted unique solution");
    generate->add_option("--size", generate_args.size, "Number of ground-set elements")
        ->required();
    generate->add_option("--k", generate_args.k, "Subset cardinality")->default_val(2);
    generate->add_option("--seed", generate_args.seed, "Generator seed")->default_val(0);
    generate->add_option("--out", generate_args.out, "Instance file to write")->required();
    generate->add_flag("--allow-duplicate-subsets", generate_args.allow_duplicate_subsets,
                       "Sample subsets with replacement");

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "Compile an instance into a QUBO file");
    build->add_option("--instance", build_args.instance_path, "Instance file")->required();
    build->add_option("--out", build_args.out, "QUBO file to write")->required();
    build->add_flag("--edge-list", build_args.edge_list,
                    "Read the instance as a plain `u v` edge list");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Sample low-energy assignments of a QUBO");
    solve->add_option("--qubo", solve_args.qubo_path, "QUBO file")->required();
    solve->add_option("--out", solve_args.out, "Sample-set file to write")->required();
    solve->add_option("--solver", solve_args.solver, "Sampler")
        ->check(CLI::IsMember({"anneal", "brute"}))
        ->default_val("anneal");
    solve->add_option("--reads", solve_args.reads, "Annealer restarts")->default_val(100);
    solve->add_option("--sweeps", solve_args.sweeps,
                      "Sweeps per read (0 = 64 per variable)");
    solve->add_option("--beta-initial", solve_args.beta_initial, "Initial inverse temperature")
        ->default_val(0.1);
    solve->add_option("--beta-final", solve_args.beta_final, "Final inverse temperature")
        ->default_val(10.0);
    solve->add_option("--shape", solve_args.shape, "Schedule shape")
        ->check(CLI::IsMember({"geometric", "linear"}))
        ->default_val("geometric");
    solve->add_option("--seed", solve_args.seed, "Sampler seed")->default_val(0);
    solve->add_flag("--spectrum", solve_args.spectrum,
                    "With --solver brute, record the full energy spectrum");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "Check the split condition for an assignment (exit 0 iff fully split)");
    verify->add_option("--instance", verify_args.instance_path, "Instance file")->required();
    auto* assignment_opt =
        verify->add_option("--assignment", verify_args.assignment_path, "Assignment file");
    verify->add_option("--sampleset", verify_args.sampleset_path,
                       "Sample-set file (best record is verified)")
        ->excludes(assignment_opt);
    verify->add_flag("--edge-list", verify_args.edge_list,
                     "Read the instance as a plain `u v` edge list");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand(
        "bench", "Generate, compile and solve instances over a size ladder");
    bench->add_option("--sizes", bench_args.sizes, "Problem sizes")
        ->required()
        ->delimiter(',');
    bench->add_option("--k", bench_args.k, "Subset cardinality")->default_val(2);
    bench->add_option("--seeds", bench_args.seeds, "Generator seeds")->delimiter(',');
    bench->add_option("--solver", bench_args.solver, "Sampler")
        ->check(CLI::IsMember({"anneal", "brute"}))
        ->default_val("anneal");
    bench->add_option("--reads", bench_args.reads, "Annealer restarts per run")
        ->default_val(100);
    bench->add_option("--csv", bench_args.csv_path, "CSV file to write");
    bench->add_flag("--allow-duplicate-subsets", bench_args.allow_duplicate_subsets,
                    "Sample subsets with replacement");

    HistArgs hist_args;
    auto* hist = app.add_subcommand(
        "hist", "Aggregate a sample set into an (energy, occurrences) histogram");
    hist->add_option("--sampleset", hist_args.sampleset_path, "Sample-set file")->required();
    hist->add_option("--csv", hist_args.csv_path, "CSV file to write (default: stdout)");
    hist->add_flag("--bars", hist_args.bars, "Print an ASCII bar chart");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*generate) return cmd_generate(generate_args);
        if (*build) return cmd_build(build_args);
        if (*solve) return cmd_solve(solve_args);
        if (*verify) {
            if (verify_args.assignment_path.empty() && verify_args.sampleset_path.empty()) {
                throw std::runtime_error("verify needs --assignment or --sampleset");
            }
            return cmd_verify(verify_args);
        }
        if (*bench) return cmd_bench(bench_args);
        if (*hist) return cmd_hist(hist_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
