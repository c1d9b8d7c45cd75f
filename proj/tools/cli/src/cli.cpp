// Copyright 2026 The qvarsched Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qvarsched/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qvarsched/encoder.hpp"
#include "qvarsched/errors.hpp"
#include "qvarsched/io.hpp"
#include "qvarsched/metrics_bench.hpp"
#include "qvarsched/oracle.hpp"
#include "qvarsched/problem_model.hpp"

namespace qvarsched::cli {
namespace {

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> runs;
    std::optional<std::uint64_t> shots;
    std::optional<std::string> mode;
    std::optional<std::size_t> max_qubits;
    std::string out;
};

void add_common(CLI::App &cmd, Overrides &o) {
    cmd.add_option("--seed", o.seed, "Master seed");
    cmd.add_option("--runs", o.runs, "Independent runs")->check(CLI::PositiveNumber);
    cmd.add_option("--shots", o.shots, "Shots per measurement (default 4096)")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--mode", o.mode, "Objective evaluation")
        ->check(CLI::IsMember({"exact", "sampled"}));
    cmd.add_option("--max-qubits", o.max_qubits, "Simulator qubit limit")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--out", o.out, "Output file (or prefix for solve/sweep)");
}

void apply(const Overrides &o, ExperimentSpec &spec) {
    if (o.seed) spec.seed = *o.seed;
    if (o.runs) spec.runs = *o.runs;
    if (o.shots) {
        spec.shots = *o.shots;
        if (spec.mode.kind == EvaluationMode::Kind::sampled) {
            spec.mode.shots = *o.shots;
        }
    }
    if (o.mode) {
        spec.mode = *o.mode == "exact" ? EvaluationMode::exact()
                                       : EvaluationMode::sampled(spec.shots);
    }
    if (o.max_qubits) spec.max_qubits = *o.max_qubits;
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    const auto parent = std::filesystem::path(path).parent_path();
    std::error_code ec;
    if (!parent.empty()) {
        std::filesystem::create_directories(parent, ec);
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot write " + path);
    }
    file << text;
}

std::string oracle_text(const OracleReport &r, const VariableLayout &layout) {
    std::ostringstream s;
    s << "qubits " << r.qubit_count << '\n';
    s << "total " << r.total << '\n';
    s << "feasible " << r.feasible_count << '\n';
    s << "best " << r.best_count << '\n';
    s << "infeasible " << (r.infeasible_instance ? "true" : "false") << '\n';
    if (!r.infeasible_instance) {
        s << "optimal_gain " << format_rational(r.optimal_gain) << '\n';
    }
    for (const auto &bits : r.optimal) {
        s << "optimal " << bits.str() << " #";
        for (std::size_t q = 0; q < bits.size(); ++q) {
            if (bits[q] != 0 && layout.variable(q).kind != VariableKind::node_slack) {
                s << ' ' << layout.label(q);
            }
        }
        s << '\n';
    }
    return s.str();
}

std::string table(const std::vector<ExperimentReport> &reports) {
    std::ostringstream s;
    s << "instance qubits ansatz runs p_best p_feas c_best c_feas wall_ms\n";
    for (const auto &r : reports) {
        s << r.instance_id << ' ' << r.qubit_count << ' ' << r.ansatz << ' ' << r.runs.size()
          << ' ' << format_double(r.p_best.mean) << ' ' << format_double(r.p_feas.mean) << ' '
          << format_double(r.c_best.mean) << ' ' << format_double(r.c_feas.mean) << ' '
          << format_double(r.wall_ms.mean) << '\n';
    }
    return s.str();
}

void write_reports(const std::vector<ExperimentReport> &reports, const std::string &prefix,
                   std::ostream &out) {
    std::ostringstream csv;
    write_csv(csv, reports);
    if (prefix.empty()) {
        out << csv.str();
        return;
    }
    emit(csv.str(), prefix + ".csv", out);
    emit(summary_json(reports), prefix + ".json", out);
    out << table(reports);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Constraint-aware variational solvers for edge/cloud process placement",
                 "qvarsched"};
    app.require_subcommand(1);

    Overrides common;
    std::string problem_path;
    std::string spec_path;

    auto *encode_cmd = app.add_subcommand("encode", "Print the Ising model of a problem file");
    encode_cmd->add_option("problem", problem_path, "Problem file")->required();
    encode_cmd->add_option("--out", common.out, "Output file");

    auto *oracle_cmd = app.add_subcommand("oracle", "Exhaustive ground truth for a problem file");
    oracle_cmd->add_option("problem", problem_path, "Problem file")->required();
    oracle_cmd->add_option("--max-qubits", common.max_qubits, "Enumeration qubit limit")
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--out", common.out, "Output file");

    auto *solve_cmd = app.add_subcommand("solve", "Run the experiment described by a spec file");
    solve_cmd->add_option("spec", spec_path, "Experiment file")->required();
    add_common(*solve_cmd, common);

    std::string variant_name = "ECHL";
    std::size_t first = 3;
    std::size_t last = 7;
    std::string ansatz_name = "A1";
    std::size_t reps = 1;
    std::size_t iterations = 20;
    std::size_t restarts = 1;
    auto *sweep_cmd =
        app.add_subcommand("sweep", "Scaling sweep over the synthetic instance family");
    sweep_cmd->add_option("--variant", variant_name, "ECFL, EOFL, ECHL or EOHL")
        ->capture_default_str();
    sweep_cmd->add_option("--from", first, "Smallest process count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep_cmd->add_option("--to", last, "Largest process count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep_cmd->add_option("--ansatz", ansatz_name, "A1..A4 or QAOA")->capture_default_str();
    sweep_cmd->add_option("--reps", reps, "QAOA depth")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep_cmd->add_option("--iterations", iterations, "Objective evaluations per restart")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep_cmd->add_option("--restarts", restarts, "Restarts per run")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(*sweep_cmd, common);

    std::size_t processes = 3;
    auto *family_cmd = app.add_subcommand("family", "Write a synthetic family problem file");
    family_cmd->add_option("--variant", variant_name, "ECFL, EOFL, ECHL or EOHL")
        ->capture_default_str();
    family_cmd->add_option("--processes", processes, "Number of processes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    family_cmd->add_option("--out", common.out, "Output file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "qvarsched: " << e.what() << '\n';
        return kParseFailure;
    }

    try {
        const auto variant_of = [&] {
            const auto v = ProblemVariant::from_name(variant_name);
            if (!v) {
                throw ParseError("--variant", 0, "unknown variant '" + variant_name + "'");
            }
            return *v;
        };

        if (encode_cmd->parsed()) {
            const AssignmentProblem problem = load_problem(problem_path);
            const VariableLayout layout = build_layout(problem);
            emit(write_ising(encode(problem, layout), &layout), common.out, out);
        } else if (oracle_cmd->parsed()) {
            const AssignmentProblem problem = load_problem(problem_path);
            const VariableLayout layout = build_layout(problem);
            const std::size_t limit = common.max_qubits.value_or(kDefaultMaxQubits);
            emit(oracle_text(enumerate(problem, layout, limit), layout), common.out, out);
        } else if (solve_cmd->parsed()) {
            ExperimentFile file = load_experiment(spec_path);
            apply(common, file.spec);
            const std::string prefix =
                common.out.empty() ? file.output.string() : common.out;
            write_reports({run_experiment(file.spec)}, prefix, out);
        } else if (sweep_cmd->parsed()) {
            const ProblemVariant variant = variant_of();
            const auto ansatz = AnsatzKind::from_name(ansatz_name, reps);
            if (!ansatz) {
                throw ParseError("--ansatz", 0, "unknown ansatz '" + ansatz_name + "'");
            }
            if (first > last) {
                throw ParseError("--from", 0, "must not exceed --to");
            }
            ExperimentSpec spec(make_family_instance(variant, first));
            spec.ansatz = *ansatz;
            spec.optimizer.max_iterations = iterations;
            spec.optimizer.restarts = restarts;
            apply(common, spec);
            write_reports(scaling_sweep(variant, first, last, spec), common.out, out);
        } else if (family_cmd->parsed()) {
            emit(write_problem(make_family_instance(variant_of(), processes)), common.out, out);
        }
    } catch (const ParseError &e) {
        err << "qvarsched: parse error";
        if (!e.field().empty()) {
            err << " in " << e.field();
        }
        err << ": " << e.what() << '\n';
        return kParseFailure;
    } catch (const QubitCountExceeded &e) {
        err << "qvarsched: " << e.what() << '\n';
        return kCapabilityExceeded;
    } catch (const std::exception &e) {
        err << "qvarsched: " << e.what() << '\n';
        return kRuntimeFailure;
    }
    return kSuccess;
}

} // namespace qvarsched::cli
