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

#include "qvarsched/metrics_bench.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "parallel.hpp"
#include "qvarsched/encoder.hpp"
#include "qvarsched/errors.hpp"

namespace qvarsched {
namespace {

double coefficient_of_performance(double probability, std::size_t qubits, std::uint64_t count) {
    if (count == 0) {
        return 0.0;
    }
    return probability * std::ldexp(1.0, static_cast<int>(qubits)) / static_cast<double>(count);
}

template <class Get> Aggregate aggregate_field(const std::vector<RunRecord> &runs, Get get) {
    std::vector<double> values;
    values.reserve(runs.size());
    for (const auto &r : runs) {
        values.push_back(get(r.metrics));
    }
    return aggregate(values);
}

nlohmann::json aggregate_json(const Aggregate &a) {
    return {{"mean", a.mean}, {"std", a.stddev}, {"min", a.min}, {"max", a.max}};
}

} // namespace

Metrics score(const Counts &counts, const OracleReport &report, const AssignmentProblem &problem,
              const VariableLayout &layout) {
    if (counts.shots == 0) {
        throw std::invalid_argument("score: counts hold no shots");
    }
    const std::size_t q = report.qubit_count;
    if (layout.qubit_count() != q) {
        throw InstanceMismatch("oracle report has " + std::to_string(q) +
                               " qubits, layout has " + std::to_string(layout.qubit_count()));
    }
    const FeasibilityMask mask(problem, layout);
    std::uint64_t best = 0;
    std::uint64_t feasible = 0;
    for (const auto &[bits, n] : counts.histogram) {
        if (bits.size() != q) {
            throw InstanceMismatch("counts contain a " + std::to_string(bits.size()) +
                                   "-bit outcome, oracle report has " + std::to_string(q) +
                                   " qubits");
        }
        if (!mask.feasible(bits.to_index())) {
            continue;
        }
        feasible += n;
        if (std::binary_search(report.optimal.begin(), report.optimal.end(), bits)) {
            best += n;
        }
    }
    Metrics m;
    const auto shots = static_cast<double>(counts.shots);
    m.p_best = static_cast<double>(best) / shots;
    m.p_feas = static_cast<double>(feasible) / shots;
    m.c_best = coefficient_of_performance(m.p_best, q, report.best_count);
    m.c_feas = coefficient_of_performance(m.p_feas, q, report.feasible_count);
    return m;
}

Aggregate aggregate(const std::vector<double> &values) {
    Aggregate a;
    if (values.empty()) {
        return a;
    }
    const auto n = static_cast<double>(values.size());
    a.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    a.min = *std::min_element(values.begin(), values.end());
    a.max = *std::max_element(values.begin(), values.end());
    // Rounding can push the mean of identical values a hair outside [min, max].
    a.mean = std::clamp(a.mean, a.min, a.max);
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) {
            ss += (v - a.mean) * (v - a.mean);
        }
        a.stddev = std::sqrt(ss / (n - 1.0));
    }
    return a;
}

ExperimentReport run_experiment(const ExperimentSpec &spec) {
    if (spec.runs == 0) {
        throw std::invalid_argument("experiment needs at least one run");
    }
    if (spec.shots == 0) {
        throw std::invalid_argument("experiment needs at least one shot");
    }
    spec.optimizer.validate();
    const VariableLayout layout = build_layout(spec.problem);
    if (layout.qubit_count() > spec.max_qubits) {
        throw QubitCountExceeded(layout.qubit_count(), spec.max_qubits);
    }
    const IsingModel model = encode(spec.problem, layout);
    const Circuit circuit = build_circuit(spec.ansatz, spec.problem, layout, model);

    ExperimentReport report;
    report.instance_id = spec.instance_id;
    report.variant = spec.problem.variant().name();
    report.ansatz = spec.ansatz.name();
    report.qubit_count = layout.qubit_count();
    report.parameter_count = circuit.parameter_count();
    report.optimizer = optimizer_method_name(spec.optimizer.method);
    report.mode = spec.mode.name();
    report.shots = spec.shots;
    report.seed = spec.seed;
    report.oracle = enumerate_structured(spec.problem, layout);
    report.runs.resize(spec.runs);

    detail::parallel_for(spec.runs, [&](std::size_t r) {
        VqaOptions options;
        options.optimizer = spec.optimizer;
        options.optimizer.seed = derive_seed(spec.seed, kRunSeedStream, r);
        options.mode = spec.mode;
        options.final_shots = spec.shots;
        options.max_qubits = spec.max_qubits;
        const VqaResult result = run_vqe(spec.problem, spec.ansatz, options);

        RunRecord &record = report.runs[r];
        record.run = r;
        record.seed = options.optimizer.seed;
        record.metrics = score(result.counts, report.oracle, spec.problem, layout);
        record.metrics.iterations = result.iterations;
        record.metrics.wall_ms = result.wall_ms;
        record.best_value = result.best_value;
        record.parameters = result.best_parameters;
    });

    report.p_best = aggregate_field(report.runs, [](const Metrics &m) { return m.p_best; });
    report.p_feas = aggregate_field(report.runs, [](const Metrics &m) { return m.p_feas; });
    report.c_best = aggregate_field(report.runs, [](const Metrics &m) { return m.c_best; });
    report.c_feas = aggregate_field(report.runs, [](const Metrics &m) { return m.c_feas; });
    report.iterations = aggregate_field(
        report.runs, [](const Metrics &m) { return static_cast<double>(m.iterations); });
    report.wall_ms = aggregate_field(report.runs, [](const Metrics &m) { return m.wall_ms; });
    return report;
}

AssignmentProblem make_family_instance(ProblemVariant variant, std::size_t processes) {
    if (processes == 0) {
        throw InvalidProblem("family instance needs at least one process");
    }
    constexpr std::array<std::int64_t, 3> weights{2, 1, 1};
    constexpr std::array<std::int64_t, 6> values{2, 1, 3, 1, 2, 1};
    constexpr std::size_t nodes = 2;
    std::vector<ProcessSpec> ps;
    for (std::size_t i = 0; i < processes; ++i) {
        ProcessSpec p;
        p.weight = weights[i % weights.size()];
        for (std::size_t j = 0; j < nodes; ++j) {
            p.values.emplace_back(values[(i * nodes + j) % values.size()]);
        }
        ps.push_back(std::move(p));
    }
    std::vector<NodeSpec> ns{{3, variant.high_load ? 2 : 0}, {2, variant.high_load ? 1 : 0}};
    return AssignmentProblem(variant, std::move(ps), std::move(ns));
}

std::vector<ExperimentReport> scaling_sweep(ProblemVariant variant, std::size_t first,
                                            std::size_t last, const ExperimentSpec &template_spec) {
    if (first == 0 || first > last) {
        throw std::invalid_argument("scaling sweep needs 1 <= first <= last");
    }
    std::vector<ExperimentReport> reports;
    for (std::size_t p = first; p <= last; ++p) {
        ExperimentSpec spec = template_spec;
        spec.problem = make_family_instance(variant, p);
        spec.instance_id = variant.name() + "-P" + std::to_string(p);
        reports.push_back(run_experiment(spec));
    }
    return reports;
}

std::string format_double(double value) {
    std::array<char, 64> buffer{};
    const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return {buffer.data(), end};
}

void write_csv(std::ostream &out, const std::vector<ExperimentReport> &reports) {
    out << kCsvHeader << '\n';
    for (const auto &report : reports) {
        for (const auto &run : report.runs) {
            const Metrics &m = run.metrics;
            out << report.instance_id << ',' << report.ansatz << ',' << run.seed << ','
                << format_double(m.p_best) << ',' << format_double(m.p_feas) << ','
                << format_double(m.c_best) << ',' << format_double(m.c_feas) << ','
                << m.iterations << ',' << format_double(m.wall_ms) << '\n';
        }
    }
}

std::string summary_json(const std::vector<ExperimentReport> &reports) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto &r : reports) {
        nlohmann::ordered_json e;
        e["instance_id"] = r.instance_id;
        e["variant"] = r.variant;
        e["qubits"] = r.qubit_count;
        e["algorithm"] = {{"ansatz", r.ansatz},
                          {"parameters", r.parameter_count},
                          {"optimizer", r.optimizer},
                          {"mode", r.mode},
                          {"shots", r.shots},
                          {"seed", r.seed},
                          {"runs", r.runs.size()}};
        std::vector<std::string> optimal;
        for (const auto &b : r.oracle.optimal) {
            optimal.push_back(b.str());
        }
        e["oracle"] = {{"optimal_gain", format_rational(r.oracle.optimal_gain)},
                       {"n_best", r.oracle.best_count},
                       {"n_feasible", r.oracle.feasible_count},
                       {"total", r.oracle.total},
                       {"optimal", optimal}};
        e["aggregates"] = {{"p_best", aggregate_json(r.p_best)},
                           {"p_feas", aggregate_json(r.p_feas)},
                           {"c_best", aggregate_json(r.c_best)},
                           {"c_feas", aggregate_json(r.c_feas)},
                           {"iterations", aggregate_json(r.iterations)},
                           {"wall_ms", aggregate_json(r.wall_ms)}};
        nlohmann::ordered_json runs = nlohmann::ordered_json::array();
        for (const auto &run : r.runs) {
            runs.push_back({{"run", run.run},
                            {"seed", run.seed},
                            {"best_value", run.best_value},
                            {"parameters", run.parameters}});
        }
        e["runs"] = std::move(runs);
        doc.push_back(std::move(e));
    }
    return doc.dump(2) + "\n";
}

} // namespace qvarsched
