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

#include "qvarsched/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <yaml-cpp/yaml.h>

#include "qvarsched/errors.hpp"
#include "qvarsched/rational.hpp"

namespace qvarsched {
namespace {

std::size_t line_of(const YAML::Node &node) {
    const auto mark = node.Mark();
    return mark.line >= 0 ? static_cast<std::size_t>(mark.line) + 1 : 0;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("file", 0, "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

YAML::Node load_document(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException &e) {
        throw ParseError("document", static_cast<std::size_t>(e.mark.line) + 1, e.msg);
    }
    if (!root.IsMap()) {
        throw ParseError("document", line_of(root), "expected a key/value mapping");
    }
    const YAML::Node format = root["format"];
    if (!format) {
        throw ParseError("format", 0, "missing format header");
    }
    if (!format.IsScalar() || format.Scalar() != kFormatTag) {
        throw ParseError("format", line_of(format),
                         "expected '" + std::string(kFormatTag) + "'");
    }
    return root;
}

YAML::Node required(const YAML::Node &parent, const std::string &key, const std::string &field) {
    const YAML::Node node = parent[key];
    if (!node) {
        throw ParseError(field, line_of(parent), "missing required field");
    }
    return node;
}

template <class T> T scalar_as(const YAML::Node &node, const std::string &field) {
    if (!node.IsScalar()) {
        throw ParseError(field, line_of(node), "expected a scalar");
    }
    try {
        return node.as<T>();
    } catch (const YAML::Exception &) {
        throw ParseError(field, line_of(node), "invalid value '" + node.Scalar() + "'");
    }
}

std::int64_t integer_at_least(const YAML::Node &node, const std::string &field,
                              std::int64_t minimum) {
    const auto value = scalar_as<std::int64_t>(node, field);
    if (value < minimum) {
        throw ParseError(field, line_of(node),
                         "must be >= " + std::to_string(minimum) + ", got " + node.Scalar());
    }
    return value;
}

std::size_t count_at_least(const YAML::Node &parent, const std::string &key,
                           const std::string &field, std::size_t fallback, std::size_t minimum) {
    const YAML::Node node = parent[key];
    if (!node) {
        return fallback;
    }
    return static_cast<std::size_t>(
        integer_at_least(node, field, static_cast<std::int64_t>(minimum)));
}

Rational rational_at(const YAML::Node &node, const std::string &field) {
    if (!node.IsScalar()) {
        throw ParseError(field, line_of(node), "expected a number");
    }
    try {
        return parse_rational(node.Scalar());
    } catch (const std::invalid_argument &) {
        throw ParseError(field, line_of(node), "invalid number '" + node.Scalar() + "'");
    }
}

YAML::Node sequence(const YAML::Node &parent, const std::string &key) {
    const YAML::Node node = required(parent, key, key);
    if (!node.IsSequence() || node.size() == 0) {
        throw ParseError(key, line_of(node), "expected a non-empty list");
    }
    return node;
}

} // namespace

AssignmentProblem parse_problem(std::string_view text) {
    const YAML::Node root = load_document(text);
    const YAML::Node variant_node = required(root, "variant", "variant");
    const auto variant_name = scalar_as<std::string>(variant_node, "variant");
    const auto variant = ProblemVariant::from_name(variant_name);
    if (!variant) {
        throw ParseError("variant", line_of(variant_node),
                         "unknown variant '" + variant_name + "' (ECFL, EOFL, ECHL, EOHL)");
    }

    const YAML::Node node_list = sequence(root, "nodes");
    std::vector<NodeSpec> nodes;
    for (std::size_t j = 0; j < node_list.size(); ++j) {
        const YAML::Node n = node_list[j];
        const std::string base = "nodes[" + std::to_string(j) + "]";
        if (!n.IsMap()) {
            throw ParseError(base, line_of(n), "expected a mapping");
        }
        NodeSpec spec;
        spec.capacity = integer_at_least(required(n, "capacity", base + ".capacity"),
                                         base + ".capacity", 1);
        if (const YAML::Node t = n["threshold"]) {
            spec.threshold = integer_at_least(t, base + ".threshold", 0);
            if (!variant->high_load && spec.threshold != 0) {
                throw ParseError(base + ".threshold", line_of(t),
                                 "must be 0 for free-load variant " + variant->name());
            }
            if (spec.threshold > spec.capacity) {
                throw ParseError(base + ".threshold", line_of(t), "exceeds capacity");
            }
        }
        nodes.push_back(spec);
    }

    const YAML::Node process_list = sequence(root, "processes");
    std::vector<ProcessSpec> processes;
    for (std::size_t i = 0; i < process_list.size(); ++i) {
        const YAML::Node p = process_list[i];
        const std::string base = "processes[" + std::to_string(i) + "]";
        if (!p.IsMap()) {
            throw ParseError(base, line_of(p), "expected a mapping");
        }
        ProcessSpec spec;
        spec.weight =
            integer_at_least(required(p, "weight", base + ".weight"), base + ".weight", 1);
        const YAML::Node values = required(p, "values", base + ".values");
        if (!values.IsSequence() || values.size() != nodes.size()) {
            throw ParseError(base + ".values", line_of(values),
                             "expected " + std::to_string(nodes.size()) + " values");
        }
        for (std::size_t j = 0; j < values.size(); ++j) {
            const std::string field = base + ".values[" + std::to_string(j) + "]";
            Rational v = rational_at(values[j], field);
            if (v < 0) {
                throw ParseError(field, line_of(values[j]), "must be >= 0");
            }
            spec.values.push_back(std::move(v));
        }
        processes.push_back(std::move(spec));
    }

    try {
        return AssignmentProblem(*variant, std::move(processes), std::move(nodes));
    } catch (const InvalidProblem &e) {
        throw ParseError("problem", 0, e.what());
    }
}

AssignmentProblem load_problem(const std::filesystem::path &path) {
    return parse_problem(read_file(path));
}

std::string write_problem(const AssignmentProblem &problem) {
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "format" << YAML::Value << std::string(kFormatTag);
    out << YAML::Key << "variant" << YAML::Value << problem.variant().name();
    out << YAML::Key << "processes" << YAML::Value << YAML::BeginSeq;
    for (const auto &p : problem.processes()) {
        out << YAML::Flow << YAML::BeginMap;
        out << YAML::Key << "weight" << YAML::Value << p.weight;
        out << YAML::Key << "values" << YAML::Value << YAML::Flow << YAML::BeginSeq;
        for (const auto &v : p.values) {
            out << format_rational(v);
        }
        out << YAML::EndSeq << YAML::EndMap;
    }
    out << YAML::EndSeq;
    out << YAML::Key << "nodes" << YAML::Value << YAML::BeginSeq;
    for (const auto &n : problem.nodes()) {
        out << YAML::Flow << YAML::BeginMap;
        out << YAML::Key << "capacity" << YAML::Value << n.capacity;
        out << YAML::Key << "threshold" << YAML::Value << n.threshold;
        out << YAML::EndMap;
    }
    out << YAML::EndSeq << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

ExperimentFile parse_experiment(std::string_view text, const std::filesystem::path &base_dir) {
    const YAML::Node root = load_document(text);
    const YAML::Node problem_node = required(root, "problem", "problem");
    const std::filesystem::path problem_path =
        base_dir / scalar_as<std::string>(problem_node, "problem");
    AssignmentProblem problem = [&] {
        try {
            return load_problem(problem_path);
        } catch (const ParseError &e) {
            throw ParseError("problem", line_of(problem_node),
                             problem_path.string() + ": " + e.what());
        }
    }();

    ExperimentFile file{ExperimentSpec(std::move(problem)), problem_path, {}};
    ExperimentSpec &spec = file.spec;
    spec.instance_id = root["instance_id"] ? scalar_as<std::string>(root["instance_id"], "instance_id")
                                           : problem_path.stem().string();

    const YAML::Node algorithm = required(root, "algorithm", "algorithm");
    if (!algorithm.IsMap()) {
        throw ParseError("algorithm", line_of(algorithm), "expected a mapping");
    }
    const YAML::Node ansatz_node = required(algorithm, "ansatz", "algorithm.ansatz");
    const auto ansatz_name = scalar_as<std::string>(ansatz_node, "algorithm.ansatz");
    const std::size_t reps = count_at_least(algorithm, "reps", "algorithm.reps", 1, 1);
    const auto ansatz = AnsatzKind::from_name(ansatz_name, reps);
    if (!ansatz) {
        throw ParseError("algorithm.ansatz", line_of(ansatz_node),
                         "unknown ansatz '" + ansatz_name + "' (A1, A2, A3, A4, QAOA)");
    }
    spec.ansatz = *ansatz;

    if (const YAML::Node opt = root["optimizer"]) {
        if (!opt.IsMap()) {
            throw ParseError("optimizer", line_of(opt), "expected a mapping");
        }
        if (const YAML::Node m = opt["method"]) {
            const auto name = scalar_as<std::string>(m, "optimizer.method");
            const auto method = optimizer_method_from_name(name);
            if (!method) {
                throw ParseError("optimizer.method", line_of(m),
                                 "unknown method '" + name + "' (cobyla, nelder-mead)");
            }
            spec.optimizer.method = *method;
        }
        spec.optimizer.max_iterations = count_at_least(
            opt, "max_iterations", "optimizer.max_iterations", spec.optimizer.max_iterations, 1);
        spec.optimizer.restarts =
            count_at_least(opt, "restarts", "optimizer.restarts", spec.optimizer.restarts, 1);
        if (const YAML::Node t = opt["tolerance"]) {
            spec.optimizer.tolerance = scalar_as<double>(t, "optimizer.tolerance");
            if (!(spec.optimizer.tolerance > 0.0)) {
                throw ParseError("optimizer.tolerance", line_of(t), "must be > 0");
            }
        }
        if (const YAML::Node ip = opt["initial_point"]) {
            const auto name = scalar_as<std::string>(ip, "optimizer.initial_point");
            if (name == "uniform") {
                spec.optimizer.initial_point = InitialPoint::uniform;
            } else if (name == "zero") {
                spec.optimizer.initial_point = InitialPoint::zero;
            } else {
                throw ParseError("optimizer.initial_point", line_of(ip),
                                 "expected 'uniform' or 'zero'");
            }
        }
    }

    spec.shots = count_at_least(root, "shots", "shots", kDefaultShots, 1);
    if (const YAML::Node mode = root["mode"]) {
        const auto name = scalar_as<std::string>(mode, "mode");
        if (name == "exact") {
            spec.mode = EvaluationMode::exact();
        } else if (name == "sampled") {
            spec.mode = EvaluationMode::sampled(spec.shots);
        } else {
            throw ParseError("mode", line_of(mode), "expected 'exact' or 'sampled'");
        }
    }
    spec.runs = count_at_least(root, "runs", "runs", 1, 1);
    if (const YAML::Node seed = root["seed"]) {
        spec.seed = scalar_as<std::uint64_t>(seed, "seed");
    }
    spec.max_qubits = count_at_least(root, "max_qubits", "max_qubits", kDefaultMaxQubits, 1);
    if (const YAML::Node output = root["output"]) {
        file.output = base_dir / scalar_as<std::string>(output, "output");
    }
    return file;
}

ExperimentFile load_experiment(const std::filesystem::path &path) {
    return parse_experiment(read_file(path), path.parent_path());
}

std::string write_ising(const IsingModel &model, const VariableLayout *layout) {
    std::ostringstream out;
    out << "format " << kFormatTag << '\n';
    out << "# H = constant + sum h_i Z_i + sum J_ij Z_i Z_j\n";
    if (layout != nullptr) {
        out << "# qubit labels:";
        for (std::size_t q = 0; q < layout->qubit_count(); ++q) {
            out << ' ' << q << '=' << layout->label(q);
        }
        out << '\n';
    }
    out << "qubits " << model.qubit_count << '\n';
    out << "penalty " << format_rational(model.penalty) << '\n';
    out << "constant " << format_rational(model.constant) << '\n';
    for (std::size_t i = 0; i < model.linear.size(); ++i) {
        if (model.linear[i] != 0) {
            out << i << ' ' << format_rational(model.linear[i]) << '\n';
        }
    }
    for (const auto &[key, c] : model.pairwise) {
        out << key.first << ' ' << key.second << ' ' << format_rational(c) << '\n';
    }
    return out.str();
}

IsingModel parse_ising(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    bool header = false;
    std::optional<std::size_t> qubits;
    IsingModel model;
    std::vector<IsingTerm> terms;

    const auto index_at = [&](const std::string &token) {
        std::size_t pos = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(token, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (pos != token.size() || token.empty() || token[0] == '-') {
            throw ParseError("qubit", number, "invalid qubit index '" + token + "'");
        }
        if (!qubits || value >= *qubits) {
            throw ParseError("qubit", number, "qubit index out of range: " + token);
        }
        return static_cast<std::size_t>(value);
    };
    const auto coefficient_at = [&](const std::string &token, const std::string &field) {
        try {
            return parse_rational(token);
        } catch (const std::invalid_argument &) {
            throw ParseError(field, number, "invalid coefficient '" + token + "'");
        }
    };

    while (std::getline(in, line)) {
        ++number;
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) {
            tokens.push_back(t);
        }
        if (tokens.empty() || tokens[0].starts_with('#')) {
            continue;
        }
        if (!header) {
            if (tokens.size() != 2 || tokens[0] != "format" || tokens[1] != kFormatTag) {
                throw ParseError("format", number, "expected 'format qvarsched-v1'");
            }
            header = true;
            continue;
        }
        if (tokens[0] == "qubits" && tokens.size() == 2) {
            try {
                qubits = std::stoull(tokens[1]);
            } catch (const std::exception &) {
                throw ParseError("qubits", number, "invalid qubit count");
            }
        } else if (tokens[0] == "penalty" && tokens.size() == 2) {
            model.penalty = coefficient_at(tokens[1], "penalty");
        } else if (tokens[0] == "constant" && tokens.size() == 2) {
            terms.push_back({{}, coefficient_at(tokens[1], "constant")});
        } else if (tokens.size() == 2) {
            terms.push_back({{index_at(tokens[0])}, coefficient_at(tokens[1], "linear")});
        } else if (tokens.size() == 3) {
            const std::size_t a = index_at(tokens[0]);
            const std::size_t b = index_at(tokens[1]);
            if (a == b) {
                throw ParseError("pairwise", number, "pair repeats qubit " + tokens[0]);
            }
            terms.push_back({{a, b}, coefficient_at(tokens[2], "pairwise")});
        } else {
            throw ParseError("line", number, "unrecognised line '" + line + "'");
        }
    }
    if (!header) {
        throw ParseError("format", 0, "missing format header");
    }
    if (!qubits) {
        throw ParseError("qubits", 0, "missing qubit count");
    }
    return from_terms(*qubits, terms, model.penalty);
}

} // namespace qvarsched
