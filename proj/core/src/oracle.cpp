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

#include "qvarsched/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include <Eigen/Dense>

#include "parallel.hpp"
#include "qvarsched/errors.hpp"

namespace qvarsched {
namespace {

using Matrix = Eigen::MatrixXcd;

struct Scan {
    bool any = false;
    Rational best = 0;
    std::vector<Bitstring> optimal;
    std::uint64_t feasible = 0;

    void offer(const Rational &g, Bitstring bits) {
        ++feasible;
        if (!any || g > best) {
            any = true;
            best = g;
            optimal.clear();
        }
        if (g == best) {
            optimal.push_back(std::move(bits));
        }
    }

    void merge(Scan other) {
        if (!other.any) {
            return;
        }
        feasible += other.feasible;
        if (!any || other.best > best) {
            any = true;
            best = other.best;
            optimal = std::move(other.optimal);
        } else if (other.best == best) {
            optimal.insert(optimal.end(), std::make_move_iterator(other.optimal.begin()),
                           std::make_move_iterator(other.optimal.end()));
        }
    }

    OracleReport finish(std::size_t q) {
        std::sort(optimal.begin(), optimal.end());
        OracleReport r;
        r.qubit_count = q;
        r.optimal_gain = any ? best : Rational(0);
        r.best_count = optimal.size();
        r.optimal = std::move(optimal);
        r.feasible_count = feasible;
        r.total = std::uint64_t{1} << q;
        r.infeasible_instance = !any;
        return r;
    }
};

Matrix single_qubit_operator(std::size_t n, std::size_t qubit, const Eigen::Matrix2cd &u) {
    // Qubit 0 is the leftmost Kronecker factor: out <- out (x) factor.
    Matrix out = Matrix::Identity(1, 1);
    for (std::size_t q = 0; q < n; ++q) {
        const Eigen::Matrix2cd factor = q == qubit ? u : Eigen::Matrix2cd::Identity();
        Matrix ordered(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                ordered.block(r * 2, c * 2, 2, 2) = out(r, c) * factor;
            }
        }
        out = std::move(ordered);
    }
    return out;
}

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

Eigen::Matrix2cd projector(int value) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(value, value) = 1;
    return m;
}

Eigen::Matrix2cd rotation(GateKind kind, double theta) {
    const std::complex<double> i{0.0, 1.0};
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    Eigen::Matrix2cd m;
    switch (kind) {
    case GateKind::rx:
        m << c, -i * s, -i * s, c;
        break;
    case GateKind::ry:
    case GateKind::cry:
        m << c, -s, s, c;
        break;
    case GateKind::rz:
        m << std::exp(-i * theta / 2.0), 0, 0, std::exp(i * theta / 2.0);
        break;
    default:
        m.setIdentity();
    }
    return m;
}

/// |0><0|_c (x) I + |1><1|_c (x) U_t
Matrix controlled(std::size_t n, std::size_t control, std::size_t target,
                  const Eigen::Matrix2cd &u) {
    return single_qubit_operator(n, control, projector(0)) +
           single_qubit_operator(n, control, projector(1)) *
               single_qubit_operator(n, target, u);
}

/// Permutation matrix sending basis index k to map(k).
template <class Map> Matrix permutation(std::size_t n, Map map) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix p = Matrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        p(static_cast<Eigen::Index>(map(static_cast<std::uint64_t>(k))), k) = 1;
    }
    return p;
}

std::uint64_t bit_of(std::size_t n, std::size_t qubit) {
    return std::uint64_t{1} << (n - 1 - qubit);
}

Matrix gate_matrix(std::size_t n, const Gate &g, double theta) {
    const auto &q = g.qubits;
    switch (g.kind) {
    case GateKind::x:
        return single_qubit_operator(n, q[0], pauli_x());
    case GateKind::h: {
        Eigen::Matrix2cd h;
        h << 1, 1, 1, -1;
        return single_qubit_operator(n, q[0], h / std::sqrt(2.0));
    }
    case GateKind::rx:
    case GateKind::ry:
    case GateKind::rz:
        return single_qubit_operator(n, q[0], rotation(g.kind, theta));
    case GateKind::cnot:
        return controlled(n, q[0], q[1], pauli_x());
    case GateKind::cry:
        return controlled(n, q[0], q[1], rotation(GateKind::ry, theta));
    case GateKind::rzz: {
        // exp(-i theta/2 Z(x)Z) = cos(theta/2) I - i sin(theta/2) Z(x)Z
        const Eigen::Index dim = Eigen::Index{1} << n;
        const Matrix zz = single_qubit_operator(n, q[0], pauli_z()) *
                          single_qubit_operator(n, q[1], pauli_z());
        return std::cos(theta / 2) * Matrix::Identity(dim, dim) -
               std::complex<double>{0.0, std::sin(theta / 2)} * zz;
    }
    case GateKind::mcx:
        return permutation(n, [&](std::uint64_t k) {
            for (std::size_t c = 0; c + 1 < q.size(); ++c) {
                if ((k & bit_of(n, q[c])) == 0) return k;
            }
            return k ^ bit_of(n, q.back());
        });
    case GateKind::csub:
        return permutation(n, [&](std::uint64_t k) {
            if ((k & bit_of(n, q[0])) == 0) return k;
            const std::size_t width = q.size() - 1;
            std::uint64_t value = 0;
            for (std::size_t b = 0; b < width; ++b) {
                if ((k & bit_of(n, q[1 + b])) != 0) value += std::uint64_t{1} << b;
            }
            const std::uint64_t modulus = std::uint64_t{1} << width;
            const std::uint64_t shifted = (value + modulus - g.constant % modulus) % modulus;
            std::uint64_t out = k;
            for (std::size_t b = 0; b < width; ++b) {
                out &= ~bit_of(n, q[1 + b]);
                if (((shifted >> b) & 1U) != 0) out |= bit_of(n, q[1 + b]);
            }
            return out;
        });
    }
    return Matrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
}

} // namespace

OracleReport enumerate(const AssignmentProblem &problem, const VariableLayout &layout,
                       std::size_t max_qubits) {
    const std::size_t q = layout.qubit_count();
    if (q > max_qubits) {
        throw QubitCountExceeded(q, max_qubits);
    }
    const FeasibilityMask mask(problem, layout);
    const std::uint64_t total = std::uint64_t{1} << q;
    const std::uint64_t chunk = std::uint64_t{1} << std::min<std::size_t>(q, 16);
    const std::size_t chunks = static_cast<std::size_t>(total / chunk);
    std::vector<Scan> partial(chunks);
    detail::parallel_for(chunks, [&](std::size_t c) {
        Scan &local = partial[c];
        const std::uint64_t end = (c + 1) * chunk;
        for (std::uint64_t index = c * chunk; index < end; ++index) {
            if (!mask.feasible(index)) {
                continue;
            }
            Bitstring bits = Bitstring::from_index(index, q);
            const Rational g = gain(problem, decode(problem, layout, bits));
            local.offer(g, std::move(bits));
        }
    });
    Scan scan;
    for (auto &part : partial) {
        scan.merge(std::move(part));
    }
    return scan.finish(q);
}

OracleReport enumerate_structured(const AssignmentProblem &problem,
                                  const VariableLayout &layout) {
    const std::size_t p = problem.process_count();
    const std::size_t options = problem.options_per_process();
    const std::size_t n_nodes = problem.node_count();
    std::vector<std::size_t> choice(p, 0);
    std::vector<ProcessTarget> targets(p);
    Scan scan;
    while (true) {
        std::vector<std::int64_t> loads(n_nodes, 0);
        Rational g = 0;
        for (std::size_t i = 0; i < p; ++i) {
            if (choice[i] < n_nodes) {
                targets[i] = ProcessTarget::edge(choice[i]);
                loads[choice[i]] += problem.processes()[i].weight;
                g += problem.processes()[i].values[choice[i]];
            } else {
                targets[i] = ProcessTarget::cloud();
            }
        }
        bool fits = true;
        for (std::size_t j = 0; j < n_nodes && fits; ++j) {
            const std::int64_t residual = problem.nodes()[j].capacity - loads[j];
            const auto width = layout.slack_register(j).size();
            fits = residual >= 0 && residual < (std::int64_t{1} << width);
        }
        if (fits) {
            scan.offer(g, encode_assignment(problem, layout, targets));
        }
        std::size_t i = 0;
        while (i < p && ++choice[i] == options) {
            choice[i++] = 0;
        }
        if (i == p) {
            break;
        }
    }
    return scan.finish(layout.qubit_count());
}

StateVector dense_state(const Circuit &circuit, std::span<const double> parameters) {
    const std::size_t n = circuit.qubit_count();
    if (n > kDenseMaxQubits) {
        throw QubitCountExceeded(n, kDenseMaxQubits);
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi[0] = 1;
    Matrix total = Matrix::Identity(dim, dim);
    for (const auto &g : circuit.gates()) {
        const double theta = g.has_angle() ? g.angle.resolve(parameters) : 0.0;
        total = gate_matrix(n, g, theta) * total;
    }
    psi = total * psi;
    return StateVector(n, std::vector<Complex>(psi.data(), psi.data() + psi.size()));
}

} // namespace qvarsched
