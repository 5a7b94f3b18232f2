// Copyright 2026 The ppm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ppm/sweep.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "ppm/baselines.hpp"
#include "ppm/estimator.hpp"
#include "ppm/rng.hpp"

namespace ppm {

namespace {

constexpr int kMaxSweepQubits = 12;
constexpr int kMaxPauliQubits = 8;

double uniform_pm1(Xoshiro256& rng) { return 2.0 * rng.uniform01() - 1.0; }

}  // namespace

MatrixFamily parse_family(std::string_view name) {
    if (name == "dense-symmetric") {
        return MatrixFamily::DenseSymmetric;
    }
    if (name == "dense-asymmetric") {
        return MatrixFamily::DenseAsymmetric;
    }
    if (name == "band") {
        return MatrixFamily::Band;
    }
    throw std::invalid_argument("unknown matrix family: " + std::string(name));
}

SparseMatrix make_family_matrix(MatrixFamily family, int num_qubits, std::uint64_t bandwidth,
                                std::uint64_t seed) {
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (family == MatrixFamily::Band) {
        if (bandwidth == 0 || bandwidth >= dim) {
            throw std::invalid_argument("band family needs 0 < bandwidth < 2^n");
        }
    }
    Xoshiro256 rng(seed);
    std::vector<MatrixEntry> entries;
    for (std::uint64_t row = 0; row < dim; ++row) {
        for (std::uint64_t col = 0; col < dim; ++col) {
            const std::uint64_t distance = row > col ? row - col : col - row;
            if (family == MatrixFamily::Band && distance > bandwidth) {
                continue;
            }
            const bool symmetric = family != MatrixFamily::DenseAsymmetric;
            if (symmetric && col < row) {
                continue;  // mirrored below
            }
            const double value = uniform_pm1(rng);
            entries.push_back({row, col, value});
            if (symmetric && col != row) {
                entries.push_back({col, row, value});
            }
        }
    }
    return SparseMatrix(num_qubits, std::move(entries));
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    if (config.n_min < 1 || config.n_min > config.n_max || config.n_max > kMaxSweepQubits) {
        throw std::invalid_argument("sweep range must satisfy 1 <= n_min <= n_max <= " +
                                    std::to_string(kMaxSweepQubits));
    }
    std::vector<SweepRow> rows;
    for (int n = config.n_min; n <= config.n_max; ++n) {
        std::uint64_t instance_seed = config.seed ^ static_cast<std::uint64_t>(n);
        const SparseMatrix base =
            make_family_matrix(config.family, n, config.bandwidth, splitmix64_next(instance_seed));
        const SparseMatrix matrix = config.two_state ? embedded_matrix(base) : base;

        SweepRow row;
        row.num_qubits = n;
        const PlanVsBound counts = plan_vs_bound(matrix);
        row.ppm_circuits = counts.circuit_count;
        row.bound = counts.bound;
        if (matrix.num_qubits() <= kMaxPauliQubits) {
            const std::vector<PauliTerm> terms = pauli_decompose(matrix);
            row.naive_circuits = naive_circuit_count(terms);
            row.qwc_groups = qwc_group(terms).size();
        }
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "n,ppm_circuits,naive_circuits,qwc_groups,bound\n";
    for (const SweepRow& row : rows) {
        out << row.num_qubits << ',' << row.ppm_circuits << ',';
        if (row.naive_circuits) {
            out << *row.naive_circuits;
        }
        out << ',';
        if (row.qwc_groups) {
            out << *row.qwc_groups;
        }
        out << ',' << row.bound << '\n';
    }
}

}  // namespace ppm
