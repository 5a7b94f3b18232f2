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

#include "ppm/estimator.hpp"

#include <cmath>
#include <stdexcept>

#include "ppm/circuit.hpp"
#include "ppm/rng.hpp"

namespace ppm {

namespace {

constexpr double kSameStateTolerance = 1e-12;
constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_widths(const SparseMatrix& matrix, const StateVector& state) {
    if (matrix.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("estimate: state width does not match the matrix qubit count");
    }
}

}  // namespace

std::complex<double> diagonal_term(const SparseMatrix& matrix, const OutcomeDistribution& dist) {
    if (dist.probabilities.size() != matrix.dim()) {
        throw std::invalid_argument("diagonal_term: distribution size does not match the matrix dimension");
    }
    std::complex<double> total;
    for (const MatrixEntry& e : matrix.entries()) {
        if (e.row == e.col) {
            total += e.value * dist.probabilities[e.row];
        }
    }
    return total;
}

double pair_value(const OutcomeDistribution& dist, BitVec rep, int pivot) {
    const BitVec mask = BitVec{1} << pivot;
    if ((rep & mask) != 0) {
        throw std::invalid_argument("pair_value: representative index must have pivot bit 0");
    }
    if ((rep | mask) >= dist.probabilities.size()) {
        throw std::out_of_range("pair_value: index outside the distribution");
    }
    return 0.5 * (dist.probabilities[rep] - dist.probabilities[rep | mask]);
}

double pair_value(const ShotCounts& counts, BitVec rep, int pivot) {
    const BitVec mask = BitVec{1} << pivot;
    if ((rep & mask) != 0) {
        throw std::invalid_argument("pair_value: representative index must have pivot bit 0");
    }
    return 0.5 * (counts.frequency(rep) - counts.frequency(rep | mask));
}

EstimationReport estimate_same_state(const SparseMatrix& matrix, const StateVector& phi,
                                     EstimationMode mode, std::uint64_t shots_per_circuit,
                                     std::uint64_t seed) {
    check_widths(matrix, phi);
    if (mode == EstimationMode::Shots && shots_per_circuit == 0) {
        throw std::invalid_argument("estimate: shots mode requires at least one shot per circuit");
    }

    const MeasurementPlan plan = group_entries(matrix);

    EstimationReport report;
    report.mode = mode;
    report.shots_per_circuit = mode == EstimationMode::Shots ? shots_per_circuit : 0;
    report.seed = seed;
    report.circuits_used = plan.circuit_count;

    if (plan.has_diagonal) {
        report.diagonal_measured = true;
        OutcomeDistribution dist = probabilities(phi);
        if (mode == EstimationMode::Shots) {
            const ShotCounts counts = sample(dist, shots_per_circuit, derive_seed(seed, 0, 0));
            report.shots_total += counts.shots;
            OutcomeDistribution empirical;
            empirical.probabilities.assign(dist.probabilities.size(), 0.0);
            for (const auto& [outcome, count] : counts.counts) {
                empirical.probabilities[outcome] =
                    static_cast<double>(count) / static_cast<double>(counts.shots);
            }
            dist = std::move(empirical);
        }
        report.diagonal_contribution = diagonal_term(matrix, dist);
        report.value += report.diagonal_contribution;
    }

    for (const EntryGroup& group : plan.groups) {
        GroupReport group_report;
        group_report.d = group.d;
        group_report.pivot = group.pivot;

        std::vector<double> real_parts(group.pairs.size(), 0.0);
        std::vector<double> imag_parts(group.pairs.size(), 0.0);

        // A skipped part contributes nothing because every coefficient it
        // would multiply is zero for this group.
        for (const unsigned part : {0u, 1u}) {
            const bool needed = part == 0 ? group.needs_real : group.needs_imag;
            if (!needed) {
                continue;
            }
            const MeasurementCircuit mc = part == 0
                                              ? real_measurement_circuit(matrix.num_qubits(), group.d)
                                              : imag_measurement_circuit(matrix.num_qubits(), group.d);
            const OutcomeDistribution dist = probabilities(run(mc.circuit, phi));
            std::vector<double>& values = part == 0 ? real_parts : imag_parts;
            if (mode == EstimationMode::Exact) {
                for (std::size_t j = 0; j < group.pairs.size(); ++j) {
                    values[j] = pair_value(dist, group.pairs[j].rep, group.pivot);
                }
            } else {
                const ShotCounts counts =
                    sample(dist, shots_per_circuit, derive_seed(seed, group.d, part));
                report.shots_total += counts.shots;
                for (std::size_t j = 0; j < group.pairs.size(); ++j) {
                    values[j] = pair_value(counts, group.pairs[j].rep, group.pivot);
                }
            }
            (part == 0 ? group_report.ran_real : group_report.ran_imag) = true;
            group_report.gate_count += mc.circuit.gates().size();
        }

        for (std::size_t j = 0; j < group.pairs.size(); ++j) {
            const PairTerm& pair = group.pairs[j];
            group_report.contribution += pair.coeff_plus * real_parts[j] +
                                         std::complex<double>(0.0, 1.0) * pair.coeff_minus * imag_parts[j];
        }
        report.value += group_report.contribution;
        report.per_group.push_back(std::move(group_report));
    }
    return report;
}

SparseMatrix embedded_matrix(const SparseMatrix& matrix) {
    const std::uint64_t offset = matrix.dim();
    std::vector<MatrixEntry> entries;
    entries.reserve(matrix.nnz());
    for (const MatrixEntry& e : matrix.entries()) {
        entries.push_back({e.row, e.col + offset, 2.0 * e.value});
    }
    return SparseMatrix(matrix.num_qubits() + 1, std::move(entries));
}

StateVector joined_state(const StateVector& phi, const StateVector& psi) {
    if (phi.num_qubits() != psi.num_qubits()) {
        throw std::invalid_argument("joined_state: state widths must agree");
    }
    const std::uint64_t half = phi.dim();
    std::vector<std::complex<double>> amps(2 * half);
    for (std::uint64_t i = 0; i < half; ++i) {
        amps[i] = phi.amplitudes()[i] * kInvSqrt2;
        amps[i + half] = psi.amplitudes()[i] * kInvSqrt2;
    }
    return StateVector(phi.num_qubits() + 1, std::move(amps));
}

std::pair<SparseMatrix, StateVector> embed_two_state(const SparseMatrix& matrix,
                                                     const StateVector& phi,
                                                     const StateVector& psi) {
    check_widths(matrix, phi);
    check_widths(matrix, psi);
    return {embedded_matrix(matrix), joined_state(phi, psi)};
}

EstimationReport estimate(const EstimationRequest& request) {
    check_widths(request.matrix, request.phi);
    check_widths(request.matrix, request.psi);

    bool same_state = true;
    for (std::uint64_t i = 0; i < request.phi.dim(); ++i) {
        if (std::abs(request.phi.amplitudes()[i] - request.psi.amplitudes()[i]) > kSameStateTolerance) {
            same_state = false;
            break;
        }
    }

    if (same_state) {
        return estimate_same_state(request.matrix, request.phi, request.mode,
                                   request.shots_per_circuit, request.seed);
    }
    const auto [matrix, state] = embed_two_state(request.matrix, request.phi, request.psi);
    EstimationReport report =
        estimate_same_state(matrix, state, request.mode, request.shots_per_circuit, request.seed);
    report.embedding_used = true;
    return report;
}

}  // namespace ppm
