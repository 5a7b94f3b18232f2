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

/**
 * @file
 * End-to-end estimation of <phi|M|psi>.
 *
 * The same-state path plans the measurement groups, simulates one circuit
 * per needed group part, and reassembles the value from outcome statistics:
 *
 *   <phi|M|phi> = sum_i M_ii P(i)
 *              + sum_groups sum_pairs coeff_plus * Re z + i coeff_minus * Im z,
 *
 * with z = <phi|p><p^d|phi> and Re z / Im z read off a single pair of
 * outcome probabilities per the pair_value() rule. Distinct input states are
 * reduced to the same-state case on n+1 qubits: the ancilla becomes the
 * most-significant qubit, the matrix moves to the top-right block doubled,
 * and the joined state (|0>|phi> + |1>|psi>)/sqrt(2) is built directly as
 * amplitudes.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "ppm/grouping.hpp"
#include "ppm/sim.hpp"

namespace ppm {

enum class EstimationMode { Exact, Shots };

struct EstimationRequest {
    SparseMatrix matrix;
    StateVector phi;
    StateVector psi;
    EstimationMode mode = EstimationMode::Exact;
    std::uint64_t shots_per_circuit = 0;  // required in Shots mode
    std::uint64_t seed = 0;
};

struct GroupReport {
    BitVec d = 0;
    int pivot = 0;
    bool ran_real = false;
    bool ran_imag = false;
    std::size_t gate_count = 0;  // gates across the parts that ran
    std::complex<double> contribution;
};

struct EstimationReport {
    std::complex<double> value;
    std::uint64_t circuits_used = 0;
    std::uint64_t shots_total = 0;  // 0 in exact mode
    bool embedding_used = false;
    EstimationMode mode = EstimationMode::Exact;
    std::uint64_t shots_per_circuit = 0;
    std::uint64_t seed = 0;
    bool diagonal_measured = false;
    std::complex<double> diagonal_contribution;
    std::vector<GroupReport> per_group;
};

/// sum_i M_ii P(i) over the diagonal entries of the matrix.
std::complex<double> diagonal_term(const SparseMatrix& matrix, const OutcomeDistribution& dist);

/// (P(p) - P(p ^ e_k)) / 2 for a pair representative p whose pivot bit is 0.
/// Equals Re z after the real circuit and Im z after the imaginary circuit.
double pair_value(const OutcomeDistribution& dist, BitVec rep, int pivot);
double pair_value(const ShotCounts& counts, BitVec rep, int pivot);

/// Full pipeline for <phi|M|phi>.
EstimationReport estimate_same_state(const SparseMatrix& matrix, const StateVector& phi,
                                     EstimationMode mode, std::uint64_t shots_per_circuit,
                                     std::uint64_t seed);

/// Block matrix with top-right 2M on n+1 qubits; <joined|M'|joined> equals
/// <phi|M|psi> exactly.
SparseMatrix embedded_matrix(const SparseMatrix& matrix);

/// (|0>|phi> + |1>|psi>)/sqrt(2) with the ancilla as the top qubit.
StateVector joined_state(const StateVector& phi, const StateVector& psi);

/// Convenience composition of the two constructions above.
std::pair<SparseMatrix, StateVector> embed_two_state(const SparseMatrix& matrix,
                                                     const StateVector& phi,
                                                     const StateVector& psi);

/// Dispatches to the same-state path directly, or through the ancilla
/// embedding when phi and psi differ anywhere beyond 1e-12.
EstimationReport estimate(const EstimationRequest& request);

}  // namespace ppm
