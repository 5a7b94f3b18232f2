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
 * Sparse matrices and the partition of their entries into measurement groups.
 *
 * Off-diagonal entries are grouped by the key d = row ^ col: all pairs
 * sharing d are served by one transform, so a full 2^n x 2^n matrix needs at
 * most 2^n - 1 groups plus one direct measurement for the diagonal.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ppm/gf2.hpp"

namespace ppm {

struct MatrixEntry {
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    std::complex<double> value;
};

/// 2^n x 2^n complex matrix stored as its nonzero entries.
class SparseMatrix {
  public:
    /// Empty matrix on `num_qubits` qubits.
    explicit SparseMatrix(int num_qubits);

    /// Builds from an entry list. Entries with |value| <= prune_threshold are
    /// dropped (the default keeps everything but exact zeros). Out-of-range
    /// indices and duplicate (row, col) keys are rejected.
    SparseMatrix(int num_qubits, std::vector<MatrixEntry> entries, double prune_threshold = 0.0);

    int num_qubits() const noexcept { return n_; }
    std::uint64_t dim() const noexcept { return std::uint64_t{1} << n_; }
    std::size_t nnz() const noexcept { return entries_.size(); }

    /// Entries sorted by (row, col).
    const std::vector<MatrixEntry>& entries() const noexcept { return entries_; }

    /// Value at (row, col); zero when the entry is absent.
    std::complex<double> at(std::uint64_t row, std::uint64_t col) const;

    /// Row-major dense copy; guarded to num_qubits <= 10.
    std::vector<std::complex<double>> to_dense() const;

  private:
    int n_;
    std::vector<MatrixEntry> entries_;
};

/// One off-diagonal pair {(p, p^d), (p^d, p)} folded into the coefficients
/// the estimator needs: the pair contributes
/// coeff_plus * Re z + i * coeff_minus * Im z with z = <phi|p><p^d|phi>.
struct PairTerm {
    BitVec rep = 0;                     // representative index, pivot bit 0
    std::complex<double> coeff_plus;    // M[p][p^d] + M[p^d][p]
    std::complex<double> coeff_minus;   // M[p][p^d] - M[p^d][p]
};

struct EntryGroup {
    BitVec d = 0;
    int pivot = 0;
    std::vector<PairTerm> pairs;        // sorted by rep
    bool needs_real = false;            // some coeff_plus != 0
    bool needs_imag = false;            // some coeff_minus != 0
};

struct MeasurementPlan {
    int num_qubits = 0;
    bool has_diagonal = false;
    std::vector<MatrixEntry> diagonal;  // row == col entries of the matrix
    std::vector<EntryGroup> groups;     // sorted by d
    std::uint64_t circuit_count = 0;    // has_diagonal + sum(needs_real + needs_imag)
};

/// Partitions the nonzero entries into the diagonal plus per-d groups.
/// Runs in O(n p) for p nonzeros.
MeasurementPlan group_entries(const SparseMatrix& matrix);

/// Largest |row - col| over nonzero entries; 0 for diagonal or empty matrices.
std::uint64_t bandwidth(const SparseMatrix& matrix);

/// Worst-case distinct-circuit count for an n-qubit matrix of bandwidth w:
/// 1 when w == 0, otherwise 2((n - ceil(log2 w)) w + 2^ceil(log2 w)).
/// Throws std::invalid_argument when w >= 2^n.
std::uint64_t circuit_count_upper_bound(int num_qubits, std::uint64_t bandwidth);

struct PlanVsBound {
    std::uint64_t circuit_count = 0;
    std::uint64_t bound = 0;
};

/// Actual plan size next to the bandwidth bound, for reporting.
PlanVsBound plan_vs_bound(const SparseMatrix& matrix);

}  // namespace ppm
