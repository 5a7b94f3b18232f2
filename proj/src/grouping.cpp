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

#include "ppm/grouping.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ppm {

namespace {

constexpr int kMaxQubits = 30;

void check_qubits(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("SparseMatrix: qubit count out of range: " + std::to_string(n));
    }
}

}  // namespace

SparseMatrix::SparseMatrix(int num_qubits) : n_(num_qubits) { check_qubits(n_); }

SparseMatrix::SparseMatrix(int num_qubits, std::vector<MatrixEntry> entries, double prune_threshold)
    : n_(num_qubits) {
    check_qubits(n_);
    const std::uint64_t d = dim();
    entries_.reserve(entries.size());
    for (const MatrixEntry& e : entries) {
        if (e.row >= d || e.col >= d) {
            throw std::out_of_range("SparseMatrix: entry (" + std::to_string(e.row) + ", " +
                                    std::to_string(e.col) + ") exceeds dimension " + std::to_string(d));
        }
        if (std::abs(e.value) > prune_threshold) {
            entries_.push_back(e);
        }
    }
    std::sort(entries_.begin(), entries_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].row == entries_[i - 1].row && entries_[i].col == entries_[i - 1].col) {
            throw std::invalid_argument("SparseMatrix: duplicate entry at (" + std::to_string(entries_[i].row) +
                                        ", " + std::to_string(entries_[i].col) + ")");
        }
    }
}

std::complex<double> SparseMatrix::at(std::uint64_t row, std::uint64_t col) const {
    const MatrixEntry key{row, col, {}};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const MatrixEntry& a, const MatrixEntry& b) {
                                   return a.row != b.row ? a.row < b.row : a.col < b.col;
                               });
    if (it != entries_.end() && it->row == row && it->col == col) {
        return it->value;
    }
    return {};
}

std::vector<std::complex<double>> SparseMatrix::to_dense() const {
    if (n_ > 10) {
        throw std::invalid_argument("SparseMatrix::to_dense: refusing to densify beyond 10 qubits");
    }
    std::vector<std::complex<double>> dense(dim() * dim());
    for (const MatrixEntry& e : entries_) {
        dense[e.row * dim() + e.col] = e.value;
    }
    return dense;
}

MeasurementPlan group_entries(const SparseMatrix& matrix) {
    MeasurementPlan plan;
    plan.num_qubits = matrix.num_qubits();

    struct Accumulator {
        int pivot = 0;
        std::unordered_map<BitVec, PairTerm> pairs;
    };
    std::unordered_map<BitVec, Accumulator> groups;

    for (const MatrixEntry& e : matrix.entries()) {
        if (e.row == e.col) {
            plan.diagonal.push_back(e);
            continue;
        }
        const BitVec d = xor_diff(e.row, e.col);
        const int k = pivot_bit(d);
        const BitVec rep = ((e.row >> k) & 1) == 0 ? e.row : e.col;

        Accumulator& acc = groups[d];
        acc.pivot = k;
        PairTerm& pair = acc.pairs[rep];
        pair.rep = rep;
        if (e.row == rep) {
            // M[p][p^d]
            pair.coeff_plus += e.value;
            pair.coeff_minus += e.value;
        } else {
            // M[p^d][p]
            pair.coeff_plus += e.value;
            pair.coeff_minus -= e.value;
        }
    }

    plan.has_diagonal = !plan.diagonal.empty();
    plan.groups.reserve(groups.size());
    for (auto& [d, acc] : groups) {
        EntryGroup group;
        group.d = d;
        group.pivot = acc.pivot;
        group.pairs.reserve(acc.pairs.size());
        for (auto& [rep, pair] : acc.pairs) {
            group.needs_real |= pair.coeff_plus != std::complex<double>{};
            group.needs_imag |= pair.coeff_minus != std::complex<double>{};
            group.pairs.push_back(pair);
        }
        std::sort(group.pairs.begin(), group.pairs.end(),
                  [](const PairTerm& a, const PairTerm& b) { return a.rep < b.rep; });
        plan.groups.push_back(std::move(group));
    }
    std::sort(plan.groups.begin(), plan.groups.end(),
              [](const EntryGroup& a, const EntryGroup& b) { return a.d < b.d; });

    plan.circuit_count = plan.has_diagonal ? 1 : 0;
    for (const EntryGroup& group : plan.groups) {
        plan.circuit_count += (group.needs_real ? 1 : 0) + (group.needs_imag ? 1 : 0);
    }
    return plan;
}

std::uint64_t bandwidth(const SparseMatrix& matrix) {
    std::uint64_t w = 0;
    for (const MatrixEntry& e : matrix.entries()) {
        w = std::max(w, e.row > e.col ? e.row - e.col : e.col - e.row);
    }
    return w;
}

std::uint64_t circuit_count_upper_bound(int num_qubits, std::uint64_t bandwidth) {
    if (num_qubits < 1) {
        throw std::invalid_argument("circuit_count_upper_bound: qubit count must be positive");
    }
    if (bandwidth == 0) {
        return 1;
    }
    if (bandwidth >= (std::uint64_t{1} << num_qubits)) {
        throw std::invalid_argument("circuit_count_upper_bound: bandwidth " + std::to_string(bandwidth) +
                                    " is degenerate for " + std::to_string(num_qubits) + " qubits");
    }
    // ceil(log2 w), so non-power-of-two bandwidths are well-defined.
    const int r = static_cast<int>(std::bit_width(bandwidth - 1));
    return 2 * ((static_cast<std::uint64_t>(num_qubits - r)) * bandwidth + (std::uint64_t{1} << r));
}

PlanVsBound plan_vs_bound(const SparseMatrix& matrix) {
    return {group_entries(matrix).circuit_count,
            circuit_count_upper_bound(matrix.num_qubits(), bandwidth(matrix))};
}

}  // namespace ppm
