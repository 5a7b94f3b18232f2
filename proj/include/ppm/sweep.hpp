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
 * Circuit-count comparison tables over matrix families and qubit counts.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "ppm/grouping.hpp"

namespace ppm {

enum class MatrixFamily { DenseSymmetric, DenseAsymmetric, Band };

/// Accepts "dense-symmetric", "dense-asymmetric" or "band".
MatrixFamily parse_family(std::string_view name);

/// Random real matrix with the family's full support pattern: every dense
/// (or in-band) entry nonzero, values uniform in [-1, 1], symmetric families
/// mirrored exactly.
SparseMatrix make_family_matrix(MatrixFamily family, int num_qubits, std::uint64_t bandwidth,
                                std::uint64_t seed);

struct SweepRow {
    int num_qubits = 0;
    std::uint64_t ppm_circuits = 0;
    std::optional<std::uint64_t> naive_circuits;  // empty beyond the 4^n enumeration guard
    std::optional<std::uint64_t> qwc_groups;
    std::uint64_t bound = 0;
};

struct SweepConfig {
    MatrixFamily family = MatrixFamily::DenseSymmetric;
    int n_min = 1;
    int n_max = 1;
    std::uint64_t bandwidth = 1;  // Band family only
    bool two_state = false;       // route counts through the ancilla embedding
    std::uint64_t seed = 0;
};

/// One row per qubit count. With two_state set, every column is computed on
/// the embedded (n+1)-qubit problem.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Columns: n,ppm_circuits,naive_circuits,qwc_groups,bound. Cells that would
/// need a Pauli enumeration beyond 8 qubits are left empty.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace ppm
