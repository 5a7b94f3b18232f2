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
 * Baselines for comparison: full Pauli decomposition with per-term
 * measurement counting, and greedy qubit-wise-commuting grouping.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ppm/grouping.hpp"

namespace ppm {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Tensor product of single-qubit Pauli operators, one letter per qubit.
/// Display order puts qubit n-1 leftmost, matching binary index notation.
class PauliString {
  public:
    explicit PauliString(int num_qubits);

    /// Parses e.g. "XIZ" with the leftmost letter on the highest qubit.
    static PauliString parse(std::string_view text);

    int num_qubits() const noexcept { return n_; }
    Pauli letter(int qubit) const;
    void set_letter(int qubit, Pauli letter);
    bool is_identity() const noexcept { return code_ == 0; }

    std::string str() const;

    friend bool operator==(const PauliString& a, const PauliString& b) noexcept {
        return a.n_ == b.n_ && a.code_ == b.code_;
    }
    friend bool operator<(const PauliString& a, const PauliString& b) noexcept {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.code_ < b.code_;
    }

  private:
    PauliString(int num_qubits, std::uint64_t code) : n_(num_qubits), code_(code) {}

    int n_;
    std::uint64_t code_;  // 2 bits per qubit; numeric order equals display order

    friend std::vector<struct PauliTerm> pauli_decompose(const SparseMatrix&);
};

struct PauliTerm {
    PauliString string;
    std::complex<double> coeff;
};

/// All Pauli terms of the matrix with |coeff| > 1e-12, sorted by string.
/// Coefficients are accumulated entry by entry: each nonzero entry touches
/// exactly the 2^n strings consistent with its row^col pattern, so the cost
/// is O(p 2^n) rather than a dense trace per string. Guarded to n <= 8.
std::vector<PauliTerm> pauli_decompose(const SparseMatrix& matrix);

/// Weighted sum of the Pauli operators, returned sparsified at 1e-12.
SparseMatrix pauli_reconstruct(int num_qubits, const std::vector<PauliTerm>& terms);

/// Distinct non-identity strings; the all-identity term needs no measurement.
std::size_t naive_circuit_count(const std::vector<PauliTerm>& terms);

/// True when at every position the letters are equal or at least one is I.
bool qwc_commutes(const PauliString& a, const PauliString& b);

/// Greedy first-fit partition into qubit-wise-commuting groups, applied to
/// the terms in sorted-string order for determinism.
std::vector<std::vector<PauliTerm>> qwc_group(std::vector<PauliTerm> terms);

}  // namespace ppm
