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
 * GF(2) bit-vector algebra and the index-pair transforms.
 *
 * A basis-state index doubles as a bit vector: bit i of the integer is the
 * computational-basis value of qubit i, with bit 0 least significant. Every
 * module in this library shares that convention.
 */

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ppm {

/// Basis-state index interpreted as a length-n vector over GF(2).
using BitVec = std::uint64_t;

/// Bitwise difference of two indices; zero exactly when r == c.
constexpr BitVec xor_diff(BitVec r, BitVec c) noexcept { return r ^ c; }

/// Least-significant set bit of d, the qubit the transformed pair differs at.
/// Throws std::invalid_argument for d == 0 (a diagonal pair has no transform).
int pivot_bit(BitVec d);

/**
 * Invertible n x n bit matrix that maps every index pair (r, c) with
 * r ^ c == d onto a pair differing only at the pivot bit.
 *
 * The matrix is the identity with column `pivot` replaced by d, so its
 * action is x -> x ^ x_pivot * (d ^ e_pivot). Because bit `pivot` of d is 1,
 * applying the transform twice is the identity: no inverse is ever computed.
 */
class Gf2Transform {
  public:
    /// Transform for difference d with the default pivot, the least-significant
    /// set bit of d. Requires 0 < d < 2^n.
    Gf2Transform(int num_qubits, BitVec d);

    /// Same, with an explicit pivot; any set bit of d is a valid choice.
    Gf2Transform(int num_qubits, BitVec d, int pivot);

    int num_qubits() const noexcept { return n_; }
    BitVec diff() const noexcept { return d_; }
    int pivot() const noexcept { return pivot_; }

    /// Row i of the matrix as a bitmask over columns.
    BitVec row(int i) const;

    /// Matrix-vector product over GF(2). Requires x < 2^n.
    BitVec apply(BitVec x) const;

    /// Images (T r, T c) of a pair with r ^ c == d. The returned indices
    /// differ exactly at the pivot bit; the one whose pivot bit is 0 is a
    /// fixed point of the transform.
    std::pair<BitVec, BitVec> image_pair(BitVec r, BitVec c) const;

  private:
    int n_;
    BitVec d_;
    int pivot_;
    std::vector<BitVec> rows_;  // row bitmasks; apply() is an O(n) word loop
};

}  // namespace ppm
