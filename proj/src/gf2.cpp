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

#include "ppm/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace ppm {

int pivot_bit(BitVec d) {
    if (d == 0) {
        throw std::invalid_argument("pivot_bit: d == 0 marks a diagonal pair, which has no transform");
    }
    return std::countr_zero(d);
}

Gf2Transform::Gf2Transform(int num_qubits, BitVec d) : Gf2Transform(num_qubits, d, pivot_bit(d)) {}

Gf2Transform::Gf2Transform(int num_qubits, BitVec d, int pivot) : n_(num_qubits), d_(d), pivot_(pivot) {
    if (n_ < 1 || n_ > 62) {
        throw std::invalid_argument("Gf2Transform: qubit count out of range: " + std::to_string(n_));
    }
    const BitVec dim = BitVec{1} << n_;
    if (d_ == 0 || d_ >= dim) {
        throw std::invalid_argument("Gf2Transform: d must satisfy 0 < d < 2^n");
    }
    if (pivot_ < 0 || pivot_ >= n_ || ((d_ >> pivot_) & 1) == 0) {
        throw std::invalid_argument("Gf2Transform: pivot must be a set bit of d");
    }
    rows_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        // Identity row plus the pivot-column entry d_i.
        rows_[static_cast<std::size_t>(i)] = (BitVec{1} << i) | (((d_ >> i) & 1) << pivot_);
    }
}

BitVec Gf2Transform::row(int i) const {
    if (i < 0 || i >= n_) {
        throw std::out_of_range("Gf2Transform::row: index out of range");
    }
    return rows_[static_cast<std::size_t>(i)];
}

BitVec Gf2Transform::apply(BitVec x) const {
    if (x >= (BitVec{1} << n_)) {
        throw std::out_of_range("Gf2Transform::apply: input exceeds 2^n - 1");
    }
    BitVec y = 0;
    for (int i = 0; i < n_; ++i) {
        y |= static_cast<BitVec>(std::popcount(rows_[static_cast<std::size_t>(i)] & x) & 1) << i;
    }
    return y;
}

std::pair<BitVec, BitVec> Gf2Transform::image_pair(BitVec r, BitVec c) const {
    const BitVec dim = BitVec{1} << n_;
    if (r >= dim || c >= dim) {
        throw std::out_of_range("Gf2Transform::image_pair: index exceeds 2^n - 1");
    }
    if ((r ^ c) != d_) {
        throw std::invalid_argument("Gf2Transform::image_pair: pair difference does not match this transform");
    }
    return {apply(r), apply(c)};
}

}  // namespace ppm
