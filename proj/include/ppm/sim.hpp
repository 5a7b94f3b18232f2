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
 * Dense statevector simulator: exact outcome probabilities and seeded
 * multinomial shot sampling. Amplitude ordering follows the shared
 * convention that qubit i is bit i of the basis index.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ppm/circuit.hpp"
#include "ppm/gf2.hpp"

namespace ppm {

/// Thrown when amplitudes or probabilities fail the normalization check.
class NormalizationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(int num_qubits);

    /// Adopts 2^num_qubits amplitudes; the squared norm must be within
    /// `norm_tolerance` of 1 or a NormalizationError is thrown.
    StateVector(int num_qubits, std::vector<std::complex<double>> amplitudes,
                double norm_tolerance = 1e-9);

    static StateVector basis_state(int num_qubits, BitVec index);

    int num_qubits() const noexcept { return n_; }
    std::uint64_t dim() const noexcept { return std::uint64_t{1} << n_; }
    const std::vector<std::complex<double>>& amplitudes() const noexcept { return amps_; }
    std::complex<double> amplitude(BitVec index) const;

    double norm_squared() const;

    /// In-place unitary action of one gate.
    void apply(const Gate& gate);

  private:
    int n_;
    std::vector<std::complex<double>> amps_;
};

/// Left-fold of the gate list over the state. The circuit width must match.
StateVector run(const Circuit& circuit, StateVector state);

struct OutcomeDistribution {
    std::vector<double> probabilities;
};

/// Elementwise |amplitude|^2; rejects states whose norm drifted beyond 1e-9.
OutcomeDistribution probabilities(const StateVector& state);

struct ShotCounts {
    std::map<BitVec, std::uint64_t> counts;
    std::uint64_t shots = 0;

    double frequency(BitVec outcome) const;
};

/// Multinomial draw by inverse CDF over the full outcome table, using the
/// fixed xoshiro256** generator: identical (dist, shots, seed) triples give
/// identical counts on every platform.
ShotCounts sample(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed);

}  // namespace ppm
