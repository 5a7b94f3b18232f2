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
 * Gate-level circuit representation and synthesis of measurement circuits.
 *
 * A group circuit is a fan of CNOTs sharing the pivot as control, followed
 * by a one- or two-gate basis change on the pivot qubit. Measurement is
 * implicitly all qubits in the computational basis.
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ppm/gf2.hpp"

namespace ppm {

enum class GateKind { X, Cnot, H, S, Sdg };

struct Gate {
    GateKind kind = GateKind::X;
    int target = 0;
    int control = -1;  // Cnot only

    static Gate x(int target) { return {GateKind::X, target, -1}; }
    static Gate cnot(int control, int target);
    static Gate h(int target) { return {GateKind::H, target, -1}; }
    static Gate s(int target) { return {GateKind::S, target, -1}; }
    static Gate sdg(int target) { return {GateKind::Sdg, target, -1}; }
};

class Circuit {
  public:
    explicit Circuit(int width);

    int width() const noexcept { return width_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }

    /// Appends a gate after validating its qubit indices against the width.
    void add(const Gate& gate);

    std::size_t cnot_count() const;

  private:
    int width_;
    std::vector<Gate> gates_;
};

/// CNOT network realizing the transform on basis indices: for every
/// off-diagonal 1 in a row of the matrix, a CNOT from that column onto the
/// row. Targets are emitted in ascending order so serialization is stable.
Circuit synthesize_from_transform(const Gf2Transform& transform);

struct MeasurementCircuit {
    Circuit circuit;
    int pivot = 0;
};

/// CNOT network for (n, d) followed by H on the pivot. Measuring this
/// circuit exposes Re <phi|p><p^d|phi> for every pair of the group.
MeasurementCircuit real_measurement_circuit(int num_qubits, BitVec d);

/// CNOT network, then S-dagger and H on the pivot, exposing the imaginary
/// parts with a positive sign convention.
MeasurementCircuit imag_measurement_circuit(int num_qubits, BitVec d);

/// One gate per line, e.g. "CNOT 0 1\nH 0\n".
std::string format_circuit(const Circuit& circuit);

}  // namespace ppm
