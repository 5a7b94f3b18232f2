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

#include "ppm/circuit.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace ppm {

Gate Gate::cnot(int control, int target) {
    if (control == target) {
        throw std::invalid_argument("Gate::cnot: control and target must differ");
    }
    return {GateKind::Cnot, target, control};
}

Circuit::Circuit(int width) : width_(width) {
    if (width_ < 1) {
        throw std::invalid_argument("Circuit: width must be positive");
    }
}

void Circuit::add(const Gate& gate) {
    if (gate.target < 0 || gate.target >= width_) {
        throw std::out_of_range("Circuit::add: target outside circuit width");
    }
    if (gate.kind == GateKind::Cnot) {
        if (gate.control < 0 || gate.control >= width_) {
            throw std::out_of_range("Circuit::add: control outside circuit width");
        }
        if (gate.control == gate.target) {
            throw std::invalid_argument("Circuit::add: control and target must differ");
        }
    }
    gates_.push_back(gate);
}

std::size_t Circuit::cnot_count() const {
    std::size_t count = 0;
    for (const Gate& gate : gates_) {
        count += gate.kind == GateKind::Cnot ? 1 : 0;
    }
    return count;
}

Circuit synthesize_from_transform(const Gf2Transform& transform) {
    Circuit circuit(transform.num_qubits());
    for (int target = 0; target < transform.num_qubits(); ++target) {
        BitVec off_diagonal = transform.row(target) & ~(BitVec{1} << target);
        while (off_diagonal != 0) {
            const int control = std::countr_zero(off_diagonal);
            circuit.add(Gate::cnot(control, target));
            off_diagonal &= off_diagonal - 1;
        }
    }
    return circuit;
}

MeasurementCircuit real_measurement_circuit(int num_qubits, BitVec d) {
    const Gf2Transform transform(num_qubits, d);
    Circuit circuit = synthesize_from_transform(transform);
    circuit.add(Gate::h(transform.pivot()));
    return {std::move(circuit), transform.pivot()};
}

MeasurementCircuit imag_measurement_circuit(int num_qubits, BitVec d) {
    const Gf2Transform transform(num_qubits, d);
    Circuit circuit = synthesize_from_transform(transform);
    circuit.add(Gate::sdg(transform.pivot()));
    circuit.add(Gate::h(transform.pivot()));
    return {std::move(circuit), transform.pivot()};
}

std::string format_circuit(const Circuit& circuit) {
    std::ostringstream out;
    for (const Gate& gate : circuit.gates()) {
        switch (gate.kind) {
            case GateKind::X:
                out << "X " << gate.target << '\n';
                break;
            case GateKind::Cnot:
                out << "CNOT " << gate.control << ' ' << gate.target << '\n';
                break;
            case GateKind::H:
                out << "H " << gate.target << '\n';
                break;
            case GateKind::S:
                out << "S " << gate.target << '\n';
                break;
            case GateKind::Sdg:
                out << "SDG " << gate.target << '\n';
                break;
        }
    }
    return out.str();
}

}  // namespace ppm
