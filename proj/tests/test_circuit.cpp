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

#include <stdexcept>
#include <bit>

#include <doctest.h>

#include "ppm/circuit.hpp"
#include "ppm/sim.hpp"

using namespace ppm;

TEST_SUITE_BEGIN("circuit");

namespace {

// GF(2) action of a CNOT-only circuit on a basis index, evaluated gate by
// gate; independent of both the transform matrix and the simulator kernels.
BitVec cnot_network_image(const Circuit& circuit, BitVec x) {
    for (const Gate& gate : circuit.gates()) {
        REQUIRE(gate.kind == GateKind::Cnot);
        if ((x >> gate.control) & 1) {
            x ^= BitVec{1} << gate.target;
        }
    }
    return x;
}

}  // namespace

TEST_CASE("gate and circuit validation") {
    CHECK_THROWS_AS(Gate::cnot(1, 1), std::invalid_argument);
    Circuit circuit(2);
    CHECK_THROWS_AS(circuit.add(Gate::h(2)), std::out_of_range);
    CHECK_THROWS_AS(circuit.add(Gate::cnot(3, 0)), std::out_of_range);
    circuit.add(Gate::cnot(0, 1));
    CHECK(circuit.cnot_count() == 1);
}

TEST_CASE("synthesis emits one CNOT per extra set bit of d") {
    SUBCASE("n=2, d=11") {
        const Circuit c = synthesize_from_transform(Gf2Transform(2, 0b11));
        REQUIRE(c.gates().size() == 1);
        CHECK(c.gates()[0].kind == GateKind::Cnot);
        CHECK(c.gates()[0].control == 0);
        CHECK(c.gates()[0].target == 1);
    }
    SUBCASE("n=3, d=101") {
        const Circuit c = synthesize_from_transform(Gf2Transform(3, 0b101));
        REQUIRE(c.gates().size() == 1);
        CHECK(c.gates()[0].control == 0);
        CHECK(c.gates()[0].target == 2);
    }
    SUBCASE("d = e_k gives an empty gate list") {
        CHECK(synthesize_from_transform(Gf2Transform(3, 0b010)).gates().empty());
    }
}

TEST_CASE("the CNOT network reproduces the transform on every basis index") {
    for (int n = 1; n <= 6; ++n) {
        const BitVec dim = BitVec{1} << n;
        for (BitVec d = 1; d < dim; ++d) {
            const Gf2Transform t(n, d);
            const Circuit network = synthesize_from_transform(t);
            for (BitVec x = 0; x < dim; ++x) {
                CHECK(cnot_network_image(network, x) == t.apply(x));
            }
        }
    }
}

TEST_CASE("the CNOT network is a permutation of basis states in the simulator") {
    for (int n = 1; n <= 5; ++n) {
        const BitVec dim = BitVec{1} << n;
        for (BitVec d = 1; d < dim; ++d) {
            const Gf2Transform t(n, d);
            const Circuit network = synthesize_from_transform(t);
            for (BitVec x = 0; x < dim; ++x) {
                const StateVector out = run(network, StateVector::basis_state(n, x));
                CHECK(out.amplitude(t.apply(x)) == std::complex<double>{1.0});
            }
        }
    }
}

TEST_CASE("measurement circuits append the basis-change tail on the pivot") {
    SUBCASE("n=1 real tail is a single H") {
        const auto [circuit, pivot] = real_measurement_circuit(1, 0b1);
        CHECK(pivot == 0);
        REQUIRE(circuit.gates().size() == 1);
        CHECK(circuit.gates()[0].kind == GateKind::H);
    }
    SUBCASE("n=2, d=11 real circuit") {
        const auto [circuit, pivot] = real_measurement_circuit(2, 0b11);
        CHECK(pivot == 0);
        CHECK(format_circuit(circuit) == "CNOT 0 1\nH 0\n");
    }
    SUBCASE("n=1 imaginary tail is Sdg then H") {
        const auto [circuit, pivot] = imag_measurement_circuit(1, 0b1);
        REQUIRE(circuit.gates().size() == 2);
        CHECK(circuit.gates()[0].kind == GateKind::Sdg);
        CHECK(circuit.gates()[1].kind == GateKind::H);
    }
    SUBCASE("d = e_0 has no CNOT network") {
        const auto [circuit, pivot] = imag_measurement_circuit(2, 0b01);
        CHECK(format_circuit(circuit) == "SDG 0\nH 0\n");
    }
    SUBCASE("n=3, d=110 pivots on qubit 1") {
        const auto [circuit, pivot] = imag_measurement_circuit(3, 0b110);
        CHECK(pivot == 1);
        CHECK(format_circuit(circuit) == "CNOT 1 2\nSDG 1\nH 1\n");
    }
    SUBCASE("d = 0 is rejected") {
        CHECK_THROWS_AS(real_measurement_circuit(2, 0), std::invalid_argument);
        CHECK_THROWS_AS(imag_measurement_circuit(2, 0), std::invalid_argument);
    }
}

TEST_CASE("gate counts stay within popcount(d) - 1 CNOTs plus a two-gate tail") {
    for (int n = 1; n <= 8; ++n) {
        const BitVec dim = BitVec{1} << n;
        for (BitVec d = 1; d < dim; ++d) {
            const auto real = real_measurement_circuit(n, d);
            const auto imag = imag_measurement_circuit(n, d);
            const std::size_t expected_cnots = static_cast<std::size_t>(std::popcount(d)) - 1;
            CHECK(real.circuit.cnot_count() == expected_cnots);
            CHECK(expected_cnots <= static_cast<std::size_t>(n) - 1);
            CHECK(real.circuit.gates().size() - real.circuit.cnot_count() == 1);
            CHECK(imag.circuit.gates().size() - imag.circuit.cnot_count() == 2);
        }
    }
}

TEST_CASE("format_circuit covers every gate kind") {
    Circuit circuit(3);
    circuit.add(Gate::x(2));
    circuit.add(Gate::cnot(0, 1));
    circuit.add(Gate::h(0));
    circuit.add(Gate::s(1));
    circuit.add(Gate::sdg(2));
    CHECK(format_circuit(circuit) == "X 2\nCNOT 0 1\nH 0\nS 1\nSDG 2\n");
}

TEST_SUITE_END();
