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

#include "ppm/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "ppm/rng.hpp"

namespace ppm {

namespace {

constexpr int kMaxSimQubits = 26;  // 1 GiB of amplitudes
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

void check_sim_qubits(int n) {
    if (n < 1 || n > kMaxSimQubits) {
        throw std::invalid_argument("StateVector: qubit count out of range: " + std::to_string(n));
    }
}

}  // namespace

StateVector::StateVector(int num_qubits) : n_(num_qubits) {
    check_sim_qubits(n_);
    amps_.assign(dim(), {});
    amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<std::complex<double>> amplitudes,
                         double norm_tolerance)
    : n_(num_qubits), amps_(std::move(amplitudes)) {
    check_sim_qubits(n_);
    if (amps_.size() != dim()) {
        throw std::invalid_argument("StateVector: expected " + std::to_string(dim()) + " amplitudes, got " +
                                    std::to_string(amps_.size()));
    }
    const double norm = norm_squared();
    if (std::abs(norm - 1.0) > norm_tolerance) {
        throw NormalizationError("StateVector: squared norm " + std::to_string(norm) +
                                 " is outside tolerance of 1");
    }
}

StateVector StateVector::basis_state(int num_qubits, BitVec index) {
    StateVector state(num_qubits);
    if (index >= state.dim()) {
        throw std::out_of_range("StateVector::basis_state: index exceeds 2^n - 1");
    }
    state.amps_[0] = 0.0;
    state.amps_[index] = 1.0;
    return state;
}

std::complex<double> StateVector::amplitude(BitVec index) const {
    if (index >= dim()) {
        throw std::out_of_range("StateVector::amplitude: index exceeds 2^n - 1");
    }
    return amps_[index];
}

double StateVector::norm_squared() const {
    double norm = 0.0;
    for (const std::complex<double>& a : amps_) {
        norm += std::norm(a);
    }
    return norm;
}

void StateVector::apply(const Gate& gate) {
    if (gate.target < 0 || gate.target >= n_) {
        throw std::out_of_range("StateVector::apply: target index out of range");
    }
    const std::uint64_t mask = std::uint64_t{1} << gate.target;
    const std::uint64_t lo = mask - 1;
    const std::uint64_t hi = ~lo;

    switch (gate.kind) {
        case GateKind::X:
            for (std::uint64_t j = 0; j < dim() / 2; ++j) {
                const std::uint64_t i0 = ((j & hi) << 1) | (j & lo);
                std::swap(amps_[i0], amps_[i0 | mask]);
            }
            break;
        case GateKind::Cnot: {
            if (gate.control < 0 || gate.control >= n_) {
                throw std::out_of_range("StateVector::apply: control index out of range");
            }
            if (gate.control == gate.target) {
                throw std::invalid_argument("StateVector::apply: control and target must differ");
            }
            const std::uint64_t cmask = std::uint64_t{1} << gate.control;
            for (std::uint64_t i = 0; i < dim(); ++i) {
                if ((i & cmask) != 0 && (i & mask) == 0) {
                    std::swap(amps_[i], amps_[i | mask]);
                }
            }
            break;
        }
        case GateKind::H:
            for (std::uint64_t j = 0; j < dim() / 2; ++j) {
                const std::uint64_t i0 = ((j & hi) << 1) | (j & lo);
                const std::uint64_t i1 = i0 | mask;
                const std::complex<double> a0 = amps_[i0];
                const std::complex<double> a1 = amps_[i1];
                amps_[i0] = (a0 + a1) * kInvSqrt2;
                amps_[i1] = (a0 - a1) * kInvSqrt2;
            }
            break;
        case GateKind::S:
            for (std::uint64_t i = 0; i < dim(); ++i) {
                if ((i & mask) != 0) {
                    const std::complex<double> a = amps_[i];
                    amps_[i] = {-a.imag(), a.real()};
                }
            }
            break;
        case GateKind::Sdg:
            for (std::uint64_t i = 0; i < dim(); ++i) {
                if ((i & mask) != 0) {
                    const std::complex<double> a = amps_[i];
                    amps_[i] = {a.imag(), -a.real()};
                }
            }
            break;
    }
}

StateVector run(const Circuit& circuit, StateVector state) {
    if (circuit.width() != state.num_qubits()) {
        throw std::invalid_argument("run: circuit width does not match state width");
    }
    for (const Gate& gate : circuit.gates()) {
        state.apply(gate);
    }
    return state;
}

OutcomeDistribution probabilities(const StateVector& state) {
    OutcomeDistribution dist;
    dist.probabilities.resize(state.dim());
    double total = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        dist.probabilities[i] = std::norm(state.amplitudes()[i]);
        total += dist.probabilities[i];
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw NormalizationError("probabilities: state norm " + std::to_string(total) +
                                 " is outside tolerance of 1");
    }
    return dist;
}

double ShotCounts::frequency(BitVec outcome) const {
    if (shots == 0) {
        return 0.0;
    }
    auto it = counts.find(outcome);
    return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(shots);
}

ShotCounts sample(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("sample: shot count must be at least 1");
    }
    double total = 0.0;
    std::vector<double> cdf(dist.probabilities.size());
    for (std::size_t i = 0; i < dist.probabilities.size(); ++i) {
        if (dist.probabilities[i] < 0.0) {
            throw std::invalid_argument("sample: negative probability");
        }
        total += dist.probabilities[i];
        cdf[i] = total;
    }
    if (cdf.empty() || std::abs(total - 1.0) > 1e-9) {
        throw NormalizationError("sample: distribution does not sum to 1");
    }

    ShotCounts result;
    result.shots = shots;
    Xoshiro256 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform01() * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t index = static_cast<std::size_t>(it - cdf.begin());
        if (index >= cdf.size()) {
            index = cdf.size() - 1;
        }
        ++result.counts[static_cast<BitVec>(index)];
    }
    return result;
}

}  // namespace ppm
