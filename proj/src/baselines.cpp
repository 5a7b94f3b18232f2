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

#include "ppm/baselines.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ppm {

namespace {

constexpr int kMaxPauliQubits = 8;
constexpr double kCoeffPruneThreshold = 1e-12;
constexpr char kLetterChars[] = "IXYZ";

}  // namespace

PauliString::PauliString(int num_qubits) : n_(num_qubits), code_(0) {
    if (n_ < 1 || n_ > 32) {
        throw std::invalid_argument("PauliString: qubit count out of range");
    }
}

PauliString PauliString::parse(std::string_view text) {
    PauliString result(static_cast<int>(text.size()));
    for (int qubit = 0; qubit < result.n_; ++qubit) {
        const char c = text[static_cast<std::size_t>(result.n_ - 1 - qubit)];
        const char* pos = std::char_traits<char>::find(kLetterChars, 4, c);
        if (pos == nullptr) {
            throw std::invalid_argument("PauliString::parse: letters must be one of I, X, Y, Z");
        }
        result.set_letter(qubit, static_cast<Pauli>(pos - kLetterChars));
    }
    return result;
}

Pauli PauliString::letter(int qubit) const {
    if (qubit < 0 || qubit >= n_) {
        throw std::out_of_range("PauliString::letter: qubit out of range");
    }
    return static_cast<Pauli>((code_ >> (2 * qubit)) & 3);
}

void PauliString::set_letter(int qubit, Pauli letter) {
    if (qubit < 0 || qubit >= n_) {
        throw std::out_of_range("PauliString::set_letter: qubit out of range");
    }
    code_ &= ~(std::uint64_t{3} << (2 * qubit));
    code_ |= static_cast<std::uint64_t>(letter) << (2 * qubit);
}

std::string PauliString::str() const {
    std::string text(static_cast<std::size_t>(n_), 'I');
    for (int qubit = 0; qubit < n_; ++qubit) {
        text[static_cast<std::size_t>(n_ - 1 - qubit)] = kLetterChars[static_cast<int>(letter(qubit))];
    }
    return text;
}

std::vector<PauliTerm> pauli_decompose(const SparseMatrix& matrix) {
    const int n = matrix.num_qubits();
    if (n > kMaxPauliQubits) {
        throw std::invalid_argument("pauli_decompose: refusing the 4^n enumeration beyond 8 qubits");
    }
    const std::uint64_t choices = matrix.dim();
    const double scale = 1.0 / static_cast<double>(matrix.dim());

    std::unordered_map<std::uint64_t, std::complex<double>> coeffs;
    for (const MatrixEntry& entry : matrix.entries()) {
        const std::uint64_t diff = entry.row ^ entry.col;

        // Choice bit i picks the second compatible letter at qubit i:
        // I -> Z on agreeing bits, X -> Y on differing bits. The first
        // choice always has trace factor 1; the second has a unit factor.
        std::uint64_t code = 0;
        std::vector<std::complex<double>> alt_factor(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            if ((diff >> i) & 1) {
                code |= std::uint64_t{1} << (2 * i);  // X
                alt_factor[static_cast<std::size_t>(i)] =
                    ((entry.col >> i) & 1) ? std::complex<double>(0.0, 1.0)
                                           : std::complex<double>(0.0, -1.0);
            } else {
                alt_factor[static_cast<std::size_t>(i)] = ((entry.row >> i) & 1) ? -1.0 : 1.0;
            }
        }

        // Gray-code walk over the 2^n letter choices: one unit multiply and
        // one two-bit flip per step.
        std::complex<double> factor = 1.0;
        coeffs[code] += entry.value;
        for (std::uint64_t step = 1; step < choices; ++step) {
            const int toggled = std::countr_zero(step);
            const bool now_set = ((step ^ (step >> 1)) >> toggled) & 1;
            const std::complex<double> f = alt_factor[static_cast<std::size_t>(toggled)];
            factor *= now_set ? f : std::conj(f);
            code ^= std::uint64_t{3} << (2 * toggled);
            coeffs[code] += entry.value * factor;
        }
    }

    std::vector<PauliTerm> terms;
    terms.reserve(coeffs.size());
    for (const auto& [code, coeff] : coeffs) {
        const std::complex<double> scaled = coeff * scale;
        if (std::abs(scaled) > kCoeffPruneThreshold) {
            terms.push_back({PauliString(n, code), scaled});
        }
    }
    std::sort(terms.begin(), terms.end(),
              [](const PauliTerm& a, const PauliTerm& b) { return a.string < b.string; });
    return terms;
}

SparseMatrix pauli_reconstruct(int num_qubits, const std::vector<PauliTerm>& terms) {
    if (num_qubits > kMaxPauliQubits) {
        throw std::invalid_argument("pauli_reconstruct: refusing the dense accumulation beyond 8 qubits");
    }
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    std::vector<std::complex<double>> dense(dim * dim);
    constexpr std::complex<double> kIPower[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

    for (const PauliTerm& term : terms) {
        if (term.string.num_qubits() != num_qubits) {
            throw std::invalid_argument("pauli_reconstruct: string length does not match the qubit count");
        }
        std::uint64_t flip_mask = 0;
        std::uint64_t phase_mask = 0;
        int y_count = 0;
        for (int i = 0; i < num_qubits; ++i) {
            const Pauli letter = term.string.letter(i);
            if (letter == Pauli::X || letter == Pauli::Y) {
                flip_mask |= std::uint64_t{1} << i;
            }
            if (letter == Pauli::Z || letter == Pauli::Y) {
                phase_mask |= std::uint64_t{1} << i;
            }
            y_count += letter == Pauli::Y ? 1 : 0;
        }
        const std::complex<double> base = term.coeff * kIPower[y_count & 3];
        for (std::uint64_t col = 0; col < dim; ++col) {
            const double sign = (std::popcount(col & phase_mask) & 1) ? -1.0 : 1.0;
            dense[(col ^ flip_mask) * dim + col] += base * sign;
        }
    }

    std::vector<MatrixEntry> entries;
    for (std::uint64_t row = 0; row < dim; ++row) {
        for (std::uint64_t col = 0; col < dim; ++col) {
            entries.push_back({row, col, dense[row * dim + col]});
        }
    }
    return SparseMatrix(num_qubits, std::move(entries), kCoeffPruneThreshold);
}

std::size_t naive_circuit_count(const std::vector<PauliTerm>& terms) {
    std::set<std::string> distinct;
    for (const PauliTerm& term : terms) {
        if (!term.string.is_identity()) {
            distinct.insert(term.string.str());
        }
    }
    return distinct.size();
}

bool qwc_commutes(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("qwc_commutes: string lengths must agree");
    }
    for (int i = 0; i < a.num_qubits(); ++i) {
        const Pauli pa = a.letter(i);
        const Pauli pb = b.letter(i);
        if (pa != pb && pa != Pauli::I && pb != Pauli::I) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<PauliTerm>> qwc_group(std::vector<PauliTerm> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const PauliTerm& a, const PauliTerm& b) { return a.string < b.string; });

    // A group's profile holds, per qubit, the one non-I letter its members
    // share (or I); a term fits the group iff it fits the profile.
    std::vector<std::vector<PauliTerm>> groups;
    std::vector<PauliString> profiles;
    for (PauliTerm& term : terms) {
        bool placed = false;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (!qwc_commutes(profiles[g], term.string)) {
                continue;
            }
            for (int i = 0; i < term.string.num_qubits(); ++i) {
                if (profiles[g].letter(i) == Pauli::I) {
                    profiles[g].set_letter(i, term.string.letter(i));
                }
            }
            groups[g].push_back(std::move(term));
            placed = true;
            break;
        }
        if (!placed) {
            profiles.push_back(term.string);
            groups.push_back({std::move(term)});
        }
    }
    return groups;
}

}  // namespace ppm
