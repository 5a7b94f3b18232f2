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

#include "ppm/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ppm {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path);
    }
    return out;
}

int qubits_for_dimension(std::uint64_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::runtime_error("dimension must be a power of two of at least 2, got " +
                                 std::to_string(dim));
    }
    return std::countr_zero(dim);
}

}  // namespace

SparseMatrix parse_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("matrix file is empty");
    }
    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket") {
        throw std::runtime_error("missing %%MatrixMarket banner");
    }
    object = lowercase(object);
    format = lowercase(format);
    field = lowercase(field);
    symmetry = lowercase(symmetry);
    if (object != "matrix" || format != "coordinate") {
        throw std::runtime_error("only 'matrix coordinate' files are supported");
    }
    const bool complex_field = field == "complex";
    if (!complex_field && field != "real" && field != "integer") {
        throw std::runtime_error("unsupported field: " + field);
    }
    if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric" &&
        symmetry != "hermitian") {
        throw std::runtime_error("unsupported symmetry: " + symmetry);
    }

    // Size line, after any % comments.
    std::uint64_t rows = 0, cols = 0;
    std::size_t declared_nnz = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '%') {
            continue;
        }
        std::istringstream size_line(line);
        if (!(size_line >> rows >> cols >> declared_nnz)) {
            throw std::runtime_error("malformed size line: " + line);
        }
        break;
    }
    if (rows == 0) {
        throw std::runtime_error("missing size line");
    }
    if (rows != cols) {
        throw std::runtime_error("matrix must be square, got " + std::to_string(rows) + "x" +
                                 std::to_string(cols));
    }
    const int num_qubits = qubits_for_dimension(rows);

    std::vector<MatrixEntry> entries;
    entries.reserve(declared_nnz);
    std::size_t seen = 0;
    while (seen < declared_nnz && std::getline(in, line)) {
        if (line.empty() || line[0] == '%') {
            continue;
        }
        std::istringstream entry_line(line);
        std::uint64_t row = 0, col = 0;
        double re = 0.0, im = 0.0;
        if (!(entry_line >> row >> col >> re) || (complex_field && !(entry_line >> im))) {
            throw std::runtime_error("malformed entry line: " + line);
        }
        if (row == 0 || col == 0 || row > rows || col > cols) {
            throw std::runtime_error("entry index out of range: " + line);
        }
        ++seen;
        const MatrixEntry entry{row - 1, col - 1, {re, im}};
        entries.push_back(entry);
        if (entry.row != entry.col) {
            if (symmetry == "symmetric") {
                entries.push_back({entry.col, entry.row, entry.value});
            } else if (symmetry == "hermitian") {
                entries.push_back({entry.col, entry.row, std::conj(entry.value)});
            } else if (symmetry == "skew-symmetric") {
                entries.push_back({entry.col, entry.row, -entry.value});
            }
        } else if (symmetry == "skew-symmetric") {
            throw std::runtime_error("skew-symmetric matrix cannot carry diagonal entries");
        }
    }
    if (seen != declared_nnz) {
        throw std::runtime_error("expected " + std::to_string(declared_nnz) + " entries, found " +
                                 std::to_string(seen));
    }
    return SparseMatrix(num_qubits, std::move(entries));
}

SparseMatrix load_matrix_market(const std::string& path) {
    std::ifstream in = open_input(path);
    return parse_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const SparseMatrix& matrix) {
    const bool complex_field =
        std::any_of(matrix.entries().begin(), matrix.entries().end(),
                    [](const MatrixEntry& e) { return e.value.imag() != 0.0; });
    out << "%%MatrixMarket matrix coordinate " << (complex_field ? "complex" : "real")
        << " general\n";
    out << matrix.dim() << ' ' << matrix.dim() << ' ' << matrix.nnz() << '\n';
    out.precision(17);
    for (const MatrixEntry& e : matrix.entries()) {
        out << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value.real();
        if (complex_field) {
            out << ' ' << e.value.imag();
        }
        out << '\n';
    }
}

void write_matrix_market(const std::string& path, const SparseMatrix& matrix) {
    std::ofstream out = open_output(path);
    write_matrix_market(out, matrix);
}

StateVector parse_state(std::istream& in) {
    std::vector<std::pair<std::uint64_t, std::complex<double>>> records;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string index_text, re_text, im_text;
        if (!std::getline(fields, index_text, ',') || !std::getline(fields, re_text, ',') ||
            !std::getline(fields, im_text)) {
            throw std::runtime_error("state line " + std::to_string(line_number) +
                                     " is not index,re,im: " + line);
        }
        try {
            records.emplace_back(std::stoull(index_text),
                                 std::complex<double>(std::stod(re_text), std::stod(im_text)));
        } catch (const std::exception&) {
            throw std::runtime_error("state line " + std::to_string(line_number) +
                                     " is not numeric: " + line);
        }
    }
    if (records.size() < 2 || !std::has_single_bit(records.size())) {
        throw std::runtime_error("state file must list a power-of-two number of amplitudes, got " +
                                 std::to_string(records.size()));
    }
    const int num_qubits = std::countr_zero(records.size());
    std::vector<std::complex<double>> amplitudes(records.size());
    std::vector<bool> filled(records.size(), false);
    for (const auto& [index, amplitude] : records) {
        if (index >= records.size()) {
            throw std::runtime_error("state index " + std::to_string(index) + " out of range");
        }
        if (filled[index]) {
            throw std::runtime_error("state index " + std::to_string(index) + " listed twice");
        }
        filled[index] = true;
        amplitudes[index] = amplitude;
    }
    return StateVector(num_qubits, std::move(amplitudes));
}

StateVector load_state(const std::string& path) {
    std::ifstream in = open_input(path);
    return parse_state(in);
}

void write_state(std::ostream& out, const StateVector& state) {
    out.precision(17);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        const std::complex<double>& a = state.amplitudes()[i];
        out << i << ',' << a.real() << ',' << a.imag() << '\n';
    }
}

void write_state(const std::string& path, const StateVector& state) {
    std::ofstream out = open_output(path);
    write_state(out, state);
}

std::string report_to_json(const EstimationReport& report) {
    nlohmann::json j;
    j["value_re"] = report.value.real();
    j["value_im"] = report.value.imag();
    j["circuits_used"] = report.circuits_used;
    j["shots_total"] = report.shots_total;
    j["embedding_used"] = report.embedding_used;
    j["mode"] = report.mode == EstimationMode::Exact ? "exact" : "shots";
    j["shots_per_circuit"] = report.shots_per_circuit;
    j["seed"] = report.seed;
    j["generator"] = "xoshiro256**";
    j["diagonal"] = {{"measured", report.diagonal_measured},
                     {"contribution_re", report.diagonal_contribution.real()},
                     {"contribution_im", report.diagonal_contribution.imag()}};
    j["per_group"] = nlohmann::json::array();
    for (const GroupReport& group : report.per_group) {
        nlohmann::json parts = nlohmann::json::array();
        if (group.ran_real) {
            parts.push_back("real");
        }
        if (group.ran_imag) {
            parts.push_back("imag");
        }
        j["per_group"].push_back({{"d", group.d},
                                  {"k", group.pivot},
                                  {"parts", parts},
                                  {"gate_count", group.gate_count},
                                  {"contribution_re", group.contribution.real()},
                                  {"contribution_im", group.contribution.imag()}});
    }
    return j.dump(2) + "\n";
}

std::string report_to_csv(const EstimationReport& report) {
    std::ostringstream out;
    out.precision(17);
    out << "value_re,value_im,circuits_used,shots_total,embedding_used\n";
    out << report.value.real() << ',' << report.value.imag() << ',' << report.circuits_used << ','
        << report.shots_total << ',' << (report.embedding_used ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace ppm
