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
 * File formats: MatrixMarket coordinate matrices, CSV state vectors
 * (`index,re,im` per line), and report serialization.
 */

#pragma once

#include <iosfwd>
#include <string>

#include "ppm/estimator.hpp"
#include "ppm/grouping.hpp"
#include "ppm/sim.hpp"

namespace ppm {

/// Parses a MatrixMarket coordinate file (real, integer or complex field;
/// general, symmetric, skew-symmetric or hermitian symmetry). The matrix
/// must be square with a power-of-two dimension of at least 2.
SparseMatrix parse_matrix_market(std::istream& in);
SparseMatrix load_matrix_market(const std::string& path);

/// Writes coordinate format with 17 significant digits, so a load of the
/// written file reproduces the matrix exactly.
void write_matrix_market(std::ostream& out, const SparseMatrix& matrix);
void write_matrix_market(const std::string& path, const SparseMatrix& matrix);

/// Parses one `index,re,im` line per amplitude; every index in [0, 2^n)
/// must appear exactly once. Lines starting with '#' are skipped.
/// Normalization is validated on load.
StateVector parse_state(std::istream& in);
StateVector load_state(const std::string& path);

void write_state(std::ostream& out, const StateVector& state);
void write_state(const std::string& path, const StateVector& state);

std::string report_to_json(const EstimationReport& report);
std::string report_to_csv(const EstimationReport& report);

}  // namespace ppm
