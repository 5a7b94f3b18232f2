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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "ppm/baselines.hpp"
#include "ppm/estimator.hpp"
#include "ppm/grouping.hpp"
#include "ppm/io.hpp"
#include "ppm/sweep.hpp"

namespace {

struct Options {
    std::string matrix_path;
    std::string phi_path;
    std::string psi_path;
    std::string out_path;
    std::string format = "json";
    std::string family;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::uint64_t bandwidth = 1;
    int n_min = 1;
    int n_max = 1;
    bool exact = false;
    bool two_state = false;
};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path);
    }
    return out;
}

int run_estimate(const Options& opt) {
    if (opt.exact && opt.shots > 0) {
        throw std::invalid_argument("--exact and --shots are mutually exclusive");
    }
    const ppm::SparseMatrix matrix = ppm::load_matrix_market(opt.matrix_path);
    ppm::StateVector phi = ppm::load_state(opt.phi_path);
    ppm::StateVector psi = opt.psi_path.empty() ? phi : ppm::load_state(opt.psi_path);

    const ppm::EstimationMode mode =
        opt.shots > 0 ? ppm::EstimationMode::Shots : ppm::EstimationMode::Exact;
    const ppm::EstimationReport report =
        ppm::estimate({matrix, std::move(phi), std::move(psi), mode, opt.shots, opt.seed});

    std::ofstream out = open_out(opt.out_path);
    out << (opt.format == "csv" ? ppm::report_to_csv(report) : ppm::report_to_json(report));

    std::cout.precision(17);
    std::cout << "value " << report.value.real() << (report.value.imag() < 0 ? " - " : " + ")
              << std::abs(report.value.imag()) << "i\n"
              << "circuits_used " << report.circuits_used << "\n"
              << "wrote " << opt.out_path << "\n";
    return 0;
}

int run_counts(const Options& opt) {
    const ppm::SparseMatrix matrix = ppm::load_matrix_market(opt.matrix_path);
    const ppm::MeasurementPlan plan = ppm::group_entries(matrix);
    const ppm::PlanVsBound comparison = ppm::plan_vs_bound(matrix);
    std::cout << "qubits " << matrix.num_qubits() << "\n"
              << "dimension " << matrix.dim() << "\n"
              << "nonzeros " << matrix.nnz() << "\n"
              << "bandwidth " << ppm::bandwidth(matrix) << "\n"
              << "diagonal " << (plan.has_diagonal ? "yes" : "no") << "\n"
              << "groups " << plan.groups.size() << "\n"
              << "ppm_circuits " << comparison.circuit_count << "\n"
              << "bound " << comparison.bound << "\n";
    return 0;
}

int run_sweep_command(const Options& opt) {
    ppm::SweepConfig config;
    config.family = ppm::parse_family(opt.family);
    config.n_min = opt.n_min;
    config.n_max = opt.n_max;
    config.bandwidth = opt.bandwidth;
    config.two_state = opt.two_state;
    config.seed = opt.seed;

    const std::vector<ppm::SweepRow> rows = ppm::run_sweep(config);
    std::ofstream out = open_out(opt.out_path);
    ppm::write_sweep_csv(out, rows);
    std::cout << "rows " << rows.size() << "\nwrote " << opt.out_path << "\n";
    return 0;
}

int run_decompose(const Options& opt) {
    const ppm::SparseMatrix matrix = ppm::load_matrix_market(opt.matrix_path);
    const std::vector<ppm::PauliTerm> terms = ppm::pauli_decompose(matrix);
    std::ofstream out = open_out(opt.out_path);
    out.precision(17);
    out << "string,re,im\n";
    for (const ppm::PauliTerm& term : terms) {
        out << term.string.str() << ',' << term.coeff.real() << ',' << term.coeff.imag() << '\n';
    }
    std::cout << "terms " << terms.size() << "\nwrote " << opt.out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inner-product estimation <phi|M|psi> via partial Pauli measurement"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* estimate = app.add_subcommand("estimate", "Estimate <phi|M|psi> and write a report");
    estimate->add_option("--matrix", opt.matrix_path, "MatrixMarket coordinate file")->required();
    estimate->add_option("--phi", opt.phi_path, "state vector CSV, one index,re,im line per amplitude")
        ->required();
    estimate->add_option("--psi", opt.psi_path,
                         "second state; when it differs from phi the ancilla embedding is used");
    estimate->add_option("--shots", opt.shots, "shots per circuit; enables sampling mode");
    estimate->add_option("--seed", opt.seed, "master seed for sampling");
    estimate->add_flag("--exact", opt.exact, "exact outcome probabilities (the default)");
    estimate->add_option("--out", opt.out_path, "report output path")->required();
    estimate->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* counts = app.add_subcommand("counts", "Measurement-plan analytics for a matrix");
    counts->add_option("--matrix", opt.matrix_path, "MatrixMarket coordinate file")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "Circuit-count comparison table across qubit counts");
    sweep->add_option("--family", opt.family, "dense-symmetric | dense-asymmetric | band")->required();
    sweep->add_option("--n-min", opt.n_min, "smallest qubit count")->required();
    sweep->add_option("--n-max", opt.n_max, "largest qubit count (<= 12)")->required();
    sweep->add_option("--bandwidth", opt.bandwidth, "band family half-width");
    sweep->add_flag("--two-state", opt.two_state, "count circuits for phi != psi via the embedding");
    sweep->add_option("--seed", opt.seed, "seed for the random matrix values");
    sweep->add_option("--out", opt.out_path, "CSV output path")->required();

    CLI::App* decompose = app.add_subcommand("decompose", "Full Pauli decomposition as CSV");
    decompose->add_option("--matrix", opt.matrix_path, "MatrixMarket coordinate file")->required();
    decompose->add_option("--out", opt.out_path, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*estimate) {
            return run_estimate(opt);
        }
        if (*counts) {
            return run_counts(opt);
        }
        if (*sweep) {
            return run_sweep_command(opt);
        }
        if (*decompose) {
            return run_decompose(opt);
        }
    } catch (const ppm::NormalizationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
