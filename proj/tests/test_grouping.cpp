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

#include <algorithm>
#include <complex>
#include <map>
#include <vector>

#include <doctest.h>

#include "ppm/grouping.hpp"
#include "test_util.hpp"

using namespace ppm;
using test::MatrixClass;

TEST_SUITE_BEGIN("grouping");

namespace {

SparseMatrix tridiagonal(int n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<MatrixEntry> entries;
    for (std::uint64_t i = 0; i < dim; ++i) {
        entries.push_back({i, i, 2.0});
        if (i + 1 < dim) {
            entries.push_back({i, i + 1, -1.0});
            entries.push_back({i + 1, i, -1.0});
        }
    }
    return SparseMatrix(n, std::move(entries));
}

// Rebuilds the entry list from a plan; used for the partition property.
std::map<std::pair<std::uint64_t, std::uint64_t>, std::complex<double>> plan_support(
    const MeasurementPlan& plan) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::complex<double>> support;
    for (const MatrixEntry& e : plan.diagonal) {
        support[{e.row, e.col}] += e.value;
    }
    for (const EntryGroup& group : plan.groups) {
        for (const PairTerm& pair : group.pairs) {
            const std::uint64_t p = pair.rep;
            const std::uint64_t q = pair.rep ^ group.d;
            const std::complex<double> upper = (pair.coeff_plus + pair.coeff_minus) / 2.0;
            const std::complex<double> lower = (pair.coeff_plus - pair.coeff_minus) / 2.0;
            if (upper != std::complex<double>{}) {
                support[{p, q}] += upper;
            }
            if (lower != std::complex<double>{}) {
                support[{q, p}] += lower;
            }
        }
    }
    return support;
}

}  // namespace

TEST_CASE("sparse matrix construction validates entries") {
    CHECK_THROWS_AS(SparseMatrix(2, {{0, 4, 1.0}}), std::out_of_range);
    CHECK_THROWS_AS(SparseMatrix(2, {{1, 2, 1.0}, {1, 2, 3.0}}), std::invalid_argument);
    SUBCASE("exact zeros are dropped at ingestion") {
        const SparseMatrix m(2, {{0, 1, 0.0}, {1, 0, 2.0}});
        CHECK(m.nnz() == 1);
        CHECK(m.at(1, 0) == std::complex<double>{2.0});
        CHECK(m.at(0, 1) == std::complex<double>{});
    }
    SUBCASE("a magnitude threshold prunes near-zeros") {
        const SparseMatrix m(1, {{0, 0, 1e-13}, {0, 1, 1.0}}, 1e-12);
        CHECK(m.nnz() == 1);
    }
}

TEST_CASE("tridiagonal n=2 groups by XOR key with canonical representatives") {
    const MeasurementPlan plan = group_entries(tridiagonal(2));
    CHECK(plan.has_diagonal);
    CHECK(plan.diagonal.size() == 4);
    REQUIRE(plan.groups.size() == 2);

    const EntryGroup& g1 = plan.groups[0];
    CHECK(g1.d == 1);
    CHECK(g1.pivot == 0);
    REQUIRE(g1.pairs.size() == 2);
    CHECK(g1.pairs[0].rep == 0);
    CHECK(g1.pairs[1].rep == 2);

    // (1,2) has d = 3, pivot 0; the representative with pivot bit 0 is 2.
    const EntryGroup& g3 = plan.groups[1];
    CHECK(g3.d == 3);
    REQUIRE(g3.pairs.size() == 1);
    CHECK(g3.pairs[0].rep == 2);
    CHECK(g3.pairs[0].coeff_plus == std::complex<double>{-2.0});
    CHECK(g3.pairs[0].coeff_minus == std::complex<double>{});

    CHECK(plan.circuit_count == 3);  // diagonal + two real-only groups
}

TEST_CASE("diagonal-only and dense matrices hit the count formulas") {
    SUBCASE("diagonal-only matrix needs one circuit") {
        const SparseMatrix m(3, {{0, 0, 1.0}, {5, 5, -2.0}});
        const MeasurementPlan plan = group_entries(m);
        CHECK(plan.groups.empty());
        CHECK(plan.circuit_count == 1);
    }
    SUBCASE("dense real symmetric n=3 needs 2^3 circuits") {
        Xoshiro256 rng(7);
        const MeasurementPlan plan =
            group_entries(test::random_matrix(3, MatrixClass::RealSymmetric, rng));
        CHECK(plan.groups.size() == 7);
        for (const EntryGroup& g : plan.groups) {
            CHECK(g.needs_real);
            CHECK_FALSE(g.needs_imag);
        }
        CHECK(plan.circuit_count == 8);
    }
    SUBCASE("dense complex general n=3 needs 2(2^3 - 1) + 1 circuits") {
        Xoshiro256 rng(8);
        const MeasurementPlan plan =
            group_entries(test::random_matrix(3, MatrixClass::ComplexGeneral, rng));
        CHECK(plan.groups.size() == 7);
        CHECK(plan.circuit_count == 2 * 7 + 1);
    }
    SUBCASE("real antisymmetric matrices never need the real part") {
        const SparseMatrix m(2, {{0, 1, 1.5}, {1, 0, -1.5}, {2, 3, -0.5}, {3, 2, 0.5}});
        const MeasurementPlan plan = group_entries(m);
        for (const EntryGroup& g : plan.groups) {
            CHECK_FALSE(g.needs_real);
            CHECK(g.needs_imag);
        }
        CHECK(plan.circuit_count == 1);  // no diagonal, one group, imag only
    }
}

TEST_CASE("the plan partitions the nonzero support exactly") {
    Xoshiro256 rng(21);
    for (const MatrixClass cls : {MatrixClass::RealSymmetric, MatrixClass::RealGeneral,
                                  MatrixClass::ComplexHermitian, MatrixClass::ComplexGeneral}) {
        for (int n = 1; n <= 4; ++n) {
            const SparseMatrix m = test::random_matrix(n, cls, rng);
            const auto support = plan_support(group_entries(m));
            REQUIRE(support.size() == m.nnz());
            for (const MatrixEntry& e : m.entries()) {
                auto it = support.find({e.row, e.col});
                REQUIRE(it != support.end());
                CHECK(std::abs(it->second - e.value) < 1e-12);
            }
        }
    }
}

TEST_CASE("bandwidth follows the definition") {
    CHECK(bandwidth(tridiagonal(3)) == 1);
    CHECK(bandwidth(SparseMatrix(2, {{0, 0, 1.0}, {3, 3, 1.0}})) == 0);
    CHECK(bandwidth(SparseMatrix(2)) == 0);
    CHECK(bandwidth(SparseMatrix(3, {{0, 7, 1.0}})) == 7);
}

TEST_CASE("circuit count upper bound evaluates the ceiling formula") {
    CHECK(circuit_count_upper_bound(5, 0) == 1);
    CHECK(circuit_count_upper_bound(3, 1) == 8);
    CHECK(circuit_count_upper_bound(4, 2) == 16);
    CHECK(circuit_count_upper_bound(4, 3) == 2 * ((4 - 2) * 3 + 4));  // ceil(log2 3) = 2
    CHECK_THROWS_AS(circuit_count_upper_bound(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(circuit_count_upper_bound(2, 7), std::invalid_argument);
}

TEST_CASE("plan_vs_bound pairs the actual count with the formula") {
    SUBCASE("tridiagonal n=3") {
        const PlanVsBound r = plan_vs_bound(tridiagonal(3));
        CHECK(r.circuit_count == 4);  // groups d in {1, 3, 7} plus diagonal
        CHECK(r.bound == 8);
    }
    SUBCASE("diagonal matrix") {
        const PlanVsBound r = plan_vs_bound(SparseMatrix(2, {{1, 1, 4.0}}));
        CHECK(r.circuit_count == 1);
        CHECK(r.bound == 1);
    }
    SUBCASE("dense symmetric n=4") {
        Xoshiro256 rng(3);
        const PlanVsBound r =
            plan_vs_bound(test::random_matrix(4, MatrixClass::RealSymmetric, rng));
        CHECK(r.circuit_count == 16);
        CHECK(r.bound == circuit_count_upper_bound(4, 15));
    }
}

TEST_CASE("random band matrices never exceed the bound") {
    Xoshiro256 rng(99);
    for (int n = 3; n <= 8; ++n) {
        for (const std::uint64_t w : {1ull, 2ull, 4ull}) {
            for (int instance = 0; instance < 20; ++instance) {
                const SparseMatrix m = test::random_band_matrix(n, w, 0.6, rng);
                if (m.nnz() == 0) {
                    continue;
                }
                const PlanVsBound r = plan_vs_bound(m);
                CHECK(r.circuit_count <= r.bound);
            }
        }
    }
}

TEST_SUITE_END();
