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
#include <set>
#include <utility>

#include <doctest.h>

#include "ppm/gf2.hpp"

using namespace ppm;

TEST_SUITE_BEGIN("gf2");

namespace {

// Closed-form image x ^ x_k (d ^ e_k); the matrix implementation is checked
// against this independent route.
BitVec closed_form_image(int pivot, BitVec d, BitVec x) {
    return ((x >> pivot) & 1) ? x ^ d ^ (BitVec{1} << pivot) : x;
}

}  // namespace

TEST_CASE("xor_diff is the bitwise difference") {
    CHECK(xor_diff(0b00, 0b11) == 0b11);
    CHECK(xor_diff(0b010, 0b111) == 0b101);
    for (BitVec x = 0; x < 16; ++x) {
        CHECK(xor_diff(x, x) == 0);
    }
}

TEST_CASE("pivot_bit picks the lowest set bit") {
    CHECK(pivot_bit(0b101) == 0);
    CHECK(pivot_bit(0b110) == 1);
    CHECK(pivot_bit(0b100) == 2);
    CHECK_THROWS_AS(pivot_bit(0), std::invalid_argument);
}

TEST_CASE("transform construction validates its inputs") {
    CHECK_THROWS_AS(Gf2Transform(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Gf2Transform(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(Gf2Transform(3, 0b101, 1), std::invalid_argument);  // bit 1 of d is 0
    CHECK_THROWS_AS(Gf2Transform(0, 1), std::invalid_argument);
}

TEST_CASE("transform for n=2, d=11 maps the four indices as expected") {
    const Gf2Transform t(2, 0b11);
    CHECK(t.pivot() == 0);
    CHECK(t.apply(0b00) == 0b00);
    CHECK(t.apply(0b01) == 0b11);
    CHECK(t.apply(0b10) == 0b10);
    CHECK(t.apply(0b11) == 0b01);
}

TEST_CASE("transform for n=3, d=101 sends 111 to 011 and fixes 010") {
    const Gf2Transform t(3, 0b101);
    for (BitVec x = 0; x < 8; ++x) {
        CHECK(t.apply(x) == closed_form_image(t.pivot(), 0b101, x));
    }
    CHECK(t.apply(0b111) == 0b011);
    CHECK(t.apply(0b010) == 0b010);
}

TEST_CASE("transform for d = e_k is the identity") {
    const Gf2Transform t(1, 0b1);
    CHECK(t.apply(0) == 0);
    CHECK(t.apply(1) == 1);
    const Gf2Transform t4(4, 0b0100);
    for (BitVec x = 0; x < 16; ++x) {
        CHECK(t4.apply(x) == x);
    }
}

TEST_CASE("apply fixes zero and validates the input range") {
    const Gf2Transform t(2, 0b11);
    CHECK(t.apply(0b01) == 0b11);
    CHECK(t.apply(0) == 0);
    CHECK_THROWS_AS(t.apply(4), std::out_of_range);
}

TEST_CASE("every transform is an involution") {
    for (int n = 1; n <= 6; ++n) {
        const BitVec dim = BitVec{1} << n;
        for (BitVec d = 1; d < dim; ++d) {
            const Gf2Transform t(n, d);
            for (BitVec x = 0; x < dim; ++x) {
                CHECK(t.apply(t.apply(x)) == x);
            }
        }
    }
}

TEST_CASE("matrix apply agrees with the closed form everywhere") {
    for (int n = 1; n <= 6; ++n) {
        const BitVec dim = BitVec{1} << n;
        for (BitVec d = 1; d < dim; ++d) {
            const Gf2Transform t(n, d);
            for (BitVec x = 0; x < dim; ++x) {
                CHECK(t.apply(x) == closed_form_image(t.pivot(), d, x));
            }
        }
    }
}

TEST_CASE("transform fixes x exactly when the pivot bit of x is 0") {
    for (int n = 1; n <= 6; ++n) {
        const BitVec dim = BitVec{1} << n;
        for (BitVec d = 1; d < dim; ++d) {
            const Gf2Transform t(n, d);
            for (BitVec x = 0; x < dim; ++x) {
                const bool fixed = t.apply(x) == x;
                const bool pivot_clear = ((x >> t.pivot()) & 1) == 0;
                // d = e_k fixes everything; otherwise fixed <=> pivot bit 0.
                if (d == (BitVec{1} << t.pivot())) {
                    CHECK(fixed);
                } else {
                    CHECK(fixed == pivot_clear);
                }
            }
        }
    }
}

TEST_CASE("image_pair produces single-bit differing indices") {
    SUBCASE("worked examples") {
        const Gf2Transform t2(2, 0b11);
        CHECK(t2.image_pair(0b00, 0b11) == std::pair<BitVec, BitVec>{0b00, 0b01});
        const Gf2Transform t3(3, 0b101);
        CHECK(t3.image_pair(0b010, 0b111) == std::pair<BitVec, BitVec>{0b010, 0b011});
        const Gf2Transform te(3, 0b010);
        CHECK(te.image_pair(0b001, 0b011) == std::pair<BitVec, BitVec>{0b001, 0b011});
    }
    SUBCASE("mismatched difference is rejected") {
        const Gf2Transform t(2, 0b11);
        CHECK_THROWS_AS(t.image_pair(0b00, 0b01), std::invalid_argument);
    }
    SUBCASE("images differ exactly at the pivot, exhaustively") {
        for (int n = 1; n <= 6; ++n) {
            const BitVec dim = BitVec{1} << n;
            for (BitVec d = 1; d < dim; ++d) {
                const Gf2Transform t(n, d);
                for (BitVec r = 0; r < dim; ++r) {
                    const auto [ri, ci] = t.image_pair(r, r ^ d);
                    CHECK(std::popcount(ri ^ ci) == 1);
                    CHECK((ri ^ ci) == (BitVec{1} << t.pivot()));
                    // The fixed element of the pair has pivot bit 0.
                    const BitVec fixed = ((r >> t.pivot()) & 1) == 0 ? r : r ^ d;
                    CHECK(t.apply(fixed) == fixed);
                }
            }
        }
    }
}

TEST_CASE("an explicit pivot choice keeps the single-bit-difference property") {
    for (int n = 2; n <= 5; ++n) {
        const BitVec dim = BitVec{1} << n;
        for (BitVec d = 1; d < dim; ++d) {
            for (int pivot = 0; pivot < n; ++pivot) {
                if (((d >> pivot) & 1) == 0) {
                    continue;
                }
                const Gf2Transform t(n, d, pivot);
                for (BitVec x = 0; x < dim; ++x) {
                    CHECK(t.apply(t.apply(x)) == x);
                }
                const auto [ri, ci] = t.image_pair(0, d);
                CHECK((ri ^ ci) == (BitVec{1} << pivot));
            }
        }
    }
}

TEST_CASE("the 2^n - 1 transforms cover every off-diagonal pair exactly once") {
    for (int n = 2; n <= 5; ++n) {
        const BitVec dim = BitVec{1} << n;
        std::set<std::pair<BitVec, BitVec>> seen;
        for (BitVec d = 1; d < dim; ++d) {
            for (BitVec x = 0; x < dim; ++x) {
                const BitVec y = x ^ d;
                const auto pair = std::minmax(x, y);
                const bool inserted = seen.insert({pair.first, pair.second}).second;
                // Each unordered pair appears once per d (as (x, x^d) and (x^d, x)).
                if (x < y) {
                    CHECK(inserted);
                }
            }
        }
        CHECK(seen.size() == (dim / 2) * (dim - 1));
    }
}

TEST_SUITE_END();
