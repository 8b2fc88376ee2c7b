// Copyright 2026 The povm-tradeoff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "tradeoff/matcore.hpp"
#include "tradeoff/qubit.hpp"
#include "tradeoff/random.hpp"

using namespace tradeoff;
using Catch::Matchers::WithinAbs;

namespace {

ComplexMatrix reconstruct(const Eigensystem &es) {
    return apply_spectral(es, [](double x) { return x; });
}

}  // namespace

TEST_CASE("eig_hermitian trivial spectra", "[matcore]") {
    const Spectrum id = eigenvalues(ComplexMatrix::identity(2));
    CHECK_THAT(id[0], WithinAbs(1.0, 1e-15));
    CHECK_THAT(id[1], WithinAbs(1.0, 1e-15));

    const Spectrum diag = eigenvalues(ComplexMatrix::diagonal({1.0 / 3.0, 2.0 / 3.0}));
    CHECK_THAT(diag[0], WithinAbs(2.0 / 3.0, 1e-15));
    CHECK_THAT(diag[1], WithinAbs(1.0 / 3.0, 1e-15));
}

TEST_CASE("eig_hermitian reconstructs 1000 random Hermitian matrices", "[matcore]") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 3);
        const ComplexMatrix h = random_hermitian(d, rng);
        const Eigensystem es = eig_hermitian(h);
        for (std::size_t k = 1; k < d; ++k) REQUIRE(es.values[k - 1] >= es.values[k]);
        REQUIRE(max_abs_diff(reconstruct(es), h) <= 10 * kHermitianTol);
        REQUIRE(max_abs_diff(es.vectors.adjoint() * es.vectors, ComplexMatrix::identity(d)) <= 10 * kHermitianTol);
        REQUIRE_THAT(es.values.sum(), WithinAbs(h.trace().real(), 1e-10));
    }
}

TEST_CASE("eig_hermitian handles larger and degenerate inputs", "[matcore]") {
    std::mt19937_64 rng(7);
    const ComplexMatrix u = haar_unitary(8, rng);
    const ComplexMatrix h = u * ComplexMatrix::diagonal({3, 3, 3, 1, 1, 0, 0, -2}) * u.adjoint();
    const Eigensystem es = eig_hermitian(hermitian_part(h));
    CHECK(max_abs_diff(reconstruct(es), h) <= 1e-11);
    CHECK_THAT(es.values[0], WithinAbs(3.0, 1e-12));
    CHECK_THAT(es.values[7], WithinAbs(-2.0, 1e-12));
}

TEST_CASE("eig_hermitian rejects non-Hermitian input", "[matcore]") {
    ComplexMatrix m(2, {0.0, 1.0, 0.0, 0.0});
    try {
        eig_hermitian(m);
        FAIL("expected NotHermitian");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotHermitian);
    }
}

TEST_CASE("ComplexMatrix validates shape and entries", "[matcore]") {
    CHECK_THROWS_AS(ComplexMatrix(1), Error);
    CHECK_THROWS_AS(ComplexMatrix(9), Error);
    CHECK_THROWS_AS(ComplexMatrix(2, std::vector<complex>{1.0, 2.0, 3.0}), Error);
    CHECK_THROWS_AS(ComplexMatrix(2, {1.0, NAN, 0.0, 1.0}), Error);
    const ComplexMatrix m(2, {complex(1, 1), 2.0, 3.0, 4.0});
    CHECK(m.adjoint()(0, 0) == complex(1, -1));
    CHECK(m.adjoint()(0, 1) == complex(3, 0));
    CHECK(m.trace() == complex(5, 1));
}

TEST_CASE("psd_sqrt examples", "[matcore]") {
    CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)) <= 1e-14);
    CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::diagonal({4.0, 9.0})), ComplexMatrix::diagonal({2.0, 3.0})) <= 1e-14);
}

TEST_CASE("psd_sqrt squares back and fixes projectors", "[matcore]") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 4);
        const ComplexMatrix g = ginibre(d, d, rng);
        const ComplexMatrix m = hermitian_part(g * g.adjoint());
        const ComplexMatrix r = psd_sqrt(m);
        REQUIRE(is_hermitian(r));
        REQUIRE(eigenvalues(r)[d - 1] >= -1e-12);
        REQUIRE(max_abs_diff(r * r, m) <= 10 * kHermitianTol * std::max(1.0, eigenvalues(m)[0]));

        std::uniform_int_distribution<std::size_t> rank(1, d);
        const ComplexMatrix p = random_projector(d, rank(rng), rng);
        REQUIRE(max_abs_diff(psd_sqrt(p), p) <= 1e-11);
    }
}

TEST_CASE("psd_sqrt clamps tiny negatives and rejects real ones", "[matcore]") {
    const ComplexMatrix tiny = ComplexMatrix::diagonal({1.0, -1e-13});
    CHECK(max_abs_diff(psd_sqrt(tiny), ComplexMatrix::diagonal({1.0, 0.0})) <= 1e-15);
    try {
        psd_sqrt(ComplexMatrix::diagonal({1.0, -1e-6}));
        FAIL("expected NotPsd");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotPsd);
    }
}

TEST_CASE("psd_sqrt of E(I - E) matches the closed-form square root", "[matcore][qubit]") {
    for (double alpha : {1.0, 0.5, 0.3, 1.05}) {
        for (double b : {0.9, 0.5, 0.2}) {
            if (alpha > alpha_cap(b)) continue;
            const BlochVector axis{0.0, 0.0, b};
            const ComplexMatrix e = pauli_combination(alpha / 2.0, {0.0, 0.0, alpha * b / 2.0});
            const ComplexMatrix g = e * (ComplexMatrix::identity(2) - e);
            CHECK(max_abs_diff(psd_sqrt(hermitian_part(g)), sqrt_g_closed(alpha, axis)) <= 1e-10);
        }
    }
}

TEST_CASE("Spectrum sorts descending and sums prefixes", "[matcore]") {
    const Spectrum s({0.1, 0.6, 0.3});
    CHECK(s[0] == 0.6);
    CHECK(s[2] == 0.1);
    CHECK_THAT(s.partial_sum(2), WithinAbs(0.9, 1e-15));
    CHECK_THAT(s.sum(), WithinAbs(1.0, 1e-15));
}

TEST_CASE("is_unitary and trace_product", "[matcore]") {
    std::mt19937_64 rng(3);
    const ComplexMatrix u = haar_unitary(4, rng);
    CHECK(is_unitary(u));
    CHECK_FALSE(is_unitary(2.0 * u));
    const ComplexMatrix a = random_hermitian(3, rng);
    const ComplexMatrix b = random_hermitian(3, rng);
    CHECK_THAT(trace_product(a, b), WithinAbs((a * b).trace().real(), 1e-12));
}
