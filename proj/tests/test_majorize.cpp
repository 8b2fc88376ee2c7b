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

#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "tradeoff/majorize.hpp"
#include "tradeoff/random.hpp"

using namespace tradeoff;
using Catch::Matchers::WithinAbs;

namespace {

const ComplexMatrix kE = ComplexMatrix::diagonal({2.0 / 3.0, 1.0 / 3.0});
const ComplexMatrix kF = ComplexMatrix::diagonal({1.0 / 3.0, 2.0 / 3.0});

}  // namespace

TEST_CASE("majorizes examples", "[majorize]") {
    CHECK(majorizes(Spectrum({1.0, 0.0}), Spectrum({0.5, 0.5})));
    CHECK_FALSE(majorizes(Spectrum({0.5, 0.5}), Spectrum({1.0, 0.0})));
    const Spectrum v({0.5, 0.3, 0.2});
    CHECK(majorizes(v, v));
    CHECK_FALSE(majorizes(Spectrum({0.5, 0.5}), Spectrum({0.6, 0.4})));
    CHECK_FALSE(majorizes(Spectrum({0.7, 0.4}), Spectrum({0.5, 0.5})));
    try {
        majorizes(Spectrum({1.0, 0.0}), Spectrum({1.0, 0.0, 0.0}));
        FAIL("expected LengthMismatch");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::LengthMismatch);
    }
}

TEST_CASE("ky_fan_sum examples", "[majorize]") {
    CHECK_THAT(ky_fan_sum(ComplexMatrix::identity(2), 1), WithinAbs(1.0, 1e-15));
    CHECK_THAT(ky_fan_sum(ComplexMatrix::diagonal({1.0 / 3.0, 2.0 / 3.0}), 1), WithinAbs(2.0 / 3.0, 1e-15));
    CHECK_THROWS_AS(ky_fan_sum(ComplexMatrix::identity(3), 0), Error);
    CHECK_THROWS_AS(ky_fan_sum(ComplexMatrix::identity(3), 4), Error);
}

TEST_CASE("ky_fan_sum dominates random projections", "[majorize]") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 60; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 3);
        const ComplexMatrix h = random_hermitian(d, rng);
        CHECK_THAT(ky_fan_sum(h, d), WithinAbs(h.trace().real(), 1e-10));
        const Eigensystem es = eig_hermitian(h);
        for (std::size_t k = 1; k <= d; ++k) {
            const double top = ky_fan_sum(h, k);
            ComplexMatrix best(d);
            for (std::size_t j = 0; j < k; ++j) best += ComplexMatrix::outer(es.vectors.column(j));
            REQUIRE_THAT(trace_product(best, h), WithinAbs(top, 1e-10));
            for (int t = 0; t < 100; ++t) REQUIRE(trace_product(random_projector(d, k, rng), h) <= top + 1e-10);
        }
    }
}

TEST_CASE("Ky Fan subadditivity", "[majorize]") {
    std::mt19937_64 rng(72);
    for (int i = 0; i < 500; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 3);
        const ComplexMatrix o = random_hermitian(d, rng);
        const ComplexMatrix n = random_hermitian(d, rng);
        const Spectrum so = eigenvalues(o);
        const Spectrum sn = eigenvalues(n);
        std::vector<double> sum(d);
        for (std::size_t k = 0; k < d; ++k) sum[k] = so[k] + sn[k];
        REQUIRE(majorizes(Spectrum(sum), eigenvalues(o + n)));
    }
}

TEST_CASE("average posterior spectrum examples", "[majorize]") {
    const DensityOperator rho = DensityOperator::diagonal({1.0 / 3.0, 2.0 / 3.0});
    const EfficientMeasurement m(Povm({kE, kF}));
    const Spectrum avg = average_posterior_spectrum(rho, m);
    CHECK_THAT(avg[0], WithinAbs(2.0 / 3.0, 1e-12));
    CHECK_THAT(avg[1], WithinAbs(1.0 / 3.0, 1e-12));
    const MajorizationVerdict v = check_majorization_theorem(rho, m);
    CHECK(v.holds());
    CHECK_THAT(v.direct_violation, WithinAbs(0.0, 1e-12));

    const DensityOperator r3 = DensityOperator::diagonal({0.2, 0.5, 0.3});
    const Spectrum proj = average_posterior_spectrum(r3, EfficientMeasurement(Povm::projective(ComplexMatrix::identity(3))));
    CHECK_THAT(proj[0], WithinAbs(1.0, 1e-12));
    CHECK_THAT(proj[1], WithinAbs(0.0, 1e-12));

    const Spectrum trivial = average_posterior_spectrum(r3, EfficientMeasurement(Povm::trivial(3)));
    for (std::size_t k = 0; k < 3; ++k) CHECK_THAT(trivial[k], WithinAbs(r3.spectrum()[k], 1e-12));
}

TEST_CASE("omega decomposition", "[majorize]") {
    const DensityOperator rho = DensityOperator::diagonal({1.0 / 3.0, 2.0 / 3.0});
    const auto single = omega_decomposition(rho, Povm::trivial(2));
    REQUIRE(single.size() == 1);
    CHECK(max_abs_diff(single[0].omega.matrix(), rho.matrix()) <= 1e-12);

    const auto terms = omega_decomposition(rho, Povm({kE, kF}));
    REQUIRE(terms.size() == 2);
    CHECK(max_abs_diff(terms[0].omega.matrix(), 0.5 * ComplexMatrix::identity(2)) <= 1e-12);

    std::mt19937_64 rng(73);
    bool saw_noncommuting = false;
    for (int i = 0; i < 500; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 3);
        const DensityOperator r = random_density(d, rng);
        const EfficientMeasurement m = random_efficient_measurement(d, FeedbackMode::None, rng);
        const auto om = omega_decomposition(r, m.povm());
        ComplexMatrix total(d);
        for (const OmegaTerm &t : om) total += t.probability * t.omega.matrix();
        REQUIRE(max_abs_diff(total, r.matrix()) <= 1e-10);
        const auto post = outcomes(r, m);
        REQUIRE(post.size() == om.size());
        for (std::size_t k = 0; k < om.size(); ++k) {
            const Spectrum a = om[k].omega.spectrum();
            const Spectrum b = post[k].posterior.spectrum();
            for (std::size_t j = 0; j < d; ++j) REQUIRE_THAT(a[j], WithinAbs(b[j], 1e-10));
            if (max_abs_diff(om[k].omega.matrix(), post[k].posterior.matrix()) > 1e-6) saw_noncommuting = true;
        }
    }
    CHECK(saw_noncommuting);
}

TEST_CASE("majorization theorem on random measurements", "[majorize]") {
    std::mt19937_64 rng(74);
    for (int i = 0; i < 3000; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 3);
        const DensityOperator rho = random_density(d, rng);
        const FeedbackMode mode = i % 2 ? FeedbackMode::Haar : FeedbackMode::None;
        const EfficientMeasurement m = random_efficient_measurement(d, mode, rng);
        const MajorizationVerdict v = check_majorization_theorem(rho, m);
        REQUIRE(v.holds());
        REQUIRE(v.routes_agree());
        REQUIRE(verify_majorization_theorem(rho, m));
        for (Functional f : {Functional::Impurity, Functional::VonNeumann, Functional::Subentropy}) {
            REQUIRE(delta_in(rho, m, f) >= -1e-10);
        }
    }
}

TEST_CASE("feedback leaves posterior spectra and verdicts unchanged", "[majorize]") {
    std::mt19937_64 rng(75);
    for (int i = 0; i < 300; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 3);
        const DensityOperator rho = random_density(d, rng);
        const EfficientMeasurement plain = random_efficient_measurement(d, FeedbackMode::None, rng);
        std::vector<ComplexMatrix> us;
        for (std::size_t b = 0; b < plain.size(); ++b) us.push_back(haar_unitary(d, rng));
        const EfficientMeasurement fed(plain.povm(), us);
        const Spectrum a = average_posterior_spectrum(rho, plain);
        const Spectrum b = average_posterior_spectrum(rho, fed);
        for (std::size_t k = 0; k < d; ++k) REQUIRE_THAT(a[k], WithinAbs(b[k], 1e-10));
        REQUIRE(check_majorization_theorem(rho, plain).holds() == check_majorization_theorem(rho, fed).holds());
    }
}

TEST_CASE("pure states majorize trivially", "[majorize]") {
    std::mt19937_64 rng(76);
    const ComplexMatrix u = haar_unitary(3, rng);
    const DensityOperator rho = DensityOperator::pure(u.column(0));
    const EfficientMeasurement m = random_efficient_measurement(3, FeedbackMode::Haar, rng);
    const Spectrum avg = average_posterior_spectrum(rho, m);
    CHECK_THAT(avg[0], WithinAbs(1.0, 1e-10));
    CHECK(verify_majorization_theorem(rho, m));
}
