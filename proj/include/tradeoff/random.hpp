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

/**
 * @file
 * Seeded random ensembles of states, unitaries and measurements used by the
 * verification suites. Every generator takes the random engine explicitly;
 * nothing here owns global state.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "tradeoff/matcore.hpp"
#include "tradeoff/measure.hpp"
#include "tradeoff/povm.hpp"
#include "tradeoff/states.hpp"

namespace tradeoff {

using Rng = std::mt19937_64;

/// Default seed used when neither a flag nor POVM_TRADEOFF_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Seed for instance `index` of a run, so any single instance can be replayed.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the combined words
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

template <class Engine>
complex complex_gaussian(Engine &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

template <class Engine>
ComplexMatrix ginibre(std::size_t dim, std::size_t cols, Engine &rng) {
    ComplexMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < cols; ++j) g(i, j) = complex_gaussian(rng);
    return g;
}

/// Haar-random unitary: Gram-Schmidt on the columns of a complex Gaussian matrix.
template <class Engine>
ComplexMatrix haar_unitary(std::size_t dim, Engine &rng) {
    ComplexMatrix u = ginibre(dim, dim, rng);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            complex overlap = 0.0;
            for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(u(i, k)) * u(i, j);
            for (std::size_t i = 0; i < dim; ++i) u(i, j) -= overlap * u(i, k);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) norm += std::norm(u(i, j));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < dim; ++i) u(i, j) /= norm;
    }
    return u;
}

template <class Engine>
ComplexMatrix random_hermitian(std::size_t dim, Engine &rng) {
    return hermitian_part(ginibre(dim, dim, rng));
}

/// Orthogonal projector onto the span of `rank` Haar-random orthonormal vectors.
template <class Engine>
ComplexMatrix random_projector(std::size_t dim, std::size_t rank, Engine &rng) {
    const ComplexMatrix u = haar_unitary(dim, rng);
    ComplexMatrix p(dim);
    for (std::size_t j = 0; j < rank; ++j) p += ComplexMatrix::outer(u.column(j));
    return hermitian_part(p);
}

/// rho = G G^dagger / tr with G a dim x r Gaussian matrix and r uniform in
/// 1..dim, so pure and rank-deficient states appear alongside full-rank ones.
template <class Engine>
DensityOperator random_density(std::size_t dim, Engine &rng) {
    std::uniform_int_distribution<std::size_t> rank_dist(1, dim);
    const ComplexMatrix g = ginibre(dim, rank_dist(rng), rng);
    return DensityOperator::from_psd(g * g.adjoint());
}

/// Full-rank random state (Hilbert-Schmidt measure).
template <class Engine>
DensityOperator random_full_rank_density(std::size_t dim, Engine &rng) {
    const ComplexMatrix g = ginibre(dim, dim, rng);
    return DensityOperator::from_psd(g * g.adjoint());
}

/// Random POVM: draw PSD matrices W_b = G_b G_b^dagger (random ranks), then
/// normalize E_b = S^{-1/2} W_b S^{-1/2} with S = sum_b W_b. Each effect is
/// formed as X_b X_b^dagger with X_b = S^{-1/2} G_b so it stays PSD, and draws
/// with a nearly singular S are discarded.
template <class Engine>
Povm random_povm(std::size_t dim, std::size_t outcomes, Engine &rng) {
    constexpr double kMinConditioning = 1e-8;
    std::uniform_int_distribution<std::size_t> rank_dist(1, dim);
    for (;;) {
        std::vector<std::size_t> ranks(outcomes);
        std::size_t total_rank = 0;
        for (std::size_t &r : ranks) total_rank += (r = rank_dist(rng));
        for (std::size_t b = 0; total_rank < dim; b = (b + 1) % outcomes) {
            if (ranks[b] < dim) {
                ++ranks[b];
                ++total_rank;
            }
        }
        std::vector<ComplexMatrix> factors;
        ComplexMatrix sum(dim);
        for (std::size_t b = 0; b < outcomes; ++b) {
            factors.push_back(ginibre(dim, ranks[b], rng));
            sum += factors.back() * factors.back().adjoint();
        }
        sum = hermitian_part(sum);
        const Spectrum s_spec = eigenvalues(sum);
        if (s_spec[dim - 1] < kMinConditioning * s_spec[0]) continue;
        const ComplexMatrix s = psd_inverse_sqrt(sum);
        std::vector<ComplexMatrix> effects;
        for (const ComplexMatrix &g : factors) {
            const ComplexMatrix x = s * g;
            effects.push_back(hermitian_part(x * x.adjoint()));
        }
        return Povm(std::move(effects));
    }
}

enum class FeedbackMode { None, Haar };

/// Random efficient measurement with 2..4 outcomes.
template <class Engine>
EfficientMeasurement random_efficient_measurement(std::size_t dim, FeedbackMode feedback,
                                                  Engine &rng) {
    std::uniform_int_distribution<std::size_t> outcome_dist(2, 4);
    Povm povm = random_povm(dim, outcome_dist(rng), rng);
    if (feedback == FeedbackMode::None) return EfficientMeasurement(std::move(povm));
    std::vector<ComplexMatrix> unitaries;
    for (std::size_t b = 0; b < povm.size(); ++b) unitaries.push_back(haar_unitary(dim, rng));
    return EfficientMeasurement(std::move(povm), std::move(unitaries));
}

}  // namespace tradeoff
