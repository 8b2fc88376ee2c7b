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
 * Measurement strength k = 2 Delta_in(I/2) for two-outcome qubit measurements,
 * and the largest purity gain reachable at fixed k.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

#include "tradeoff/measure.hpp"
#include "tradeoff/qubit.hpp"

namespace tradeoff {

/// k = alpha b^2 / (2 - alpha).
inline double strength_k(double alpha, double b) {
    validate(QubitProblem{0.0, b, alpha, 0.0});
    if (std::abs(2.0 - alpha) < 1e-15) throw Error(ErrorCode::SingularAlpha, "alpha = 2");
    return alpha * b * b / (2.0 - alpha);
}

/// The alpha giving strength k at effect modulus b: 2k / (b^2 + k). Needs k <= b.
inline double alpha_for_strength(double k, double b) {
    if (!(k >= 0.0 && k <= 1.0)) throw Error(ErrorCode::InvalidArgument, "k must lie in [0, 1]");
    if (!(b <= 1.0) || b < k - 1e-12) {
        throw Error(ErrorCode::BOutOfRange, "b must lie in [k, 1] for strength k");
    }
    if (k == 0.0) return 0.0;
    return 2.0 * k / (b * b + k);
}

/// Effect modulus that maximizes Delta_in at angle z for fixed k
/// (b = k for z >= 0, b = 1 for z < 0).
inline double maximizing_b(double k, double z) { return z >= 0.0 ? k : 1.0; }

/// max over b in [k, 1] of Delta_in at fixed k and z: k (1 - a^2)(1 + a|z|) / (2 (1 + a k |z|)).
inline double max_delta_in_at_z(double k, double a, double z) {
    const double az = a * std::abs(z);
    return 0.5 * k * (1.0 - a * a) * (1.0 + az) / (1.0 + k * az);
}

struct StrengthMaximum {
    double value = 0.0;
    double z_star = 1.0;
    double b_star = 0.0;
    double alpha_star = 0.0;
    double delta_out_at_max = 0.0;
};

inline void validate_strength(double k, double a) {
    if (!(k >= 0.0 && k <= 1.0)) throw Error(ErrorCode::InvalidArgument, "k must lie in [0, 1]");
    if (!(a >= 0.0 && a <= 1.0)) throw Error(ErrorCode::InvalidArgument, "a must lie in [0, 1]");
}

/**
 * Absolute maximum of Delta_in at fixed strength: k (1 - a^2)(1 + a) / (2 (1 + a k)),
 * attained at |z| = 1. The reported maximizer is z = +1 with b = k; the
 * bystander's purity change there is computed from the matrices.
 */
inline StrengthMaximum max_delta_in(double k, double a) {
    validate_strength(k, a);
    StrengthMaximum m;
    m.value = 0.5 * k * (1.0 - a * a) * (1.0 + a) / (1.0 + a * k);
    m.z_star = 1.0;
    m.b_star = maximizing_b(k, m.z_star);
    m.alpha_star = alpha_for_strength(k, m.b_star);
    const QubitProblem at_max{a, m.b_star, std::min(m.alpha_star, alpha_cap(m.b_star)), m.z_star};
    m.delta_out_at_max = delta_out(qubit_state(a), qubit_measurement(at_max), Functional::Impurity);
    return m;
}

struct StrengthSearch {
    double value = 0.0;
    double b = 0.0;
    double z = 0.0;
};

namespace detail {

template <class Fn>
double golden_section_argmax(Fn &&fn, double lo, double hi, int iterations = 200) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = fn(x1);
    double f2 = fn(x2);
    for (int it = 0; it < iterations && hi - lo > 1e-15; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = fn(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = fn(x1);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/**
 * Brute-force maximum of Delta_in over (b, z) in [k, 1] x [-1, 1] at fixed
 * strength, using the general closed form with alpha = 2k / (b^2 + k).
 * A uniform grid locates the best cell, then golden-section passes in z and
 * b refine it.
 */
inline StrengthSearch search_max_delta_in(double k, double a, std::size_t grid = 2001) {
    validate_strength(k, a);
    if (grid < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least two points");
    auto objective = [&](double b, double z) {
        const double alpha = std::min(alpha_for_strength(k, b), alpha_cap(b));
        return detail::delta_in_formula(a, b, alpha, z);
    };
    const double step_b = (1.0 - k) / static_cast<double>(grid - 1);
    const double step_z = 2.0 / static_cast<double>(grid - 1);
    auto b_at = [&](std::size_t i) { return i + 1 == grid ? 1.0 : k + step_b * static_cast<double>(i); };
    auto z_at = [&](std::size_t j) { return j + 1 == grid ? 1.0 : -1.0 + step_z * static_cast<double>(j); };

    StrengthSearch best{-1.0, k, 0.0};
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    for (std::size_t i = 0; i < grid; ++i) {
        const double b = b_at(i);
        for (std::size_t j = 0; j < grid; ++j) {
            const double v = objective(b, z_at(j));
            if (v > best.value) {
                best = {v, b, z_at(j)};
                best_i = i;
                best_j = j;
            }
        }
    }

    const double z_lo = z_at(best_j == 0 ? 0 : best_j - 1);
    const double z_hi = z_at(std::min(grid - 1, best_j + 1));
    const double z_ref = detail::golden_section_argmax([&](double z) { return objective(best.b, z); }, z_lo, z_hi);
    if (const double v = objective(best.b, z_ref); v > best.value) best = {v, best.b, z_ref};
    const double b_lo = b_at(best_i == 0 ? 0 : best_i - 1);
    const double b_hi = b_at(std::min(grid - 1, best_i + 1));
    const double b_ref = detail::golden_section_argmax([&](double b) { return objective(b, best.z); }, b_lo, b_hi);
    if (const double v = objective(b_ref, best.z); v > best.value) best = {v, b_ref, best.z};
    return best;
}

}  // namespace tradeoff
