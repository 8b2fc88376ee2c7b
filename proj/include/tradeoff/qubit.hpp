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
 * Closed-form purity changes for a two-outcome qubit measurement (E, I - E)
 * without feedback.
 *
 * The state is rho = (I + a.sigma)/2 and the effect is E = alpha (I + b.sigma)/2
 * with z the cosine of the angle between a and b. Everything in this header is
 * a scalar function of (a, b, alpha, z); the matrix-level routines in
 * measure.hpp are the independent check for all of it.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tradeoff/matcore.hpp"
#include "tradeoff/measure.hpp"
#include "tradeoff/states.hpp"

namespace tradeoff {

struct QubitProblem {
    double a = 0.0;      ///< Bloch modulus of rho
    double b = 0.0;      ///< Bloch modulus of E / alpha
    double alpha = 1.0;  ///< tr E
    double z = 0.0;      ///< cosine of the angle between the two Bloch vectors
};

struct TradeoffPoint {
    double delta_in = 0.0;
    double delta_out = 0.0;
    double z = 0.0;
};

/// Largest alpha keeping E <= I.
inline double alpha_cap(double b) { return 2.0 / (1.0 + b); }

inline void validate(const QubitProblem &p) {
    constexpr double tol = 1e-12;
    auto require = [](bool ok, const char *what) {
        if (!ok) throw Error(ErrorCode::InvalidArgument, what);
    };
    require(p.a >= 0.0 && p.a <= 1.0, "a must lie in [0, 1]");
    require(p.b >= 0.0 && p.b <= 1.0, "b must lie in [0, 1]");
    require(p.alpha >= 0.0 && p.alpha <= alpha_cap(p.b) + tol, "alpha must lie in [0, 2/(1+b)]");
    require(p.z >= -1.0 && p.z <= 1.0, "z must lie in [-1, 1]");
}

// --- matrix forms -----------------------------------------------------------

inline DensityOperator qubit_state(double a) { return from_bloch({0.0, 0.0, a}); }

/// E = alpha (I + b (sqrt(1 - z^2) sigma_x + z sigma_z)) / 2.
inline ComplexMatrix qubit_effect(double alpha, double b, double z) {
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return pauli_combination(0.5 * alpha, {0.5 * alpha * b * s, 0.0, 0.5 * alpha * b * z});
}

inline EfficientMeasurement qubit_measurement(const QubitProblem &p) {
    const ComplexMatrix e = qubit_effect(p.alpha, p.b, p.z);
    return EfficientMeasurement(Povm({e, ComplexMatrix::identity(2) - e}));
}

/// (tr E, |b|) recovered from a qubit effect.
inline std::pair<double, double> qubit_effect_params(const ComplexMatrix &e) {
    if (e.dim() != 2) throw Error(ErrorCode::DimMismatch, "qubit effect");
    const double alpha = e.trace().real();
    if (alpha <= 0.0) return {0.0, 0.0};
    const BlochVector v = to_bloch(DensityOperator::from_psd(e));
    return {alpha, v.modulus()};
}

// --- sqrt(E (I - E)) --------------------------------------------------------

/// r0^2 in sqrt(E(I - E)) = r0 I + r.sigma.
inline double r0_squared(double alpha, double b) {
    const double x = 2.0 - alpha - alpha * b * b;
    const double radicand = std::max(0.0, (1.0 - b * b) * (4.0 - 4.0 * alpha + (1.0 - b * b) * alpha * alpha));
    return std::max(0.0, alpha / 8.0 * (x + std::sqrt(radicand)));
}

/// r0 I + r.sigma with r = alpha (1 - alpha) b_vec / (4 r0).
inline ComplexMatrix sqrt_g_closed(double alpha, const BlochVector &b_vec) {
    const double r0sq = r0_squared(alpha, b_vec.modulus());
    const double coeff = alpha * (1.0 - alpha);
    if (r0sq < 1e-14) {
        if (std::abs(coeff) * b_vec.modulus() > 1e-14) {
            throw Error(ErrorCode::DegenerateSqrt, "r0 vanishes while r is required");
        }
        return pauli_combination(std::sqrt(r0sq), {});
    }
    const double r0 = std::sqrt(r0sq);
    const double scale = coeff / (4.0 * r0);
    return pauli_combination(r0, {scale * b_vec.x, scale * b_vec.y, scale * b_vec.z});
}

// --- purity changes ---------------------------------------------------------

namespace detail {

inline double delta_in_formula(double a, double b, double alpha, double z) {
    if (a == 1.0 || b == 0.0 || alpha == 0.0) return 0.0;
    const double abz = a * b * z;
    const double d1 = 1.0 + abz;
    const double d2 = 2.0 - alpha - alpha * abz;
    if (d1 < 1e-12 || d2 < 1e-12) {
        throw Error(ErrorCode::SingularDenominator, "infinite-strength boundary");
    }
    return alpha * b * b * (1.0 - a * a) * (1.0 - a * a * z * z) / (2.0 * d1 * d2);
}

}  // namespace detail

/// Average purity gain of the measurer, sum_b p_b tr rho_b^2 - tr rho^2.
inline double delta_in_closed(const QubitProblem &p) {
    validate(p);
    return detail::delta_in_formula(p.a, p.b, p.alpha, p.z);
}

/// Purity loss of the bystander, tr rho^2 - tr rho~^2.
inline double delta_out_closed(const QubitProblem &p) {
    validate(p);
    const double perp = 1.0 - p.z * p.z;
    if (perp == 0.0 || p.a == 0.0 || p.b == 0.0 || p.alpha == 0.0) return 0.0;
    const double r0sq = r0_squared(p.alpha, p.b);
    if (r0sq < 1e-14) throw Error(ErrorCode::SingularR0, "r0 vanishes at the infinite-strength boundary");
    const double ratio = p.alpha * p.a * p.b;
    const double one_minus = 1.0 - p.alpha;
    return 0.5 * ratio * ratio / (4.0 * r0sq) * (one_minus * one_minus + 4.0 * r0sq) * perp;
}

inline TradeoffPoint tradeoff_point(const QubitProblem &p) {
    return {delta_in_closed(p), delta_out_closed(p), p.z};
}

// --- symmetric case (alpha = 1) ---------------------------------------------

/// [delta_in at z^2 = 1, delta_in at z = 0] for alpha = 1.
inline std::pair<double, double> symmetric_delta_in_range(double a, double b) {
    const double lo = 0.5 * b * b * (1.0 - a * a) * (1.0 - a * a) / (1.0 - a * a * b * b);
    const double hi = 0.5 * b * b * (1.0 - a * a);
    return {lo, hi};
}

/// The alpha = 1 curve is a nontrivial function only for a finite-strength
/// measurement on a mixed, non-maximally-mixed state.
inline bool symmetric_curve_nontrivial(double a, double b) {
    return a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0;
}

/// Delta_out as a function of Delta_in along the alpha = 1 curve (z eliminated).
inline double symmetric_tradeoff(double delta_in, double a, double b) {
    if (!(a >= 0.0 && a < 1.0 && b >= 0.0 && b < 1.0)) {
        throw Error(ErrorCode::OutOfCurveDomain, "the curve needs 0 <= a < 1 and 0 <= b < 1");
    }
    const auto [lo, hi] = symmetric_delta_in_range(a, b);
    constexpr double tol = 1e-12;
    if (delta_in < lo - tol || delta_in > hi + tol) {
        throw Error(ErrorCode::OutOfCurveDomain,
                    "delta_in " + std::to_string(delta_in) + " outside [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    }
    const double x = std::clamp(delta_in, lo, hi);
    const double num = 2.0 * (1.0 - a * a * b * b) * x - b * b * (1.0 - a * a) * (1.0 - a * a);
    const double den = 2.0 * (1.0 - a * a - 2.0 * x);
    return std::max(0.0, num / den);
}

// --- optimum angle ----------------------------------------------------------

/**
 * Unclipped stationary point z0 of Delta_in in z.
 *
 * Uses z0 = -2 b (1 - alpha) / (a (X + sqrt(D))) with X = 2 - alpha (1 + b^2)
 * and D the r0 radicand, which is the direct expression with the 4 r0^2 - alpha X
 * difference rationalized. It is regular at alpha = 1 (z0 = 0) and alpha = 0.
 */
inline double optimum_angle(double a, double b, double alpha) {
    if (a <= 0.0 || b <= 0.0) throw Error(ErrorCode::InvalidArgument, "z0 needs a > 0 and b > 0");
    const double x = 2.0 - alpha * (1.0 + b * b);
    const double radicand = std::max(0.0, (1.0 - b * b) * (4.0 - 4.0 * alpha + (1.0 - b * b) * alpha * alpha));
    const double den = a * (x + std::sqrt(radicand));
    if (den <= 0.0) throw Error(ErrorCode::SingularDenominator, "z0 at the infinite-strength boundary");
    return -2.0 * b * (1.0 - alpha) / den;
}

/// z0 in its direct form, [4 r0^2 - alpha (2 - alpha - alpha b^2)] / [alpha (1 - alpha) a b].
/// Singular at alpha = 0 and alpha = 1.
inline double optimum_angle_direct(double a, double b, double alpha) {
    return (4.0 * r0_squared(alpha, b) - alpha * (2.0 - alpha - alpha * b * b)) /
           (alpha * (1.0 - alpha) * a * b);
}

/// Maximizer of Delta_in over z in [-1, 1]. When the stationary point lies
/// outside, the better of the two commuting endpoints is returned.
inline double z_opt(double a, double b, double alpha) {
    if (a <= 0.0 || b <= 0.0 || alpha <= 0.0 || a >= 1.0) return 0.0;  // Delta_in is flat in z
    const double z0 = optimum_angle(a, b, alpha);
    if (std::abs(z0) < 1.0) return z0;
    const double plus = detail::delta_in_formula(a, b, alpha, 1.0);
    const double minus = detail::delta_in_formula(a, b, alpha, -1.0);
    if (plus == minus) return z0 > 0.0 ? 1.0 : -1.0;
    return plus > minus ? 1.0 : -1.0;
}

// --- regimes ----------------------------------------------------------------

/// Closed-form alpha at which z0 = +1.
inline double formula_alpha_at_plus_one(double a, double b) {
    return (b * (1.0 + a * a) + 2.0 * a) / (b * (1.0 + a * a) + a * (1.0 + b * b));
}

/// Closed-form alpha at which z0 = -1. Also the formula endpoint shared by
/// both no-tradeoff ranges.
inline double formula_alpha_at_minus_one(double a, double b) {
    return (b * (1.0 + a * a) - 2.0 * a) / (b * (1.0 + a * a) - a * (1.0 + b * b));
}

/**
 * Where along alpha in [0, 2/(1+b)] the optimum angle is interior.
 *
 * z0 increases monotonically in alpha and passes through 0 at alpha = 1, so
 * the tradeoff interval (alpha_lo, alpha_hi) is bounded by the crossings of
 * z0 = -1 below 1 and z0 = +1 above 1, located by bisection. The closed-form
 * threshold formulas are evaluated alongside and compared; bisection wins.
 */
struct RegimeReport {
    double a = 0.0;
    double b = 0.0;
    double alpha_max = 0.0;
    double alpha_lo = 0.0;  ///< z0 = -1 crossing, or 0 if z0 > -1 throughout
    double alpha_hi = 0.0;  ///< z0 = +1 crossing, or alpha_max if z0 < 1 throughout
    double formula_alpha_plus = 0.0;
    double formula_alpha_minus = 0.0;
    bool lo_matches_formula = true;
    bool hi_matches_formula = true;
    /// Whether the formula no-tradeoff ranges [0, max(0, P-)] and [P-, 2/(1+b)]
    /// agree with [0, alpha_lo] and [alpha_hi, 2/(1+b)].
    bool formula_ranges_match = true;
    std::vector<std::string> warnings;

    bool has_tradeoff(double alpha) const { return alpha > alpha_lo && alpha < alpha_hi; }
    double z_star(double alpha) const { return z_opt(a, b, alpha); }
    bool discrepancy() const { return !lo_matches_formula || !hi_matches_formula || !formula_ranges_match; }
};

namespace detail {

template <class Fn>
double bisect_increasing(Fn &&fn, double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (fn(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

inline RegimeReport classify_regime(double a, double b) {
    if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "classification needs 0 < a < 1 and 0 < b < 1");
    }
    constexpr double kAgreeTol = 1e-6;
    RegimeReport r;
    r.a = a;
    r.b = b;
    r.alpha_max = alpha_cap(b);
    r.formula_alpha_plus = formula_alpha_at_plus_one(a, b);
    r.formula_alpha_minus = formula_alpha_at_minus_one(a, b);

    auto z0 = [&](double alpha) { return optimum_angle(a, b, alpha); };

    const bool lo_crossing = z0(0.0) < -1.0;
    r.alpha_lo = lo_crossing ? detail::bisect_increasing([&](double al) { return z0(al) + 1.0; }, 0.0, 1.0) : 0.0;
    const bool hi_crossing = z0(r.alpha_max) > 1.0;
    r.alpha_hi = hi_crossing
                     ? detail::bisect_increasing([&](double al) { return z0(al) - 1.0; }, 1.0, r.alpha_max)
                     : r.alpha_max;

    auto in_range = [](double v, double lo, double hi) { return std::isfinite(v) && v >= lo && v <= hi; };
    if (lo_crossing) {
        r.lo_matches_formula = std::abs(r.alpha_lo - r.formula_alpha_minus) <= kAgreeTol;
    } else {
        r.lo_matches_formula = !in_range(r.formula_alpha_minus, kAgreeTol, 1.0);
    }
    if (hi_crossing) {
        r.hi_matches_formula = std::abs(r.alpha_hi - r.formula_alpha_plus) <= kAgreeTol;
    } else {
        r.hi_matches_formula = !in_range(r.formula_alpha_plus, 1.0, r.alpha_max - kAgreeTol);
    }
    if (!r.lo_matches_formula) {
        r.warnings.push_back("z0 = -1 crossing at alpha " + std::to_string(r.alpha_lo) +
                             " disagrees with formula threshold " + std::to_string(r.formula_alpha_minus));
    }
    if (!r.hi_matches_formula) {
        r.warnings.push_back("z0 = +1 crossing at alpha " + std::to_string(r.alpha_hi) +
                             " disagrees with formula threshold " + std::to_string(r.formula_alpha_plus));
    }

    const double formula_first_end = std::max(0.0, r.formula_alpha_minus);
    const double formula_second_start = r.formula_alpha_minus;
    const bool first_ok = std::isfinite(formula_first_end) &&
                          std::abs(std::min(formula_first_end, r.alpha_max) - r.alpha_lo) <= kAgreeTol;
    const bool second_ok = std::isfinite(formula_second_start) &&
                           std::abs(std::max(formula_second_start, 0.0) - r.alpha_hi) <= kAgreeTol;
    r.formula_ranges_match = first_ok && second_ok;
    if (!second_ok) {
        r.warnings.push_back("formula upper no-tradeoff range starts at " + std::to_string(formula_second_start) +
                             "; bisection places it at " + std::to_string(r.alpha_hi));
    }
    if (!first_ok) {
        r.warnings.push_back("formula lower no-tradeoff range ends at " + std::to_string(formula_first_end) +
                             "; bisection places it at " + std::to_string(r.alpha_lo));
    }
    return r;
}

// --- curves -----------------------------------------------------------------

/**
 * The tradeoff branch from the commuting orientation nearest the optimum
 * (Delta_out = 0) to the optimum angle z_star, uniform in z. Along it both
 * deltas rise together. Outside the tradeoff regime z_star is itself an
 * endpoint and the curve collapses to a single repeated point.
 */
inline std::vector<TradeoffPoint> sample_curve(double a, double b, double alpha, std::size_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "a curve needs at least two points");
    validate(QubitProblem{a, b, alpha, 0.0});
    const double z_star = z_opt(a, b, alpha);
    const double z_start = z_star < 0.0 ? -1.0 : 1.0;
    std::vector<TradeoffPoint> points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        const double z = i + 1 == n ? z_star : z_start + (z_star - z_start) * t;
        points.push_back(tradeoff_point({a, b, alpha, z}));
    }
    return points;
}

/// n points uniform in z over [-1, 1], ascending.
inline std::vector<TradeoffPoint> sample_z_grid(double a, double b, double alpha, std::size_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "a curve needs at least two points");
    std::vector<TradeoffPoint> points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double z = i + 1 == n ? 1.0 : -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
        points.push_back(tradeoff_point({a, b, alpha, z}));
    }
    return points;
}

}  // namespace tradeoff
