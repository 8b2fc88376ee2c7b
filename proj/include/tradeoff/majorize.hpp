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
 * Majorization of spectra and the statement that an efficient measurement
 * can only sharpen the measurer's spectrum on average:
 *
 *     lambda(rho)  is majorized by  sum_b p_b lambda(rho_b).
 *
 * Two independent routes are provided. The direct route takes the posterior
 * spectra. The omega route uses rho = sum_b p_b omega_b with
 * omega_b = rho^{1/2} E_b rho^{1/2} / p_b, whose spectra equal the posterior
 * spectra, and applies Ky Fan subadditivity.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "tradeoff/matcore.hpp"
#include "tradeoff/measure.hpp"
#include "tradeoff/states.hpp"

namespace tradeoff {

inline constexpr double kMajorizationTol = 1e-10;

/// Largest amount by which `lhs` escapes majorization by `rhs`: the maximum
/// over k of partial_k(lhs) - partial_k(rhs), together with the total mismatch.
inline double majorization_violation(const Spectrum &rhs, const Spectrum &lhs) {
    if (rhs.size() != lhs.size()) throw Error(ErrorCode::LengthMismatch, "spectra differ in length");
    double worst = 0.0;
    double l = 0.0;
    double r = 0.0;
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        l += lhs[k];
        r += rhs[k];
        worst = std::max(worst, l - r);
    }
    return std::max(worst, std::abs(l - r));
}

/// True iff lhs is majorized by rhs within tol.
inline bool majorizes(const Spectrum &rhs, const Spectrum &lhs, double tol = kMajorizationTol) {
    return majorization_violation(rhs, lhs) <= tol;
}

/// Sum of the k largest eigenvalues.
inline double ky_fan_sum(const ComplexMatrix &h, std::size_t k) {
    if (k < 1 || k > h.dim()) throw Error(ErrorCode::BadRank, "k must lie in 1..d");
    return eigenvalues(h).partial_sum(k);
}

namespace detail {

inline Spectrum weighted_average(const std::vector<std::pair<double, Spectrum>> &terms, std::size_t d) {
    std::vector<double> avg(d, 0.0);
    for (const auto &[p, s] : terms)
        for (std::size_t i = 0; i < d; ++i) avg[i] += p * s[i];
    return Spectrum(std::move(avg));
}

}  // namespace detail

/// sum_b p_b lambda(rho_b), entrywise over sorted spectra.
inline Spectrum average_posterior_spectrum(const DensityOperator &rho, const EfficientMeasurement &m) {
    std::vector<std::pair<double, Spectrum>> terms;
    for (const MeasurementOutcomeRecord &r : outcomes(rho, m)) {
        terms.emplace_back(r.probability, r.posterior.spectrum());
    }
    return detail::weighted_average(terms, rho.dim());
}

struct OmegaTerm {
    std::size_t outcome_index;
    double probability;
    DensityOperator omega;
};

/// rho = sum_b p_b omega_b with omega_b = rho^{1/2} E_b rho^{1/2} / p_b.
inline std::vector<OmegaTerm> omega_decomposition(const DensityOperator &rho, const Povm &m,
                                                  double prob_floor = kProbFloor) {
    if (m.dim() != rho.dim()) throw Error(ErrorCode::DimMismatch, "omega_decomposition");
    const ComplexMatrix root = psd_sqrt(rho.matrix());
    std::vector<OmegaTerm> terms;
    for (std::size_t b = 0; b < m.size(); ++b) {
        const double p = outcome_probability(rho, m, b);
        if (p <= prob_floor) continue;
        terms.push_back({b, p, DensityOperator::from_psd(root * m[b] * root)});
    }
    return terms;
}

struct MajorizationVerdict {
    bool omega_route = false;
    bool direct_route = false;
    double omega_violation = 0.0;
    double direct_violation = 0.0;

    bool holds() const { return omega_route && direct_route; }
    bool routes_agree() const { return omega_route == direct_route; }
};

/// Checks lambda(rho) against the average posterior spectrum by both routes.
inline MajorizationVerdict check_majorization_theorem(const DensityOperator &rho, const EfficientMeasurement &m,
                                                      double tol = kMajorizationTol) {
    const Spectrum target = rho.spectrum();

    std::vector<std::pair<double, Spectrum>> omega_terms;
    for (const OmegaTerm &t : omega_decomposition(rho, m.povm())) {
        omega_terms.emplace_back(t.probability, t.omega.spectrum());
    }
    const Spectrum omega_avg = detail::weighted_average(omega_terms, rho.dim());
    const Spectrum direct_avg = average_posterior_spectrum(rho, m);

    MajorizationVerdict v;
    v.omega_violation = majorization_violation(omega_avg, target);
    v.direct_violation = majorization_violation(direct_avg, target);
    v.omega_route = v.omega_violation <= tol;
    v.direct_route = v.direct_violation <= tol;
    return v;
}

inline bool verify_majorization_theorem(const DensityOperator &rho, const EfficientMeasurement &m) {
    return check_majorization_theorem(rho, m).holds();
}

}  // namespace tradeoff
