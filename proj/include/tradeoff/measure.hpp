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
 * Efficient measurements A_b = U_b E_b^{1/2} and the two views of their
 * effect on a shared state: the measurer, who sees outcome b and updates to
 * rho_b = A_b rho A_b^dagger / p_b, and the bystander, who only knows a
 * measurement happened and updates to rho~ = sum_b A_b rho A_b^dagger.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tradeoff/matcore.hpp"
#include "tradeoff/povm.hpp"
#include "tradeoff/states.hpp"

namespace tradeoff {

/// Outcomes with probability at or below this are left out of averages.
inline constexpr double kProbFloor = 1e-14;

class EfficientMeasurement {
  public:
    /// Measurement without feedback: every U_b is the identity.
    explicit EfficientMeasurement(Povm povm) : povm_(std::move(povm)) {
        for (std::size_t b = 0; b < povm_.size(); ++b) {
            feedback_.push_back(ComplexMatrix::identity(povm_.dim()));
        }
        build_kraus();
    }

    EfficientMeasurement(Povm povm, std::vector<ComplexMatrix> feedback)
        : povm_(std::move(povm)), feedback_(std::move(feedback)) {
        if (feedback_.size() != povm_.size()) {
            throw Error(ErrorCode::LengthMismatch, "one feedback unitary per effect is required");
        }
        for (const ComplexMatrix &u : feedback_) {
            if (u.dim() != povm_.dim()) throw Error(ErrorCode::DimMismatch, "feedback unitary");
            if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "feedback operator");
            if (max_abs_diff(u, ComplexMatrix::identity(u.dim())) > 0.0) has_feedback_ = true;
        }
        build_kraus();
    }

    const Povm &povm() const noexcept { return povm_; }
    std::size_t dim() const { return povm_.dim(); }
    std::size_t size() const noexcept { return povm_.size(); }
    bool has_feedback() const noexcept { return has_feedback_; }
    const ComplexMatrix &feedback(std::size_t b) const { return feedback_[b]; }
    const ComplexMatrix &kraus(std::size_t b) const { return kraus_[b]; }

  private:
    void build_kraus() {
        ComplexMatrix completeness(povm_.dim());
        for (std::size_t b = 0; b < povm_.size(); ++b) {
            kraus_.push_back(feedback_[b] * psd_sqrt(povm_[b]));
            completeness += kraus_.back().adjoint() * kraus_.back();
        }
        if (max_abs_diff(completeness, ComplexMatrix::identity(povm_.dim())) > kResolutionTol) {
            throw Error(ErrorCode::NotResolution, "Kraus operators are not complete");
        }
    }

    Povm povm_;
    std::vector<ComplexMatrix> feedback_;
    std::vector<ComplexMatrix> kraus_;
    bool has_feedback_ = false;
};

struct MeasurementOutcomeRecord {
    std::size_t outcome_index;
    double probability;
    DensityOperator posterior;
};

/// True iff every nonvanishing effect has full numerical rank.
inline bool is_finite_strength(const Povm &m, double rank_tol = 1e-10, double zero_tol = 1e-12) {
    for (const ComplexMatrix &e : m.effects()) {
        const Spectrum s = eigenvalues(e);
        const double largest = s[0];
        if (largest <= zero_tol) continue;
        if (s[s.size() - 1] <= rank_tol * largest) return false;
    }
    return true;
}

/// p m1 + (1 - p) m2, outcome by outcome; the shorter POVM is padded with zero effects.
inline Povm convex_combine(const Povm &m1, const Povm &m2, double p) {
    if (m1.dim() != m2.dim()) throw Error(ErrorCode::DimMismatch, "convex_combine");
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "weight must lie in [0, 1]");
    const std::size_t n = std::max(m1.size(), m2.size());
    const ComplexMatrix zero(m1.dim());
    std::vector<ComplexMatrix> effects;
    for (std::size_t b = 0; b < n; ++b) {
        const ComplexMatrix &e = b < m1.size() ? m1[b] : zero;
        const ComplexMatrix &f = b < m2.size() ? m2[b] : zero;
        effects.push_back(p * e + (1.0 - p) * f);
    }
    return Povm(std::move(effects));
}

/// U E_b U^dagger for every effect.
inline Povm conjugate(const Povm &m, const ComplexMatrix &u) {
    if (u.dim() != m.dim()) throw Error(ErrorCode::DimMismatch, "conjugate");
    if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "conjugating operator");
    const ComplexMatrix ud = u.adjoint();
    std::vector<ComplexMatrix> effects;
    for (const ComplexMatrix &e : m.effects()) effects.push_back(hermitian_part(u * e * ud));
    return Povm(std::move(effects));
}

/// p_b = tr(rho E_b), clamped to [0, 1].
inline double outcome_probability(const DensityOperator &rho, const Povm &m, std::size_t b) {
    if (m.dim() != rho.dim()) throw Error(ErrorCode::DimMismatch, "outcome_probability");
    if (b >= m.size()) throw Error(ErrorCode::IndexOutOfRange, "outcome " + std::to_string(b));
    return std::clamp(trace_product(rho.matrix(), m[b]), 0.0, 1.0);
}

inline MeasurementOutcomeRecord posterior(const DensityOperator &rho, const EfficientMeasurement &m,
                                          std::size_t b, double prob_floor = kProbFloor) {
    const double p = outcome_probability(rho, m.povm(), b);
    if (p <= prob_floor) {
        throw Error(ErrorCode::ZeroProbabilityOutcome, "outcome " + std::to_string(b));
    }
    const ComplexMatrix &a = m.kraus(b);
    return {b, p, DensityOperator::from_psd(a * rho.matrix() * a.adjoint())};
}

/// Every outcome whose probability exceeds the floor.
inline std::vector<MeasurementOutcomeRecord> outcomes(const DensityOperator &rho,
                                                      const EfficientMeasurement &m,
                                                      double prob_floor = kProbFloor) {
    std::vector<MeasurementOutcomeRecord> records;
    for (std::size_t b = 0; b < m.size(); ++b) {
        if (outcome_probability(rho, m.povm(), b) > prob_floor) {
            records.push_back(posterior(rho, m, b, prob_floor));
        }
    }
    return records;
}

/// rho~ = sum_b A_b rho A_b^dagger.
inline DensityOperator outside_state(const DensityOperator &rho, const EfficientMeasurement &m) {
    if (m.dim() != rho.dim()) throw Error(ErrorCode::DimMismatch, "outside_state");
    ComplexMatrix total(rho.dim());
    for (std::size_t b = 0; b < m.size(); ++b) {
        const ComplexMatrix &a = m.kraus(b);
        total += a * rho.matrix() * a.adjoint();
    }
    return DensityOperator::from_psd(total);
}

/// F(rho) - sum_b p_b F(rho_b): the measurer's average decrease of F.
inline double delta_in(const DensityOperator &rho, const EfficientMeasurement &m, Functional f,
                       double prob_floor = kProbFloor) {
    double average = 0.0;
    for (const MeasurementOutcomeRecord &r : outcomes(rho, m, prob_floor)) {
        average += r.probability * evaluate(f, r.posterior);
    }
    return evaluate(f, rho) - average;
}

/// F(rho~) - F(rho): the bystander's increase of F.
inline double delta_out(const DensityOperator &rho, const EfficientMeasurement &m, Functional f) {
    return evaluate(f, outside_state(rho, m)) - evaluate(f, rho);
}

}  // namespace tradeoff
