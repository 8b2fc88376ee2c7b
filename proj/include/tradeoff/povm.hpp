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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tradeoff/matcore.hpp"

namespace tradeoff {

inline constexpr double kResolutionTol = 1e-10;

/// Throws NotPsd / NotResolution / DimMismatch unless the effects are PSD
/// and sum to the identity.
inline void validate(std::span<const ComplexMatrix> effects, double psd_tol = kHermitianTol,
                     double sum_tol = kResolutionTol) {
    if (effects.empty()) throw Error(ErrorCode::NotResolution, "a POVM needs at least one effect");
    const std::size_t d = effects.front().dim();
    ComplexMatrix total(d);
    for (std::size_t b = 0; b < effects.size(); ++b) {
        const ComplexMatrix &e = effects[b];
        if (e.dim() != d) throw Error(ErrorCode::DimMismatch, "effect " + std::to_string(b));
        if (!is_hermitian(e, psd_tol)) {
            throw Error(ErrorCode::NotPsd, "effect " + std::to_string(b) + " is not Hermitian");
        }
        const Spectrum s = eigenvalues(e, psd_tol);
        if (s[s.size() - 1] < -psd_tol) {
            throw Error(ErrorCode::NotPsd, "effect " + std::to_string(b) + " has eigenvalue " +
                                               std::to_string(s[s.size() - 1]));
        }
        total += e;
    }
    const double err = max_abs_diff(total, ComplexMatrix::identity(d));
    if (err > sum_tol) {
        throw Error(ErrorCode::NotResolution, "effects sum to identity only within " + std::to_string(err));
    }
}

/// A measurement (E_b): PSD effects forming a resolution of the identity.
class Povm {
  public:
    explicit Povm(std::vector<ComplexMatrix> effects) : effects_(std::move(effects)) {
        validate(effects_);
    }

    /// The one-outcome measurement {I}.
    static Povm trivial(std::size_t dim) { return Povm({ComplexMatrix::identity(dim)}); }

    /// Rank-one projectors onto the columns of a unitary.
    static Povm projective(const ComplexMatrix &basis) {
        if (!is_unitary(basis)) throw Error(ErrorCode::NotUnitary, "projective basis");
        std::vector<ComplexMatrix> effects;
        for (std::size_t j = 0; j < basis.dim(); ++j) {
            const std::vector<complex> col = basis.column(j);
            effects.push_back(ComplexMatrix::outer(col));
        }
        return Povm(std::move(effects));
    }

    std::size_t dim() const { return effects_.front().dim(); }
    std::size_t size() const noexcept { return effects_.size(); }
    const ComplexMatrix &operator[](std::size_t b) const { return effects_[b]; }
    std::span<const ComplexMatrix> effects() const noexcept { return effects_; }

  private:
    std::vector<ComplexMatrix> effects_;
};

inline void validate(const Povm &m) { validate(m.effects()); }

}  // namespace tradeoff
