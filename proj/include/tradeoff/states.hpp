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
 * Density operators, the qubit Bloch map, and the knowledge functionals
 * P (impurity), S (von Neumann entropy), Q (subentropy) and Hbar (mean
 * entropy of a Haar-typical basis measurement). Entropies are in bits.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tradeoff/matcore.hpp"
#include "tradeoff/povm.hpp"

namespace tradeoff {

inline constexpr double kStateTol = 1e-12;

/// Default eigenvalue separation below which subentropy treats nodes as equal.
inline constexpr double kDegeneracyGap = 1e-6;

class DensityOperator {
  public:
    /// Validates Hermiticity, unit trace and positivity, all within tol.
    explicit DensityOperator(ComplexMatrix m, double tol = kStateTol) : m_(std::move(m)) {
        if (!is_hermitian(m_, tol)) throw Error(ErrorCode::InvalidState, "not Hermitian");
        const complex tr = m_.trace();
        if (std::abs(tr - 1.0) > tol) {
            throw Error(ErrorCode::InvalidState, "trace " + std::to_string(tr.real()) + " is not 1");
        }
        m_ = hermitian_part(m_);
        const Spectrum s = eigenvalues(m_, tol);
        if (s[s.size() - 1] < -tol) {
            throw Error(ErrorCode::InvalidState,
                        "negative eigenvalue " + std::to_string(s[s.size() - 1]));
        }
    }

    /// Hermitizes and trace-normalizes a matrix that is PSD by construction
    /// (e.g. A rho A^dagger). No eigenvalue check is performed.
    static DensityOperator from_psd(const ComplexMatrix &m) {
        const double tr = m.trace().real();
        if (!(tr > 0.0)) throw Error(ErrorCode::InvalidState, "non-positive trace");
        return DensityOperator(hermitian_part(m) * (1.0 / tr), Trusted{});
    }

    static DensityOperator maximally_mixed(std::size_t dim) {
        return DensityOperator(ComplexMatrix::identity(dim) * (1.0 / static_cast<double>(dim)));
    }

    static DensityOperator pure(std::span<const complex> psi) {
        double norm2 = 0.0;
        for (const complex &z : psi) norm2 += std::norm(z);
        if (!(norm2 > 0.0)) throw Error(ErrorCode::InvalidState, "zero state vector");
        return from_psd(ComplexMatrix::outer(psi) * (1.0 / norm2));
    }

    static DensityOperator diagonal(std::initializer_list<double> probs) {
        return DensityOperator(ComplexMatrix::diagonal(probs));
    }

    const ComplexMatrix &matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.dim(); }
    Spectrum spectrum() const { return eigenvalues(m_); }

  private:
    struct Trusted {};
    DensityOperator(ComplexMatrix m, Trusted) : m_(std::move(m)) {}

    ComplexMatrix m_;
};

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double modulus() const { return std::sqrt(x * x + y * y + z * z); }
};

/// The Pauli matrices, indexed 0..2 for x, y, z.
inline ComplexMatrix pauli(int axis) {
    using namespace std::complex_literals;
    switch (axis) {
        case 0: return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0});
        case 1: return ComplexMatrix(2, {0.0, -1i, 1i, 0.0});
        case 2: return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0});
        default: throw Error(ErrorCode::InvalidArgument, "Pauli axis must be 0, 1 or 2");
    }
}

/// c0 I + v . sigma for a qubit.
inline ComplexMatrix pauli_combination(double c0, const BlochVector &v) {
    using namespace std::complex_literals;
    return ComplexMatrix(2, {c0 + v.z, v.x - 1i * v.y, v.x + 1i * v.y, c0 - v.z});
}

inline DensityOperator from_bloch(const BlochVector &v) {
    if (v.modulus() > 1.0 + kStateTol) {
        throw Error(ErrorCode::BlochOutOfBall, "modulus " + std::to_string(v.modulus()) + " exceeds 1");
    }
    return DensityOperator::from_psd(pauli_combination(0.5, {0.5 * v.x, 0.5 * v.y, 0.5 * v.z}));
}

inline BlochVector to_bloch(const DensityOperator &rho) {
    if (rho.dim() != 2) throw Error(ErrorCode::DimMismatch, "Bloch vectors exist only for d = 2");
    const ComplexMatrix &m = rho.matrix();
    return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

// --- functionals on spectra -------------------------------------------------

inline double impurity(const Spectrum &s) {
    double sq = 0.0;
    for (double l : s) sq += l * l;
    return 1.0 - sq;
}

inline double von_neumann_entropy(const Spectrum &s) {
    double h = 0.0;
    for (double l : s)
        if (l > 0.0) h -= l * std::log2(l);
    return h;
}

/// (1/2 + 1/3 + ... + 1/d) / ln 2, the Q-independent part of Hbar.
inline double harmonic_bits(std::size_t d) {
    double h = 0.0;
    for (std::size_t j = 2; j <= d; ++j) h += 1.0 / static_cast<double>(j);
    return h / std::numbers::ln2;
}

namespace detail {

/// n-th derivative of x^d ln x divided by n!, for n < d.
inline long double xdlogx_taylor(long double x, std::size_t d, std::size_t n) {
    if (x <= 0.0L) return 0.0L;
    long double binom = 1.0L;  // C(d, n)
    long double harm = 0.0L;   // H_d - H_{d-n}
    for (std::size_t j = 0; j < n; ++j) {
        binom = binom * static_cast<long double>(d - j) / static_cast<long double>(j + 1);
        harm += 1.0L / static_cast<long double>(d - j);
    }
    return binom * std::pow(x, static_cast<long double>(d - n)) * (std::log(x) + harm);
}

}  // namespace detail

/**
 * Subentropy Q = -sum_k (prod_{i != k} l_k / (l_k - l_i)) l_k log2 l_k.
 *
 * The sum is the divided difference of f(x) = x^d log2 x over the
 * eigenvalues, so it is evaluated with a divided-difference table in extended
 * precision. Eigenvalues closer than `degeneracy_gap` are merged to their
 * cluster mean and handled through the confluent (derivative) limit, which is
 * the epsilon -> 0 value of splitting them apart.
 */
inline double subentropy(const Spectrum &s, double degeneracy_gap = kDegeneracyGap) {
    const std::size_t d = s.size();
    std::vector<long double> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = std::max(0.0, s[d - 1 - i]);  // ascending

    for (std::size_t i = 0; i < d;) {
        std::size_t j = i + 1;
        while (j < d && x[j] - x[j - 1] < degeneracy_gap) ++j;
        if (j - i > 1) {
            long double mean = 0.0L;
            for (std::size_t k = i; k < j; ++k) mean += x[k];
            mean /= static_cast<long double>(j - i);
            for (std::size_t k = i; k < j; ++k) x[k] = mean;
        }
        i = j;
    }

    std::vector<long double> table(d);
    for (std::size_t i = 0; i < d; ++i) table[i] = detail::xdlogx_taylor(x[i], d, 0);
    for (std::size_t level = 1; level < d; ++level) {
        for (std::size_t i = 0; i + level < d; ++i) {
            const std::size_t j = i + level;
            if (x[j] == x[i]) {
                table[i] = detail::xdlogx_taylor(x[i], d, level);
            } else {
                table[i] = (table[i + 1] - table[i]) / (x[j] - x[i]);
            }
        }
    }
    const double q = static_cast<double>(-table[0] / std::numbers::ln2_v<long double>);
    return std::max(0.0, q);
}

inline double mean_measurement_entropy(const Spectrum &s, double degeneracy_gap = kDegeneracyGap) {
    return harmonic_bits(s.size()) + subentropy(s, degeneracy_gap);
}

// --- functionals on density operators --------------------------------------

inline double impurity(const DensityOperator &rho) {
    double sq = 0.0;
    for (const complex &z : rho.matrix().entries()) sq += std::norm(z);
    return 1.0 - sq;
}

inline double purity(const DensityOperator &rho) { return 1.0 - impurity(rho); }

inline double von_neumann_entropy(const DensityOperator &rho) {
    return von_neumann_entropy(rho.spectrum());
}

inline double subentropy(const DensityOperator &rho, double degeneracy_gap = kDegeneracyGap) {
    return subentropy(rho.spectrum(), degeneracy_gap);
}

inline double mean_measurement_entropy(const DensityOperator &rho,
                                       double degeneracy_gap = kDegeneracyGap) {
    return mean_measurement_entropy(rho.spectrum(), degeneracy_gap);
}

/// Shannon entropy (bits) of the outcome distribution tr(rho E_b).
inline double shannon_entropy(const DensityOperator &rho, const Povm &m) {
    if (m.dim() != rho.dim()) throw Error(ErrorCode::DimMismatch, "shannon_entropy");
    double h = 0.0;
    for (const ComplexMatrix &e : m.effects()) {
        const double p = std::clamp(trace_product(rho.matrix(), e), 0.0, 1.0);
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

/// The knowledge functionals F. All are concave and unitarily invariant.
enum class Functional { Impurity, VonNeumann, Subentropy, MeanEntropy };

inline std::string_view to_string(Functional f) {
    switch (f) {
        case Functional::Impurity: return "P";
        case Functional::VonNeumann: return "S";
        case Functional::Subentropy: return "Q";
        case Functional::MeanEntropy: return "Hbar";
    }
    return "?";
}

inline std::optional<Functional> parse_functional(std::string_view name) {
    if (name == "P") return Functional::Impurity;
    if (name == "S") return Functional::VonNeumann;
    if (name == "Q") return Functional::Subentropy;
    if (name == "Hbar") return Functional::MeanEntropy;
    return std::nullopt;
}

inline double evaluate(Functional f, const Spectrum &s) {
    switch (f) {
        case Functional::Impurity: return impurity(s);
        case Functional::VonNeumann: return von_neumann_entropy(s);
        case Functional::Subentropy: return subentropy(s);
        case Functional::MeanEntropy: return mean_measurement_entropy(s);
    }
    return 0.0;
}

inline double evaluate(Functional f, const DensityOperator &rho) {
    if (f == Functional::Impurity) return impurity(rho);
    return evaluate(f, rho.spectrum());
}

}  // namespace tradeoff
