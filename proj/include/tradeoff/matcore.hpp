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
 * Small dense complex matrices and the Hermitian eigensolver everything else
 * is built on. Dimensions are tiny (2..8) so all storage is a flat row-major
 * vector and every operation is a plain loop.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tradeoff/error.hpp"

namespace tradeoff {

using complex = std::complex<double>;

inline constexpr std::size_t kMinDim = 2;
inline constexpr std::size_t kMaxDim = 8;

/// Default tolerance for Hermiticity checks and PSD clamping.
inline constexpr double kHermitianTol = 1e-12;

class ComplexMatrix {
  public:
    explicit ComplexMatrix(std::size_t dim) : dim_(checked_dim(dim)), data_(dim * dim) {}

    ComplexMatrix(std::size_t dim, std::vector<complex> row_major)
        : dim_(checked_dim(dim)), data_(std::move(row_major)) {
        if (data_.size() != dim_ * dim_) {
            throw Error(ErrorCode::DimMismatch, "expected " + std::to_string(dim_ * dim_) +
                                                    " entries, got " + std::to_string(data_.size()));
        }
        for (const complex &z : data_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw Error(ErrorCode::InvalidArgument, "matrix entries must be finite");
            }
        }
    }

    ComplexMatrix(std::size_t dim, std::initializer_list<complex> row_major)
        : ComplexMatrix(dim, std::vector<complex>(row_major)) {}

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(std::span<const double> diag) {
        ComplexMatrix m(diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
        return m;
    }

    static ComplexMatrix diagonal(std::initializer_list<double> diag) {
        return diagonal(std::span<const double>(diag.begin(), diag.size()));
    }

    /// |psi><psi| for a (not necessarily normalized) column vector.
    static ComplexMatrix outer(std::span<const complex> psi) {
        ComplexMatrix m(psi.size());
        for (std::size_t i = 0; i < psi.size(); ++i)
            for (std::size_t j = 0; j < psi.size(); ++j) m(i, j) = psi[i] * std::conj(psi[j]);
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }

    complex &operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const complex &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    std::span<const complex> entries() const noexcept { return data_; }

    std::vector<complex> column(std::size_t col) const {
        std::vector<complex> v(dim_);
        for (std::size_t i = 0; i < dim_; ++i) v[i] = (*this)(i, col);
        return v;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
        return m;
    }

    complex trace() const {
        complex t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    ComplexMatrix &operator+=(const ComplexMatrix &rhs) {
        require_same_dim(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
        return *this;
    }

    ComplexMatrix &operator-=(const ComplexMatrix &rhs) {
        require_same_dim(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
        return *this;
    }

    ComplexMatrix &operator*=(complex s) {
        for (complex &z : data_) z *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, complex s) { return lhs *= s; }
    friend ComplexMatrix operator*(complex s, ComplexMatrix rhs) { return rhs *= s; }
    friend ComplexMatrix operator*(double s, ComplexMatrix rhs) { return rhs *= s; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, double s) { return lhs *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
        lhs.require_same_dim(rhs);
        const std::size_t d = lhs.dim_;
        ComplexMatrix out(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) {
                const complex a = lhs(i, k);
                if (a == complex(0.0)) continue;
                for (std::size_t j = 0; j < d; ++j) out(i, j) += a * rhs(k, j);
            }
        return out;
    }

  private:
    static std::size_t checked_dim(std::size_t dim) {
        if (dim < kMinDim || dim > kMaxDim) {
            throw Error(ErrorCode::InvalidArgument,
                        "dimension " + std::to_string(dim) + " outside supported range 2..8");
        }
        return dim;
    }

    void require_same_dim(const ComplexMatrix &other) const {
        if (other.dim_ != dim_) {
            throw Error(ErrorCode::DimMismatch, std::to_string(dim_) + " vs " + std::to_string(other.dim_));
        }
    }

    std::size_t dim_;
    std::vector<complex> data_;
};

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    return worst;
}

inline double hermiticity_error(const ComplexMatrix &m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i; j < m.dim(); ++j)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

inline bool is_hermitian(const ComplexMatrix &m, double tol = kHermitianTol) {
    return hermiticity_error(m) <= tol;
}

/// (M + M^dagger) / 2 with an exactly real diagonal.
inline ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    ComplexMatrix h(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        h(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < m.dim(); ++j) {
            const complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

inline bool is_unitary(const ComplexMatrix &u, double tol = 1e-10) {
    return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim())) <= tol;
}

/// Real part of tr(A B) without forming the product.
inline double trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "trace_product");
    complex t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) t += a(i, k) * b(k, i);
    return t.real();
}

/// Eigenvalues of a Hermitian operator, sorted non-increasing.
class Spectrum {
  public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {
        std::sort(values_.begin(), values_.end(), std::greater<>());
    }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    double sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

    /// Sum of the k largest entries.
    double partial_sum(std::size_t k) const {
        return std::accumulate(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
    }

  private:
    std::vector<double> values_;
};

struct Eigensystem {
    Spectrum values;
    /// Column j is the unit eigenvector for values[j].
    ComplexMatrix vectors;
};

namespace detail {

inline double off_diagonal_norm2(const ComplexMatrix &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return s;
}

}  // namespace detail

/**
 * Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
 *
 * Each rotation first removes the phase of the pivot a_pq, then applies the
 * real symmetric Jacobi rotation that annihilates it. Sweeps continue until
 * the off-diagonal mass is below machine precision relative to ||H||_F.
 */
inline Eigensystem eig_hermitian(const ComplexMatrix &h, double tol = kHermitianTol) {
    if (!is_hermitian(h, tol)) {
        throw Error(ErrorCode::NotHermitian,
                    "asymmetry " + std::to_string(hermiticity_error(h)) + " exceeds tolerance");
    }
    constexpr int kMaxSweeps = 64;
    const std::size_t d = h.dim();
    ComplexMatrix a = hermitian_part(h);
    ComplexMatrix v = ComplexMatrix::identity(d);

    double frob2 = 0.0;
    for (const complex &z : a.entries()) frob2 += std::norm(z);
    const double eps = std::numeric_limits<double>::epsilon();
    const double target = eps * eps * frob2 * 1e-2;

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        const double off = detail::off_diagonal_norm2(a);
        if (off <= target || off < std::numeric_limits<double>::min()) break;
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                const complex phase = apq / r;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // W = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on the (p, q) plane.
                const complex wqp = -s * std::conj(phase);
                const complex wqq = c * std::conj(phase);
                for (std::size_t k = 0; k < d; ++k) {  // A <- A W
                    const complex akp = a(k, p);
                    const complex akq = a(k, q);
                    a(k, p) = c * akp + wqp * akq;
                    a(k, q) = s * akp + wqq * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {  // A <- W^dagger A
                    const complex apk = a(p, k);
                    const complex aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(wqp) * aqk;
                    a(q, k) = s * apk + std::conj(wqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < d; ++k) {  // V <- V W
                    const complex vkp = v(k, p);
                    const complex vkq = v(k, q);
                    v(k, p) = c * vkp + wqp * vkq;
                    v(k, q) = s * vkp + wqq * vkq;
                }
            }
        }
    }
    if (sweep == kMaxSweeps) throw Error(ErrorCode::NoConvergence, "Jacobi sweep limit reached");

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
    std::vector<double> values(d);
    ComplexMatrix vectors(d);
    for (std::size_t j = 0; j < d; ++j) {
        values[j] = a(order[j], order[j]).real();
        for (std::size_t k = 0; k < d; ++k) vectors(k, j) = v(k, order[j]);
    }
    return {Spectrum(std::move(values)), std::move(vectors)};
}

inline Spectrum eigenvalues(const ComplexMatrix &h, double tol = kHermitianTol) {
    return eig_hermitian(h, tol).values;
}

/// V diag(f(lambda)) V^dagger for a Hermitian argument.
template <class Fn>
ComplexMatrix apply_spectral(const Eigensystem &es, Fn &&fn) {
    const std::size_t d = es.vectors.dim();
    ComplexMatrix out(d);
    for (std::size_t j = 0; j < d; ++j) {
        const double f = fn(es.values[j]);
        if (f == 0.0) continue;
        for (std::size_t r = 0; r < d; ++r) {
            const complex vr = es.vectors(r, j) * f;
            for (std::size_t c = 0; c < d; ++c) out(r, c) += vr * std::conj(es.vectors(c, j));
        }
    }
    return hermitian_part(out);
}

/// Hermitian PSD square root. Eigenvalues in [-tol, 0) are clamped to zero, as
/// are positive ones at the rounding level of the decomposition.
inline ComplexMatrix psd_sqrt(const ComplexMatrix &m, double tol = kHermitianTol) {
    const Eigensystem es = eig_hermitian(m, tol);
    const double lowest = es.values[es.values.size() - 1];
    if (lowest < -tol) throw Error(ErrorCode::NotPsd, "smallest eigenvalue " + std::to_string(lowest));
    const double noise = 32.0 * std::numeric_limits<double>::epsilon() *
                         std::max(std::abs(es.values[0]), std::abs(lowest));
    return apply_spectral(es, [noise](double x) { return x > noise ? std::sqrt(x) : 0.0; });
}

/// M^{-1/2} for a positive definite M.
inline ComplexMatrix psd_inverse_sqrt(const ComplexMatrix &m, double tol = kHermitianTol) {
    const Eigensystem es = eig_hermitian(m, tol);
    if (es.values[es.values.size() - 1] <= tol) {
        throw Error(ErrorCode::NotPsd, "matrix is singular or indefinite");
    }
    return apply_spectral(es, [](double x) { return 1.0 / std::sqrt(x); });
}

}  // namespace tradeoff
