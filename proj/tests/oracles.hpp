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

// Reference implementations used only by the tests. None of them call into the
// library's closed forms, so agreement is a genuine cross-check.

#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using ld = long double;

/// Q = -(1/ln 2) sum_i lambda_i^d ln lambda_i / prod_{j != i} (lambda_i - lambda_j), distinct entries.
inline ld subentropy_distinct(const std::vector<ld> &lambda) {
    const std::size_t d = lambda.size();
    ld sum = 0.0L;
    for (std::size_t i = 0; i < d; ++i) {
        if (lambda[i] <= 0.0L) continue;
        ld den = 1.0L;
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) den *= lambda[i] - lambda[j];
        sum += std::pow(lambda[i], static_cast<ld>(d)) * std::log(lambda[i]) / den;
    }
    return -sum / std::numbers::ln2_v<ld>;
}

/// Subentropy of a descending spectrum with repeated values split by eps,
/// extrapolated to eps -> 0 from eps, eps/2, eps/4.
inline double subentropy_perturbed(std::vector<double> spectrum, ld eps = 1e-3L) {
    std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
    auto at = [&](ld e) {
        std::vector<ld> lambda(spectrum.size());
        const std::size_t d = spectrum.size();
        for (std::size_t i = 0; i < d; ++i) lambda[i] = spectrum[i] + e * static_cast<ld>(d - 1 - i);
        return subentropy_distinct(lambda);
    };
    const ld q1 = at(eps);
    const ld q2 = at(eps / 2);
    const ld q4 = at(eps / 4);
    const ld r1 = 2 * q2 - q1;
    const ld r2 = 2 * q4 - q2;
    return static_cast<double>((4 * r2 - r1) / 3);
}

/// Shannon entropy in bits.
inline double shannon_bits(const std::vector<double> &p) {
    double h = 0.0;
    for (double x : p)
        if (x > 0.0) h -= x * std::log2(x);
    return h;
}

struct MonteCarlo {
    double mean;
    double standard_error;
};

/// Haar-random orthonormal basis (columns) from complex Gaussians and modified Gram-Schmidt.
template <class Engine>
std::vector<std::vector<std::complex<double>>> haar_basis(std::size_t d, Engine &rng) {
    std::normal_distribution<double> normal;
    std::vector<std::vector<std::complex<double>>> cols(d, std::vector<std::complex<double>>(d));
    for (auto &c : cols)
        for (auto &x : c) {
            const double re = normal(rng);
            x = {re, normal(rng)};
        }
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            std::complex<double> dot = 0.0;
            for (std::size_t i = 0; i < d; ++i) dot += std::conj(cols[k][i]) * cols[j][i];
            for (std::size_t i = 0; i < d; ++i) cols[j][i] -= dot * cols[k][i];
        }
        double n = 0.0;
        for (auto &x : cols[j]) n += std::norm(x);
        n = std::sqrt(n);
        for (auto &x : cols[j]) x /= n;
    }
    return cols;
}

/// Mean Shannon entropy of the outcome distribution of Haar-random projective
/// measurements on the diagonal state diag(lambda).
template <class Engine>
MonteCarlo mean_entropy_monte_carlo(const std::vector<double> &lambda, std::size_t samples, Engine &rng) {
    const std::size_t d = lambda.size();
    double sum = 0.0;
    double sum_sq = 0.0;
    std::vector<double> p(d);
    for (std::size_t s = 0; s < samples; ++s) {
        const auto basis = haar_basis(d, rng);
        for (std::size_t j = 0; j < d; ++j) {
            p[j] = 0.0;
            for (std::size_t i = 0; i < d; ++i) p[j] += lambda[i] * std::norm(basis[j][i]);
        }
        const double h = shannon_bits(p);
        sum += h;
        sum_sq += h * h;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double var = std::max(0.0, sum_sq / n - mean * mean);
    return {mean, std::sqrt(var / (n - 1.0))};
}

/// Quad precision for the angle search, where Delta_in is flat near its maximum.
using quad = __float128;

inline long double root(long double x) { return std::sqrt(x); }

inline quad root(quad x) {
    if (x <= 0) return 0;
    quad y = std::sqrt(static_cast<long double>(x));
    for (int i = 0; i < 3; ++i) y = (y + x / y) / 2;
    return y;
}

/// Real symmetric 2x2 matrix [[p, q], [q, r]].
template <class T>
struct Sym2 {
    T p, q, r;
};

template <class T>
Sym2<T> congruence(const Sym2<T> &a, const Sym2<T> &b) {
    // a * b * a
    const T m00 = a.p * b.p + a.q * b.q, m01 = a.p * b.q + a.q * b.r;
    const T m10 = a.q * b.p + a.r * b.q, m11 = a.q * b.q + a.r * b.r;
    return {m00 * a.p + m01 * a.q, m00 * a.q + m01 * a.r, m10 * a.q + m11 * a.r};
}

template <class T>
Sym2<T> sqrt_psd(const Sym2<T> &m) {
    const T det = m.p * m.r - m.q * m.q;
    const T s = root(det > 0 ? det : T(0));
    const T trace = m.p + m.r + 2 * s;
    const T t = root(trace > 0 ? trace : T(0));
    if (t == 0) return {0, 0, 0};
    return {(m.p + s) / t, m.q / t, (m.r + s) / t};
}

template <class T>
T impurity2(const Sym2<T> &rho) {
    const T tr = rho.p + rho.r;
    return 1 - (rho.p * rho.p + 2 * rho.q * rho.q + rho.r * rho.r) / (tr * tr);
}

template <class T>
struct QubitDeltas {
    T delta_in;
    T delta_out;
};

/// Two-outcome measurement (E, I - E) with E = (alpha/2)(I + b (sqrt(1-z^2) sigma_x + z sigma_z))
/// on rho = (I + a sigma_z)/2, impurity changes of both observers, from 2x2 algebra.
template <class T = ld>
QubitDeltas<T> qubit_deltas(T a, T b, T alpha, T z) {
    const T one_minus = 1 - z * z;
    const T x = root(one_minus > 0 ? one_minus : T(0));
    const Sym2<T> rho{(1 + a) / 2, 0, (1 - a) / 2};
    const Sym2<T> e{alpha / 2 * (1 + b * z), alpha / 2 * b * x, alpha / 2 * (1 - b * z)};
    const Sym2<T> f{1 - e.p, -e.q, 1 - e.r};
    T in = impurity2(rho);
    Sym2<T> outside{0, 0, 0};
    for (const Sym2<T> &eff : {e, f}) {
        const Sym2<T> un = congruence(sqrt_psd(eff), rho);
        const T prob = un.p + un.r;
        outside = {outside.p + un.p, outside.q + un.q, outside.r + un.r};
        if (prob > T(1e-30L)) in -= prob * impurity2(un);
    }
    return {in, impurity2(outside) - impurity2(rho)};
}

/// Golden-section maximizer of a unimodal function on [lo, hi].
template <class T, class Fn>
T golden_argmax(Fn &&fn, T lo, T hi, T tol) {
    const T inv_phi = (root(T(5)) - 1) / 2;
    T x1 = hi - inv_phi * (hi - lo);
    T x2 = lo + inv_phi * (hi - lo);
    T f1 = fn(x1);
    T f2 = fn(x2);
    while (hi - lo > tol) {
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
    return (lo + hi) / 2;
}

/// argmax over z in [-1, 1] of the inside impurity gain, by golden section in quad precision.
inline double argmax_delta_in(double a, double b, double alpha) {
    const quad qa = a, qb = b, qalpha = alpha;
    const quad z = golden_argmax<quad>([&](quad zz) { return qubit_deltas<quad>(qa, qb, qalpha, zz).delta_in; },
                                       quad(-1), quad(1), quad(1e-15L));
    return static_cast<double>(z);
}

}  // namespace oracle
