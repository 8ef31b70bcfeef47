// Copyright 2026 The spintomo authors
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

#include <cmath>
#include <complex>
#include <stdexcept>

#include "spintomo/random.hpp"

namespace spintomo {

inline constexpr double kUnitNormTol = 1e-12;

/// Element of the quaternion algebra, components in the e0..e3 basis with
/// e_i e_j = epsilon_{ijk} e_k and e_i^2 = -e0 (Hamilton multiplication).
struct Quaternion {
    double a0 = 1.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w, double x, double y, double z) : a0(w), a1(x), a2(y), a3(z) {}

    double norm() const { return std::sqrt(a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3); }

    constexpr Quaternion conjugate() const { return {a0, -a1, -a2, -a3}; }

    constexpr Quaternion operator-() const { return {-a0, -a1, -a2, -a3}; }

    friend constexpr Quaternion operator*(const Quaternion &a, const Quaternion &b) {
        return {a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3,
                a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2,
                a.a0 * b.a2 + a.a2 * b.a0 + a.a3 * b.a1 - a.a1 * b.a3,
                a.a0 * b.a3 + a.a3 * b.a0 + a.a1 * b.a2 - a.a2 * b.a1};
    }

    bool is_unit(double tol = kUnitNormTol) const { return std::abs(norm() - 1.0) <= tol; }

    Quaternion normalized() const {
        const double n = norm();
        if (!(n > 0.0) || !std::isfinite(n)) {
            throw std::invalid_argument("quaternion with zero or non-finite norm");
        }
        return {a0 / n, a1 / n, a2 / n, a3 / n};
    }

    /// Representative of {q, -q} with a0 >= 0; ties broken on a3, then a2,
    /// then a1, so the lift from SO(3) is deterministic.
    Quaternion canonical() const {
        const double keys[4] = {a0, a3, a2, a1};
        for (double k : keys) {
            if (k > 0.0) {
                return *this;
            }
            if (k < 0.0) {
                return -*this;
            }
        }
        return *this;
    }
};

inline Quaternion quat_mul(const Quaternion &a, const Quaternion &b) { return a * b; }

inline double quat_norm(const Quaternion &a) { return a.norm(); }

inline void require_unit(const Quaternion &a, const char *what) {
    if (!a.is_unit()) {
        throw std::invalid_argument(std::string(what) + ": quaternion norm differs from 1 by more than 1e-12");
    }
}

/// Cayley-Klein pair of a unit quaternion: alpha = a0 + i a3, beta = a2 + i a1.
struct CayleyKlein {
    std::complex<double> alpha{1.0, 0.0};
    std::complex<double> beta{0.0, 0.0};

    bool is_unit(double tol = kUnitNormTol) const {
        return std::abs(std::norm(alpha) + std::norm(beta) - 1.0) <= tol;
    }
};

inline CayleyKlein cayley_klein_from_quaternion(const Quaternion &a) {
    require_unit(a, "cayley_klein_from_quaternion");
    return {{a.a0, a.a3}, {a.a2, a.a1}};
}

inline Quaternion quaternion_from_cayley_klein(const CayleyKlein &ck) {
    return {ck.alpha.real(), ck.beta.imag(), ck.beta.real(), ck.alpha.imag()};
}

/// Uniform sample on S^3 (normalized Haar on Sp(1)): four independent
/// standard normal deviates, normalized.
inline Quaternion haar_sample(Rng &rng) {
    while (true) {
        Quaternion q{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        const double n = q.norm();
        if (n > 1e-12) {
            return {q.a0 / n, q.a1 / n, q.a2 / n, q.a3 / n};
        }
    }
}

} // namespace spintomo
