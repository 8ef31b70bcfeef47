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

#include "spintomo/rotations.hpp"

#include <cmath>
#include <numbers>

namespace spintomo {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phi(double phi) {
    // into [0, 2pi)
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) {
        w += kTwoPi;
    }
    if (w >= kTwoPi) {
        w = 0.0;
    }
    return w;
}

double wrap_psi(double psi) {
    // into [-pi, pi)
    double w = std::fmod(psi + kPi, kTwoPi);
    if (w < 0.0) {
        w += kTwoPi;
    }
    return w - kPi;
}
} // namespace

bool is_su2(const SU2Matrix &u, double tol) {
    const bool unitary = (u * u.adjoint() - SU2Matrix::Identity()).cwiseAbs().maxCoeff() <= tol;
    const bool special = std::abs(u.determinant() - std::complex<double>(1.0, 0.0)) <= tol;
    return unitary && special;
}

bool is_rotation(const Rotation3 &r, double tol) {
    const bool orthogonal = (r.transpose() * r - Rotation3::Identity()).cwiseAbs().maxCoeff() <= tol;
    const bool special = std::abs(r.determinant() - 1.0) <= tol;
    return orthogonal && special;
}

SU2Matrix su2_from_quaternion(const Quaternion &a) {
    require_unit(a, "su2_from_quaternion");
    SU2Matrix u;
    u << std::complex<double>(a.a0, a.a3), std::complex<double>(a.a2, a.a1),
        std::complex<double>(-a.a2, a.a1), std::complex<double>(a.a0, -a.a3);
    return u;
}

Quaternion quaternion_from_su2(const SU2Matrix &u) {
    if (!is_su2(u)) {
        throw std::invalid_argument("quaternion_from_su2: matrix is not in SU(2) within 1e-12");
    }
    const Quaternion q{0.5 * (u(0, 0).real() + u(1, 1).real()),
                       0.5 * (u(0, 1).imag() + u(1, 0).imag()),
                       0.5 * (u(0, 1).real() - u(1, 0).real()),
                       0.5 * (u(0, 0).imag() - u(1, 1).imag())};
    return q.normalized().canonical();
}

SU2Matrix euler_to_su2(const EulerAngles &e) {
    return su2_from_cayley_klein(cayley_klein_from_euler(e));
}

Quaternion quaternion_from_euler(const EulerAngles &e) {
    return quaternion_from_cayley_klein(cayley_klein_from_euler(e));
}

CayleyKlein cayley_klein_from_euler(const EulerAngles &e) {
    const double c = std::cos(0.5 * e.theta);
    const double s = std::sin(0.5 * e.theta);
    const std::complex<double> ea = std::polar(1.0, 0.5 * (e.psi + e.phi));
    const std::complex<double> eb = std::polar(1.0, 0.5 * (e.psi - e.phi));
    return {ea * c, eb * s};
}

SU2Matrix su2_from_cayley_klein(const CayleyKlein &ck) {
    SU2Matrix u;
    u << ck.alpha, ck.beta, -std::conj(ck.beta), std::conj(ck.alpha);
    return u;
}

CayleyKlein cayley_klein_from_su2(const SU2Matrix &u) {
    if (!is_su2(u)) {
        throw std::invalid_argument("cayley_klein_from_su2: matrix is not in SU(2) within 1e-12");
    }
    // Average the two copies of alpha and beta the SU(2) form carries.
    return {{0.5 * (u(0, 0) + std::conj(u(1, 1)))}, {0.5 * (u(0, 1) - std::conj(u(1, 0)))}};
}

EulerDecomposition quaternion_to_euler(const Quaternion &a) {
    require_unit(a, "quaternion_to_euler");
    const CayleyKlein ck = cayley_klein_from_quaternion(a);
    const double ca = std::abs(ck.alpha);
    const double cb = std::abs(ck.beta);
    const double theta = 2.0 * std::atan2(cb, ca);

    EulerDecomposition out;
    out.angles.theta = theta;
    // Degenerate split: |alpha| or |beta| vanishes and only one phase is
    // determined; fix psi = 0.
    if (cb <= kUnitNormTol) {
        out.degenerate = true;
        out.angles.theta = 0.0;
        out.angles.psi = 0.0;
        out.angles.phi = wrap_phi(2.0 * std::arg(ck.alpha));
        return out;
    }
    if (ca <= kUnitNormTol) {
        out.degenerate = true;
        out.angles.theta = kPi;
        out.angles.psi = 0.0;
        out.angles.phi = wrap_phi(-2.0 * std::arg(ck.beta));
        return out;
    }
    const double sum = 2.0 * std::arg(ck.alpha);  // psi + phi
    const double diff = 2.0 * std::arg(ck.beta);  // psi - phi
    out.angles.phi = wrap_phi(0.5 * (sum - diff));
    out.angles.psi = wrap_psi(0.5 * (sum + diff));
    return out;
}

Rotation3 rotation_from_euler(double phi, double theta) {
    const double cp = std::cos(phi), sp = std::sin(phi);
    const double ct = std::cos(theta), st = std::sin(theta);
    Rotation3 r;
    r << cp * ct, -sp, cp * st,
        sp * ct, cp, sp * st,
        -st, 0.0, ct;
    return r;
}

Rotation3 rotation_from_quaternion(const Quaternion &a) {
    require_unit(a, "rotation_from_quaternion");
    const double a0 = a.a0, a1 = a.a1, a2 = a.a2, a3 = a.a3;
    Rotation3 r;
    r << 1.0 - 2.0 * (a2 * a2 + a3 * a3), 2.0 * (a1 * a2 - a0 * a3), 2.0 * (a1 * a3 + a0 * a2),
        2.0 * (a1 * a2 + a0 * a3), 1.0 - 2.0 * (a1 * a1 + a3 * a3), 2.0 * (a2 * a3 - a0 * a1),
        2.0 * (a1 * a3 - a0 * a2), 2.0 * (a2 * a3 + a0 * a1), 1.0 - 2.0 * (a1 * a1 + a2 * a2);
    return r;
}

Eigen::Vector3d direction_from_euler(double phi, double theta) {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

Eigen::Vector3d direction_from_quaternion(const Quaternion &a) {
    require_unit(a, "direction_from_quaternion");
    return {2.0 * (a.a1 * a.a3 + a.a0 * a.a2), 2.0 * (a.a2 * a.a3 - a.a0 * a.a1),
            1.0 - 2.0 * (a.a1 * a.a1 + a.a2 * a.a2)};
}

} // namespace spintomo
