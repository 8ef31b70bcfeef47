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

#include <doctest.h>

#include <numbers>

#include "spintomo/density.hpp"
#include "spintomo/rotations.hpp"

using namespace spintomo;

namespace {

constexpr double kPi = std::numbers::pi;

double quat_dist(const Quaternion &a, const Quaternion &b) {
    return std::max({std::abs(a.a0 - b.a0), std::abs(a.a1 - b.a1), std::abs(a.a2 - b.a2),
                     std::abs(a.a3 - b.a3)});
}

double mat_dist(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

// Distance up to a global sign.
double mat_dist_sign(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    return std::min(mat_dist(a, b), mat_dist(a, Eigen::MatrixXcd(-b)));
}

const Quaternion e0{1, 0, 0, 0};
const Quaternion e1{0, 1, 0, 0};
const Quaternion e2{0, 0, 1, 0};
const Quaternion e3{0, 0, 0, 1};

} // namespace

TEST_CASE("quaternion multiplication basis relations") {
    CHECK(quat_dist(quat_mul(e1, e2), e3) == 0.0);
    CHECK(quat_dist(quat_mul(e2, e3), e1) == 0.0);
    CHECK(quat_dist(quat_mul(e3, e1), e2) == 0.0);
    CHECK(quat_dist(quat_mul(e1, e1), -e0) == 0.0);
    Rng rng(1);
    const Quaternion a{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    CHECK(quat_dist(quat_mul(e0, a), a) == 0.0);
    CHECK(quat_dist(quat_mul(a, e0), a) == 0.0);
    CHECK(quat_dist(quat_mul(Quaternion{1, 1, 0, 0}, Quaternion{1, 0, 1, 0}),
                    Quaternion{1, 1, 1, 1}) == 0.0);
}

TEST_CASE("quaternion norm") {
    CHECK(quat_norm(e0) == 1.0);
    CHECK(quat_norm(Quaternion{0.5, 0.5, 0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(quat_norm(Quaternion{3, 4, 0, 0}) == doctest::Approx(5.0).epsilon(1e-15));

    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
        const Quaternion a{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        const Quaternion b{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        CHECK(std::abs(quat_norm(quat_mul(a, b)) - quat_norm(a) * quat_norm(b)) <=
              1e-12 * quat_norm(a) * quat_norm(b));
    }
}

TEST_CASE("su2_from_quaternion on basis elements") {
    CHECK(mat_dist(su2_from_quaternion(e0), Eigen::Matrix2cd::Identity()) == 0.0);

    Eigen::Matrix2cd m3;
    m3 << std::complex<double>(0, 1), 0, 0, std::complex<double>(0, -1);
    CHECK(mat_dist(su2_from_quaternion(e3), m3) == 0.0);

    Eigen::Matrix2cd m1;
    m1 << 0, std::complex<double>(0, 1), std::complex<double>(0, 1), 0;
    CHECK(mat_dist(su2_from_quaternion(e1), m1) == 0.0);

    CHECK_THROWS_AS(su2_from_quaternion(Quaternion{0.5, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("su2_from_quaternion lands in SU(2) and reverses products") {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const Quaternion a = haar_sample(rng);
        const Quaternion b = haar_sample(rng);
        const SU2Matrix ua = su2_from_quaternion(a);
        CHECK(is_su2(ua));
        // The matrix map is an antihomomorphism of the Hamilton product:
        // U(a b) = U(b) U(a).
        CHECK(mat_dist(su2_from_quaternion(quat_mul(a, b)),
                       su2_from_quaternion(b) * su2_from_quaternion(a)) < 1e-12);
        // Double cover.
        CHECK(mat_dist(su2_from_quaternion(-a), Eigen::MatrixXcd(-ua)) == 0.0);
    }
}

TEST_CASE("quaternion_from_su2 round trip with canonical sign") {
    CHECK(quat_dist(quaternion_from_su2(Eigen::Matrix2cd::Identity()), e0) == 0.0);
    Eigen::Matrix2cd m3;
    m3 << std::complex<double>(0, 1), 0, 0, std::complex<double>(0, -1);
    CHECK(quat_dist(quaternion_from_su2(m3), e3) == 0.0);

    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        const Quaternion q = haar_sample(rng);
        const Quaternion back = quaternion_from_su2(su2_from_quaternion(q));
        CHECK(quat_dist(back, q.canonical()) < 1e-12);
    }
    Eigen::Matrix2cd not_unitary;
    not_unitary << 2, 0, 0, 1;
    CHECK_THROWS_AS(quaternion_from_su2(not_unitary), std::invalid_argument);
}

TEST_CASE("canonical representative tie-breaking") {
    CHECK(quat_dist(Quaternion{-1, 0, 0, 0}.canonical(), e0) == 0.0);
    CHECK(quat_dist(Quaternion{0, 0, 0, -1}.canonical(), e3) == 0.0);
    CHECK(quat_dist(Quaternion{0, 0, -1, 0}.canonical(), e2) == 0.0);
    CHECK(quat_dist(Quaternion{0, -1, 0, 0}.canonical(), e1) == 0.0);
    CHECK(quat_dist(Quaternion{0, -0.6, 0, -0.8}.canonical(), Quaternion{0, 0.6, 0, 0.8}) == 0.0);
}

TEST_CASE("euler_to_su2 factor matrices") {
    CHECK(mat_dist(euler_to_su2({0, 0, 0}), Eigen::Matrix2cd::Identity()) < 1e-15);

    const double t = 0.9;
    Eigen::Matrix2cd uy;
    uy << std::cos(t / 2), std::sin(t / 2), -std::sin(t / 2), std::cos(t / 2);
    CHECK(mat_dist(euler_to_su2({0, t, 0}), uy) < 1e-15);

    Eigen::Matrix2cd uz;
    uz << std::polar(1.0, t / 2), 0, 0, std::polar(1.0, -t / 2);
    CHECK(mat_dist(euler_to_su2({t, 0, 0}), uz) < 1e-15);

    // Explicit product of the three factors.
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const EulerAngles e{2 * kPi * rng.uniform01(), kPi * rng.uniform01(),
                            kPi * (2 * rng.uniform01() - 1)};
        Eigen::Matrix2cd uzpsi, uyth, uzphi;
        uzpsi << std::polar(1.0, e.psi / 2), 0, 0, std::polar(1.0, -e.psi / 2);
        uyth << std::cos(e.theta / 2), std::sin(e.theta / 2), -std::sin(e.theta / 2),
            std::cos(e.theta / 2);
        uzphi << std::polar(1.0, e.phi / 2), 0, 0, std::polar(1.0, -e.phi / 2);
        CHECK(mat_dist(euler_to_su2(e), uzpsi * uyth * uzphi) < 1e-14);
    }
}

TEST_CASE("cayley_klein_from_euler") {
    const CayleyKlein id = cayley_klein_from_euler({0, 0, 0});
    CHECK(std::abs(id.alpha - 1.0) == 0.0);
    CHECK(std::abs(id.beta) == 0.0);

    const CayleyKlein h = cayley_klein_from_euler({0, kPi / 2, 0});
    CHECK(std::abs(h.alpha - std::sqrt(2.0) / 2.0) < 1e-15);
    CHECK(std::abs(h.beta - std::sqrt(2.0) / 2.0) < 1e-15);

    Rng rng(6);
    for (int i = 0; i < 200; ++i) {
        const CayleyKlein ck = cayley_klein_from_euler(
            {7 * rng.normal(), 7 * rng.normal(), 7 * rng.normal()});
        CHECK(std::abs(std::norm(ck.alpha) + std::norm(ck.beta) - 1.0) < 1e-14);
    }
}

TEST_CASE("cayley_klein_from_quaternion component mapping") {
    const CayleyKlein a = cayley_klein_from_quaternion(e0);
    CHECK(a.alpha == std::complex<double>(1, 0));
    CHECK(a.beta == std::complex<double>(0, 0));

    const CayleyKlein b = cayley_klein_from_quaternion(e3);
    CHECK(b.alpha == std::complex<double>(0, 1));
    CHECK(b.beta == std::complex<double>(0, 0));

    const CayleyKlein c = cayley_klein_from_quaternion(e1);
    CHECK(c.alpha == std::complex<double>(0, 0));
    CHECK(c.beta == std::complex<double>(0, 1));
}

TEST_CASE("quaternion_to_euler identity and exact round trip") {
    const EulerDecomposition id = quaternion_to_euler(e0);
    CHECK(id.degenerate);
    CHECK(id.angles.phi == 0.0);
    CHECK(id.angles.theta == 0.0);
    CHECK(id.angles.psi == 0.0);

    const EulerAngles e{0.3, 0.7, -0.2};
    const EulerDecomposition round = quaternion_to_euler(quaternion_from_euler(e));
    CHECK(!round.degenerate);
    CHECK(std::abs(round.angles.phi - 0.3) < 1e-14);
    CHECK(std::abs(round.angles.theta - 0.7) < 1e-14);
    CHECK(std::abs(round.angles.psi + 0.2) < 1e-14);
}

TEST_CASE("quaternion_to_euler gimbal locus") {
    const EulerDecomposition d = quaternion_to_euler(e2);
    CHECK(d.degenerate);
    CHECK(d.angles.theta == doctest::Approx(kPi));
    CHECK(d.angles.psi == 0.0);
    CHECK(mat_dist_sign(euler_to_su2(d.angles), su2_from_quaternion(e2)) < 1e-12);
}

TEST_CASE("euler round trips agree at the matrix level up to sign") {
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        const Quaternion a = haar_sample(rng);
        const EulerDecomposition d = quaternion_to_euler(a);
        if (d.degenerate) {
            continue;
        }
        CHECK(mat_dist_sign(euler_to_su2(d.angles), su2_from_quaternion(a)) < 1e-10);
    }
}

TEST_CASE("cayley_klein consistency between the euler and quaternion routes") {
    Rng rng(8);
    for (int i = 0; i < 300; ++i) {
        const EulerAngles e{2 * kPi * rng.uniform01(), kPi * rng.uniform01(),
                            kPi * (2 * rng.uniform01() - 1)};
        const CayleyKlein via_euler = cayley_klein_from_euler(e);
        const CayleyKlein via_quat = cayley_klein_from_quaternion(quaternion_from_euler(e));
        CHECK(std::abs(via_euler.alpha - via_quat.alpha) < 1e-12);
        CHECK(std::abs(via_euler.beta - via_quat.beta) < 1e-12);
    }
}

TEST_CASE("rotation_from_euler") {
    CHECK(mat_dist(rotation_from_euler(0, 0).cast<std::complex<double>>(),
                   Eigen::Matrix3cd::Identity()) == 0.0);

    Rotation3 expect;
    expect << 0, 0, 1, 0, 1, 0, -1, 0, 0;
    CHECK((rotation_from_euler(0, kPi / 2) - expect).cwiseAbs().maxCoeff() < 1e-15);

    Rng rng(9);
    for (int i = 0; i < 200; ++i) {
        const Rotation3 r = rotation_from_euler(7 * rng.normal(), 7 * rng.normal());
        CHECK(is_rotation(r));
    }
}

TEST_CASE("rotation_from_quaternion") {
    CHECK((rotation_from_quaternion(e0) - Rotation3::Identity()).cwiseAbs().maxCoeff() == 0.0);

    Rotation3 flip;
    flip << -1, 0, 0, 0, -1, 0, 0, 0, 1;
    CHECK((rotation_from_quaternion(e3) - flip).cwiseAbs().maxCoeff() == 0.0);

    Rng rng(10);
    for (int i = 0; i < 200; ++i) {
        const Quaternion a = haar_sample(rng);
        CHECK(is_rotation(rotation_from_quaternion(a)));
        CHECK((rotation_from_quaternion(a) - rotation_from_quaternion(-a)).cwiseAbs().maxCoeff() ==
              0.0);
    }
}

TEST_CASE("directions") {
    CHECK((direction_from_euler(1.234, 0) - Eigen::Vector3d(0, 0, 1)).norm() < 1e-15);
    CHECK((direction_from_euler(0, kPi / 2) - Eigen::Vector3d(1, 0, 0)).norm() < 1e-15);
    CHECK((direction_from_quaternion(e0) - Eigen::Vector3d(0, 0, 1)).norm() == 0.0);
    CHECK((direction_from_quaternion(e1) - Eigen::Vector3d(0, 0, -1)).norm() == 0.0);

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const double phi = 7 * rng.normal(), theta = 7 * rng.normal();
        CHECK((direction_from_euler(phi, theta) -
               rotation_from_euler(phi, theta) * Eigen::Vector3d(0, 0, 1))
                  .norm() < 1e-14);
        const Quaternion a = haar_sample(rng);
        CHECK(std::abs(direction_from_quaternion(a).norm() - 1.0) < 1e-12);
        CHECK((direction_from_quaternion(a) -
               rotation_from_quaternion(a) * Eigen::Vector3d(0, 0, 1))
                  .norm() < 1e-14);
    }
}

TEST_CASE("conjugation by U(a) rotates Pauli vectors by R(a) transpose") {
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const Quaternion a = haar_sample(rng);
        Eigen::Vector3d v(rng.normal(), rng.normal(), rng.normal());
        v.normalize();
        const SU2Matrix u = su2_from_quaternion(a);
        const Eigen::Matrix2cd lhs =
            u * (v.x() * kPauliX + v.y() * kPauliY + v.z() * kPauliZ) * u.adjoint();
        const Eigen::Vector3d w = rotation_from_quaternion(a).transpose() * v;
        const Eigen::Matrix2cd rhs = w.x() * kPauliX + w.y() * kPauliY + w.z() * kPauliZ;
        CHECK(mat_dist(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("haar_sample moments") {
    Rng rng(13);
    const int n = 100000;
    double mean_a0 = 0.0, mean_a0sq = 0.0, mean_nz = 0.0;
    for (int i = 0; i < n; ++i) {
        const Quaternion a = haar_sample(rng);
        mean_a0 += a.a0;
        mean_a0sq += a.a0 * a.a0;
        mean_nz += direction_from_quaternion(a).z();
    }
    mean_a0 /= n;
    mean_a0sq /= n;
    mean_nz /= n;
    CHECK(std::abs(mean_a0) < 0.01);
    CHECK(std::abs(mean_a0sq - 0.25) < 0.01);
    CHECK(std::abs(mean_nz) < 0.01);
}
