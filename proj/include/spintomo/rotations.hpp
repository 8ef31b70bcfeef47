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

#include <Eigen/Dense>

#include "spintomo/quaternion.hpp"

namespace spintomo {

using SU2Matrix = Eigen::Matrix2cd;
using Rotation3 = Eigen::Matrix3d;

/// ZYZ angles for U = U_z(psi) U_y(theta) U_z(phi), with
/// phi in [0, 2pi), theta in [0, pi] and psi in [-pi, pi).
/// theta == pi only occurs on the degenerate locus.
struct EulerAngles {
    double phi = 0.0;
    double theta = 0.0;
    double psi = 0.0;
};

/// Euler angles plus a flag for the gimbal locus theta in {0, pi}, where the
/// split between phi and psi is not unique (psi is set to 0 there).
struct EulerDecomposition {
    EulerAngles angles;
    bool degenerate = false;
};

bool is_su2(const SU2Matrix &u, double tol = kUnitNormTol);
bool is_rotation(const Rotation3 &r, double tol = kUnitNormTol);

/// U(a) = a0 e0 + a1 e1 + a2 e2 + a3 e3 in the basis e1 = i sigma_x,
/// e2 = i sigma_y, e3 = i sigma_z:
///   [[a0 + i a3, a2 + i a1], [-a2 + i a1, a0 - i a3]].
/// The lower-left sign is the one that lands in SU(2) (det U = 1).
SU2Matrix su2_from_quaternion(const Quaternion &a);

/// Inverse of su2_from_quaternion, returning the canonical representative.
Quaternion quaternion_from_su2(const SU2Matrix &u);

/// U_z(psi) U_y(theta) U_z(phi) with U_z(t) = diag(e^{it/2}, e^{-it/2}) and
/// U_y(t) = [[cos(t/2), sin(t/2)], [-sin(t/2), cos(t/2)]].
SU2Matrix euler_to_su2(const EulerAngles &e);

/// Quaternion components read off euler_to_su2(e); sign-faithful to the
/// matrix, not canonicalized.
Quaternion quaternion_from_euler(const EulerAngles &e);

/// alpha = e^{i(psi+phi)/2} cos(theta/2), beta = e^{i(psi-phi)/2} sin(theta/2).
CayleyKlein cayley_klein_from_euler(const EulerAngles &e);

/// ZYZ angles with euler_to_su2(result) = +/- su2_from_quaternion(a),
/// computed from the Cayley-Klein arguments. On the gimbal locus psi = 0 and
/// the degenerate flag is set.
EulerDecomposition quaternion_to_euler(const Quaternion &a);

SU2Matrix su2_from_cayley_klein(const CayleyKlein &ck);
CayleyKlein cayley_klein_from_su2(const SU2Matrix &u);

/// R_z(phi) R_y(theta):
///   [[cos phi cos theta, -sin phi, cos phi sin theta],
///    [sin phi cos theta,  cos phi, sin phi sin theta],
///    [-sin theta,         0,       cos theta]].
Rotation3 rotation_from_euler(double phi, double theta);

/// The quadratic-in-components rotation matrix of a unit quaternion;
/// R(a) = R(-a).
Rotation3 rotation_from_quaternion(const Quaternion &a);

/// n = (sin theta cos phi, sin theta sin phi, cos theta); the third column of
/// rotation_from_euler.
Eigen::Vector3d direction_from_euler(double phi, double theta);

/// Third column of rotation_from_quaternion.
Eigen::Vector3d direction_from_quaternion(const Quaternion &a);

} // namespace spintomo
