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

#include <complex>

#include <Eigen/Dense>

#include "spintomo/half_integer.hpp"
#include "spintomo/rotations.hpp"

namespace spintomo {

/// d^j_{mn}(beta) in the convention d^j = matrix of exp(-i beta J_y), i.e.
/// d^{1/2}(beta) = [[cos(b/2), -sin(b/2)], [sin(b/2), cos(b/2)]] with rows and
/// columns ordered m = +1/2, -1/2. Factorial sum with log-factorial
/// stabilization.
double wigner_small_d(HalfInteger j, HalfInteger m, HalfInteger n, double beta);

/// D^j_{mn}(phi, theta, psi) = e^{-i m phi} d^j_{mn}(theta) e^{-i n psi}.
std::complex<double> wigner_D(HalfInteger j, HalfInteger m, HalfInteger n, const EulerAngles &e);

/// D^j matrix element evaluated on the group point itself (no angle chart),
/// so D(-a) = (-1)^{2j} D(a). Agrees with wigner_D at quaternion_to_euler(a)
/// up to that global sign.
std::complex<double> wigner_D_from_quaternion(HalfInteger j, HalfInteger m, HalfInteger n,
                                              const Quaternion &a);

/// Wigner 3j symbol via the Racah sum with log-factorials. Zero when
/// m1+m2+m3 != 0 or the triangle rule fails; throws on malformed (j, m)
/// pairs.
double wigner_3j(HalfInteger j1, HalfInteger j2, HalfInteger j3, HalfInteger m1, HalfInteger m2,
                 HalfInteger m3);

/// Clebsch-Gordan coefficient <j1 m1; j2 m2 | j3 m3>.
double clebsch_gordan(HalfInteger j1, HalfInteger m1, HalfInteger j2, HalfInteger m2,
                      HalfInteger j3, HalfInteger m3);

/// The (2j+1)x(2j+1) representation matrix of V in SU(2), basis ordered
/// |j, j> ... |j, -j>. Identity map at j = 1/2; homomorphic in V; the matrix
/// of euler_to_su2(e) equals the adjoint of the wigner_D matrix at e.
Eigen::MatrixXcd spin_representation(HalfInteger j, const SU2Matrix &v);

/// Same lift from the Cayley-Klein form of V (single source of truth for
/// quaternion, Euler, and matrix parameterizations).
Eigen::MatrixXcd spin_representation(HalfInteger j, const CayleyKlein &ck);

inline Eigen::MatrixXcd spin_representation(HalfInteger j, const Quaternion &a) {
    return spin_representation(j, cayley_klein_from_quaternion(a));
}

/// Columns D^l_{m 0} for every integer label l = 0..lmax at one group point,
/// each vector in basis order m = l..-l. Shares the power tables across
/// labels; used by the reconstruction node loops.
std::vector<Eigen::VectorXcd> wigner_D_axis_columns(int lmax, const CayleyKlein &ck);

/// Natural log of n!, from a table initialized once before first use.
double log_factorial(int n);

} // namespace spintomo
