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

#include "spintomo/density.hpp"

#include <cmath>

namespace spintomo {

namespace {
const std::complex<double> kI{0.0, 1.0};
}

const Eigen::Matrix2cd kPauliX = [] {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}();
const Eigen::Matrix2cd kPauliY = [] {
    Eigen::Matrix2cd m;
    m << 0, -kI, kI, 0;
    return m;
}();
const Eigen::Matrix2cd kPauliZ = [] {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}();

DensityMatrix DensityMatrix::create(HalfInteger j, const Eigen::MatrixXcd &matrix) {
    if (j.twice() < 0) {
        throw std::invalid_argument("DensityMatrix: negative spin");
    }
    if (matrix.rows() != dimension(j) || matrix.cols() != dimension(j)) {
        throw std::invalid_argument("DensityMatrix: matrix dimension does not match 2j+1");
    }
    DensityMatrix rho(j, matrix);
    rho.validate();
    return rho;
}

DensityMatrix DensityMatrix::unchecked(HalfInteger j, Eigen::MatrixXcd matrix) {
    return DensityMatrix(j, std::move(matrix));
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (matrix_ + matrix_.adjoint()));
    return solver.eigenvalues().minCoeff();
}

void DensityMatrix::validate(double tol, double eig_tol) const {
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
    }
    if (std::abs(matrix_.trace() - std::complex<double>(1.0, 0.0)) > tol) {
        throw std::invalid_argument("DensityMatrix: trace differs from 1");
    }
    if (min_eigenvalue() < -eig_tol) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
    }
}

DensityMatrix density_from_stokes(const StokesVector &s) {
    if (s.squared_norm() > 1.0 + kHermitianTol) {
        throw std::invalid_argument("density_from_stokes: |S| exceeds 1");
    }
    const Eigen::Matrix2cd m =
        0.5 * (Eigen::Matrix2cd::Identity() + s.sx * kPauliX + s.sy * kPauliY + s.sz * kPauliZ);
    return DensityMatrix::unchecked(HalfInteger::from_twice(1), m);
}

StokesVector stokes_from_density(const DensityMatrix &rho) {
    if (rho.j() != HalfInteger::from_twice(1)) {
        throw std::invalid_argument("stokes_from_density: state is not a qubit");
    }
    const Eigen::Matrix2cd &m = rho.matrix();
    return {(m * kPauliX).trace().real(), (m * kPauliY).trace().real(),
            (m * kPauliZ).trace().real()};
}

double purity_direct(const DensityMatrix &rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

double hs_distance(const DensityMatrix &rho1, const DensityMatrix &rho2) {
    if (rho1.j() != rho2.j()) {
        throw std::invalid_argument("hs_distance: states have different spin");
    }
    return (rho1.matrix() - rho2.matrix()).norm();
}

std::array<std::complex<double>, 4> quaternion_coefficients_of_qubit(const DensityMatrix &rho) {
    if (rho.j() != HalfInteger::from_twice(1)) {
        throw std::invalid_argument("quaternion_coefficients_of_qubit: state is not a qubit");
    }
    const Eigen::Matrix2cd &m = rho.matrix();
    // Projections onto the orthogonal basis {I, i sigma_x, i sigma_y, i sigma_z}.
    return {0.5 * m.trace(), -0.5 * kI * (kPauliX * m).trace(), -0.5 * kI * (kPauliY * m).trace(),
            -0.5 * kI * (kPauliZ * m).trace()};
}

DensityMatrix random_density(HalfInteger j, Rng &rng) {
    if (j.twice() <= 0) {
        throw std::invalid_argument("random_density: spin must be positive");
    }
    const int dim = dimension(j);
    Eigen::MatrixXcd g(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            g(r, c) = std::complex<double>(rng.normal(), rng.normal());
        }
    }
    Eigen::MatrixXcd m = g * g.adjoint();
    m /= m.trace().real();
    m = 0.5 * (m + m.adjoint());
    return DensityMatrix::unchecked(j, std::move(m));
}

} // namespace spintomo
