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

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "spintomo/half_integer.hpp"
#include "spintomo/random.hpp"

namespace spintomo {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kEigenvalueTol = 1e-10;

/// Spin-j density matrix, basis ordered |j, j> ... |j, -j>.
///
/// The checked factory enforces Hermiticity and unit trace within 1e-12 and
/// eigenvalues >= -1e-10 (quadrature-reconstructed states carry numerical
/// noise). Reconstruction routines use the unchecked path and leave validity
/// to the caller.
class DensityMatrix {
  public:
    static DensityMatrix create(HalfInteger j, const Eigen::MatrixXcd &matrix);
    static DensityMatrix unchecked(HalfInteger j, Eigen::MatrixXcd matrix);

    HalfInteger j() const { return j_; }
    int dim() const { return static_cast<int>(matrix_.rows()); }
    const Eigen::MatrixXcd &matrix() const { return matrix_; }

    std::complex<double> element(HalfInteger m_row, HalfInteger m_col) const {
        return matrix_(basis_index(j_, m_row), basis_index(j_, m_col));
    }

    double min_eigenvalue() const;

    /// Throws unless Hermitian/unit-trace within `tol` and eigenvalues are
    /// above -eig_tol.
    void validate(double tol = kHermitianTol, double eig_tol = kEigenvalueTol) const;

  private:
    DensityMatrix(HalfInteger j, Eigen::MatrixXcd matrix) : j_(j), matrix_(std::move(matrix)) {}

    HalfInteger j_;
    Eigen::MatrixXcd matrix_;
};

/// Bloch vector of a qubit, |S| <= 1.
struct StokesVector {
    double sx = 0.0;
    double sy = 0.0;
    double sz = 0.0;

    double squared_norm() const { return sx * sx + sy * sy + sz * sz; }
};

extern const Eigen::Matrix2cd kPauliX;
extern const Eigen::Matrix2cd kPauliY;
extern const Eigen::Matrix2cd kPauliZ;

/// rho = (I + S . sigma) / 2; throws when |S| > 1.
DensityMatrix density_from_stokes(const StokesVector &s);

/// S_k = Tr(rho sigma_k); requires j = 1/2.
StokesVector stokes_from_density(const DensityMatrix &rho);

/// Tr(rho^2).
double purity_direct(const DensityMatrix &rho);

/// Frobenius norm of rho1 - rho2; requires equal spin.
double hs_distance(const DensityMatrix &rho1, const DensityMatrix &rho2);

/// Coefficients (c0..c3) with rho = c0 e0 + c1 e1 + c2 e2 + c3 e3 in the
/// basis e_k = i sigma_k. For a valid state c0 = 1/2 and c_k = -(i/2) S_k.
/// Complex because a Hermitian matrix is not a real combination of e0..e3.
std::array<std::complex<double>, 4> quaternion_coefficients_of_qubit(const DensityMatrix &rho);

/// Full-rank-supporting random state: G G^dagger / Tr(G G^dagger) with G a
/// square matrix of independent standard complex normal entries.
DensityMatrix random_density(HalfInteger j, Rng &rng);

} // namespace spintomo
