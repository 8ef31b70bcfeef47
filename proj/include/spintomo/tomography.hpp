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

#include <functional>
#include <vector>

#include "spintomo/density.hpp"
#include "spintomo/quadrature.hpp"
#include "spintomo/rotations.hpp"
#include "spintomo/wigner.hpp"

namespace spintomo {

/// One measured point: probability of outcome m with the axis selected by
/// the (canonical) group parameter.
struct TomogramSample {
    HalfInteger m;
    Quaternion param;
    double value;
};

/// Sampled tomogram of a spin-j state.
struct SpinTomogram {
    HalfInteger j;
    std::vector<TomogramSample> samples;

    /// Values in [-1e-12, 1+1e-12]; for every parameter carrying all 2j+1
    /// outcomes, sum_m value = 1 within 1e-10.
    void validate() const;
};

/// Raised when a sample set cannot determine the state.
class RankError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using EulerEvaluator = std::function<double(HalfInteger m, double phi, double theta)>;
using GroupEvaluator = std::function<double(HalfInteger m, const Quaternion &a)>;

/// <m| V rho V^dagger |m> with V the spin-j lift of u. Real within 1e-12,
/// clamped into [0, 1] after a 1e-10 tolerance check.
double tomogram_value(const DensityMatrix &rho, const SU2Matrix &u, HalfInteger m);

/// Same with u = U(a); invariant under a -> -a.
double tomogram_quaternion(const DensityMatrix &rho, const Quaternion &a, HalfInteger m);

/// (1 + S . n(phi, theta)) / 2 for outcome +1/2.
double qubit_tomogram_closed_form(const StokesVector &s, double phi, double theta);

/// (1 + <S, R(a) k>) / 2 for outcome +1/2.
double qubit_tomogram_quaternion(const StokesVector &s, const Quaternion &a);

/// The (2j+1)x(2j+1) dual kernel: rho = sum_m int dn T(m, n) K_j(m, n) with
/// the normalized measure. Assembled from Wigner D elements and 3j-derived
/// tensor operators; the outcome index enters through the diagonal
/// tensor-operator weights.
Eigen::MatrixXcd reconstruction_kernel(HalfInteger j, HalfInteger m, const EulerAngles &e);
Eigen::MatrixXcd reconstruction_kernel(HalfInteger j, HalfInteger m, const Quaternion &a);

/// Kernel-based inversion over S^2 with the normalized measure dn / 4pi.
/// The result is Hermitized but not projected to positive matrices.
/// Rejects rules with order < 4j + 1.
DensityMatrix reconstruct_density_euler(const EulerEvaluator &tomogram, HalfInteger j,
                                        const QuadratureRule &rule);

/// Kernel-based inversion over S^3 with normalized Haar measure.
DensityMatrix reconstruct_density_quaternion(const GroupEvaluator &tomogram, HalfInteger j,
                                             const QuadratureRule &rule);

/// Minimum-norm least squares over the Hermitian unit-trace affine space;
/// no positivity projection. Throws RankError when the samples do not span
/// the state space.
DensityMatrix reconstruct_linear_inversion(const SpinTomogram &samples);

/// (2j+1) int dn [ sum_m T^2(m, n) - sum_{m=-j}^{j-1} T(m, n) T(m+1, n) ]
/// with normalized Haar measure; equals Tr(rho^2) for exact tomograms.
double purity_from_tomogram(const GroupEvaluator &tomogram, HalfInteger j,
                            const QuadratureRule &rule);

/// max over the grid of sqrt([T1 - T2]^2 / 2) at fixed outcome m; a lower
/// bound on the Hilbert-Schmidt distance for exact evaluators.
double hs_lower_bound(const GroupEvaluator &t1, const GroupEvaluator &t2, HalfInteger j,
                      HalfInteger m, const std::vector<Quaternion> &grid);

/// Exact evaluators for a known state (used by tests, the CLI, and the
/// bindings).
GroupEvaluator state_evaluator(const DensityMatrix &rho);
EulerEvaluator state_evaluator_euler(const DensityMatrix &rho);

/// Diagonal weights and tensor-operator matrices behind the kernel; exposed
/// for reuse by the reconstruction loops.
class TensorOperatorBasis {
  public:
    explicit TensorOperatorBasis(HalfInteger j);

    HalfInteger j() const { return j_; }
    int rank_count() const { return static_cast<int>(j_.twice()) + 1; } // labels 0..2j

    /// Orthonormal operator B_{l, mu}; entries vanish unless row - col = mu.
    const Eigen::MatrixXcd &op(int l, int mu) const {
        return ops_[static_cast<std::size_t>(l)][static_cast<std::size_t>(mu + l)];
    }

    /// Diagonal element (B_{l,0})_{mm}.
    double diagonal_weight(int l, HalfInteger m) const {
        return diag_[static_cast<std::size_t>(l)][static_cast<std::size_t>(basis_index(j_, m))];
    }

  private:
    HalfInteger j_;
    std::vector<std::vector<Eigen::MatrixXcd>> ops_; // [l][mu + l]
    std::vector<std::vector<double>> diag_;          // [l][basis index]
};

} // namespace spintomo
