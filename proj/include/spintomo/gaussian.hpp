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

#include <vector>

#include <Eigen/Dense>

#include "spintomo/random.hpp"

namespace spintomo {

/// First and second moments of (q, p) in hbar = 1 units; the vacuum has
/// cov_qq = cov_pp = 1/2 and the uncertainty bound is det(cov) >= 1/4.
struct GaussianState {
    double mean_q = 0.0;
    double mean_p = 0.0;
    double cov_qq = 0.5;
    double cov_qp = 0.0;
    double cov_pp = 0.5;

    void validate() const;

    static GaussianState vacuum() { return {}; }
};

/// Parameters (mu, eta, mu', eta') of a linear canonical transformation with
/// unit determinant mu mu' - eta eta' = 1.
struct SymplecticParams {
    double mu = 1.0;
    double eta = 0.0;
    double mu_acc = 1.0;
    double eta_acc = 0.0;

    double determinant() const { return mu * mu_acc - eta * eta_acc; }
};

/// Probability density of the observable mu q + eta p at value Q; for a
/// Gaussian state this is the normal density with mean mu <q> + eta <p> and
/// variance mu^2 C_qq + 2 mu eta C_qp + eta^2 C_pp. Throws on (mu, eta) = 0.
double symplectic_tomogram_gaussian(const GaussianState &s, double q_value, double mu, double eta);

/// Restriction to the circle mu = cos(theta), eta = sin(theta) measured by
/// balanced homodyne detection.
double optical_tomogram_gaussian(const GaussianState &s, double q_value, double theta);

/// Mean and standard deviation of the rotated quadrature at angle theta.
std::pair<double, double> quadrature_moments(const GaussianState &s, double theta);

/// count i.i.d. draws from the optical tomogram at angle theta, by inverse
/// transform on the analytic normal law.
std::vector<double> homodyne_sample(const GaussianState &s, double theta, int count, Rng &rng);

/// [[mu, eta], [eta', mu']]; throws unless the determinant is 1 within 1e-12.
Eigen::Matrix2d symplectic_matrix(const SymplecticParams &p);

/// Pushforward of the state under the canonical transformation: means move
/// by the matrix, the covariance by congruence. Preserves det(cov).
GaussianState transform_gaussian(const GaussianState &s, const SymplecticParams &p);

} // namespace spintomo
