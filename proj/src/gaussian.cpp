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

#include "spintomo/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spintomo {

namespace {
constexpr double kDetTol = 1e-12;
}

void GaussianState::validate() const {
    if (!(cov_qq > 0.0) || !(cov_pp > 0.0)) {
        throw std::invalid_argument("GaussianState: quadrature variances must be positive");
    }
    if (cov_qq * cov_pp - cov_qp * cov_qp < 0.25 - kDetTol) {
        throw std::invalid_argument("GaussianState: covariance violates the uncertainty bound");
    }
}

double symplectic_tomogram_gaussian(const GaussianState &s, double q_value, double mu,
                                    double eta) {
    s.validate();
    if (mu == 0.0 && eta == 0.0) {
        throw std::invalid_argument("symplectic tomogram: (mu, eta) must not both vanish");
    }
    const double mean = mu * s.mean_q + eta * s.mean_p;
    const double var = mu * mu * s.cov_qq + 2.0 * mu * eta * s.cov_qp + eta * eta * s.cov_pp;
    const double z = q_value - mean;
    return std::exp(-0.5 * z * z / var) / std::sqrt(2.0 * std::numbers::pi * var);
}

double optical_tomogram_gaussian(const GaussianState &s, double q_value, double theta) {
    return symplectic_tomogram_gaussian(s, q_value, std::cos(theta), std::sin(theta));
}

std::pair<double, double> quadrature_moments(const GaussianState &s, double theta) {
    s.validate();
    const double mu = std::cos(theta);
    const double eta = std::sin(theta);
    const double mean = mu * s.mean_q + eta * s.mean_p;
    const double var = mu * mu * s.cov_qq + 2.0 * mu * eta * s.cov_qp + eta * eta * s.cov_pp;
    return {mean, std::sqrt(var)};
}

std::vector<double> homodyne_sample(const GaussianState &s, double theta, int count, Rng &rng) {
    if (count < 1) {
        throw std::invalid_argument("homodyne_sample: count must be >= 1");
    }
    const auto [mean, sigma] = quadrature_moments(s, theta);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        out.push_back(mean + sigma * normal_quantile(rng.uniform01_open()));
    }
    return out;
}

Eigen::Matrix2d symplectic_matrix(const SymplecticParams &p) {
    if (std::abs(p.determinant() - 1.0) > kDetTol) {
        throw std::invalid_argument("symplectic_matrix: determinant differs from 1");
    }
    Eigen::Matrix2d m;
    m << p.mu, p.eta, p.eta_acc, p.mu_acc;
    return m;
}

GaussianState transform_gaussian(const GaussianState &s, const SymplecticParams &p) {
    s.validate();
    const Eigen::Matrix2d m = symplectic_matrix(p);
    const Eigen::Vector2d mean = m * Eigen::Vector2d(s.mean_q, s.mean_p);
    Eigen::Matrix2d cov;
    cov << s.cov_qq, s.cov_qp, s.cov_qp, s.cov_pp;
    cov = (m * cov * m.transpose()).eval();
    return {mean.x(), mean.y(), cov(0, 0), cov(0, 1), cov(1, 1)};
}

} // namespace spintomo
