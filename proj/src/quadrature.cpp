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

#include "spintomo/quadrature.hpp"

#include <numbers>

#include "spintomo/rotations.hpp"

namespace spintomo {

namespace {
constexpr double kPi = std::numbers::pi;

void normalize_weights(QuadratureRule &rule) {
    double total = 0.0;
    for (double w : rule.weights) {
        total += w;
    }
    for (double &w : rule.weights) {
        w /= total;
    }
}
} // namespace

void gauss_legendre(int n, std::vector<double> &nodes, std::vector<double> &weights) {
    if (n < 1) {
        throw std::invalid_argument("gauss_legendre: need at least one node");
    }
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    // Newton iteration from the Chebyshev-based initial guess.
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p_prev = 1.0; // P_0
            double p = x;        // P_1
            for (int k = 2; k <= n; ++k) {
                const double p_next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
                p_prev = p;
                p = p_next;
            }
            dp = n * (x * p - p_prev) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                break;
            }
        }
        nodes[static_cast<std::size_t>(i)] = x;
        weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

QuadratureRule product_rule_s2(int L) {
    if (L < 1) {
        throw std::invalid_argument("product_rule_s2: L must be >= 1");
    }
    std::vector<double> gl_nodes, gl_weights;
    gauss_legendre(L, gl_nodes, gl_weights);

    QuadratureRule rule;
    rule.domain = QuadratureDomain::S2;
    rule.order = 2 * L - 1;
    const int nphi = 2 * L;
    rule.sphere_nodes.reserve(static_cast<std::size_t>(L * nphi));
    rule.weights.reserve(static_cast<std::size_t>(L * nphi));
    for (int it = 0; it < L; ++it) {
        const double theta = std::acos(gl_nodes[static_cast<std::size_t>(it)]);
        const double wt = gl_weights[static_cast<std::size_t>(it)] / 2.0;
        for (int ip = 0; ip < nphi; ++ip) {
            const double phi = 2.0 * kPi * static_cast<double>(ip) / static_cast<double>(nphi);
            rule.sphere_nodes.push_back({phi, theta});
            rule.weights.push_back(wt / static_cast<double>(nphi));
        }
    }
    normalize_weights(rule);
    return rule;
}

QuadratureRule product_rule_s3(int L) {
    if (L < 1) {
        throw std::invalid_argument("product_rule_s3: L must be >= 1");
    }
    std::vector<double> gl_nodes, gl_weights;
    gauss_legendre(L, gl_nodes, gl_weights);

    QuadratureRule rule;
    rule.domain = QuadratureDomain::S3;
    rule.order = 2 * L - 1;
    const int nphi = 2 * L;
    const int npsi = 2 * L;
    rule.group_nodes.reserve(static_cast<std::size_t>(L * nphi * npsi));
    rule.weights.reserve(static_cast<std::size_t>(L * nphi * npsi));
    // phi and psi run over the full 4pi period of the double cover, so the
    // trapezoid sums kill every phase e^{-i m phi} with 2|m| < 2L exactly,
    // half-integer labels included. Nodes keep the sign the chart gives them;
    // collapsing to a hemisphere would break exactness for odd integrands.
    for (int it = 0; it < L; ++it) {
        const double theta = std::acos(gl_nodes[static_cast<std::size_t>(it)]);
        const double wt = gl_weights[static_cast<std::size_t>(it)] / 2.0;
        for (int ip = 0; ip < nphi; ++ip) {
            const double phi = 4.0 * kPi * static_cast<double>(ip) / static_cast<double>(nphi);
            for (int is = 0; is < npsi; ++is) {
                const double psi = 4.0 * kPi * static_cast<double>(is) / static_cast<double>(npsi);
                const Quaternion q = quaternion_from_euler({phi, theta, psi}).normalized();
                rule.group_nodes.push_back(q);
                rule.weights.push_back(wt / static_cast<double>(nphi * npsi));
            }
        }
    }
    normalize_weights(rule);
    return rule;
}

QuadratureRule monte_carlo_rule_s3(int N, Rng &rng) {
    if (N < 1) {
        throw std::invalid_argument("monte_carlo_rule_s3: N must be >= 1");
    }
    QuadratureRule rule;
    rule.domain = QuadratureDomain::S3;
    rule.order = 0;
    rule.group_nodes.reserve(static_cast<std::size_t>(N));
    rule.weights.assign(static_cast<std::size_t>(N), 1.0 / static_cast<double>(N));
    for (int i = 0; i < N; ++i) {
        rule.group_nodes.push_back(haar_sample(rng));
    }
    return rule;
}

} // namespace spintomo
