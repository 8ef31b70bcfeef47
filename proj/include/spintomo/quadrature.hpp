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

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "spintomo/quaternion.hpp"
#include "spintomo/random.hpp"

namespace spintomo {

enum class QuadratureDomain { S2, S3 };

struct SphereNode {
    double phi;
    double theta;
};

/// Normalized integration rule (weights sum to 1) over the sphere S^2 or the
/// group S^3 with Haar measure. S^2 rules carry (phi, theta) nodes; S^3 rules
/// carry canonical unit quaternions. `order` is the band-limit guarantee:
/// spherical-harmonic degree for S^2, twice the largest exactly integrated
/// representation label for S^3 (0 for Monte Carlo rules).
struct QuadratureRule {
    QuadratureDomain domain;
    std::vector<SphereNode> sphere_nodes;  // S2 only
    std::vector<Quaternion> group_nodes;   // S3 only
    std::vector<double> weights;
    int order;

    std::size_t size() const { return weights.size(); }
};

/// Gauss-Legendre with L nodes in cos(theta) times 2L equispaced nodes in
/// phi; exact for spherical-harmonic content of degree <= 2L-1.
QuadratureRule product_rule_s2(int L);

/// Haar product rule in ZYZ coordinates: Gauss-Legendre in cos(theta),
/// equispaced phi and psi over the full 4pi group period. Exact for matrix
/// elements of representations with label <= L - 1/2. Nodes are emitted as
/// unit quaternions so callers never see the angle chart.
QuadratureRule product_rule_s3(int L);

/// N Haar samples with uniform weights 1/N; statistical error O(N^{-1/2}).
QuadratureRule monte_carlo_rule_s3(int N, Rng &rng);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double> &nodes, std::vector<double> &weights);

namespace detail {

inline bool value_is_finite(double v) { return std::isfinite(v); }
inline bool value_is_finite(const std::complex<double> &v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}
template <typename Derived> bool value_is_finite(const Eigen::MatrixBase<Derived> &v) {
    return v.allFinite();
}

/// Streaming pairwise summation: deterministic for a fixed term order, with
/// O(log n) partials.
template <typename T> class PairwiseSum {
  public:
    void add(T value) {
        std::size_t level = 0;
        while (level < filled_.size() && filled_[level]) {
            value = partial_[level] + value;
            filled_[level] = false;
            ++level;
        }
        if (level == filled_.size()) {
            partial_.push_back(value);
            filled_.push_back(true);
        } else {
            partial_[level] = value;
            filled_[level] = true;
        }
        ++count_;
    }

    bool empty() const { return count_ == 0; }

    T total() const {
        if (count_ == 0) {
            throw std::logic_error("PairwiseSum: no terms");
        }
        bool seeded = false;
        T acc{};
        for (std::size_t level = 0; level < filled_.size(); ++level) {
            if (!filled_[level]) {
                continue;
            }
            if (!seeded) {
                acc = partial_[level];
                seeded = true;
            } else {
                acc = acc + partial_[level];
            }
        }
        return acc;
    }

  private:
    std::vector<T> partial_;
    std::vector<bool> filled_;
    std::size_t count_ = 0;
};

} // namespace detail

/// Weighted pairwise-summed reduction of f over an S^2 rule; f(phi, theta).
/// Non-finite values raise std::runtime_error.
template <typename F> auto integrate_s2(const QuadratureRule &rule, F &&f) {
    if (rule.domain != QuadratureDomain::S2) {
        throw std::invalid_argument("integrate_s2: rule domain is not S2");
    }
    using Value = decltype(f(0.0, 0.0));
    detail::PairwiseSum<Value> sum;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        Value v = f(rule.sphere_nodes[i].phi, rule.sphere_nodes[i].theta);
        if (!detail::value_is_finite(v)) {
            throw std::runtime_error("integrate_s2: non-finite integrand value");
        }
        sum.add(rule.weights[i] * v);
    }
    return sum.total();
}

/// Weighted pairwise-summed reduction of f over an S^3 rule; f(quaternion).
template <typename F> auto integrate_s3(const QuadratureRule &rule, F &&f) {
    if (rule.domain != QuadratureDomain::S3) {
        throw std::invalid_argument("integrate_s3: rule domain is not S3");
    }
    using Value = decltype(f(Quaternion{}));
    detail::PairwiseSum<Value> sum;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        Value v = f(rule.group_nodes[i]);
        if (!detail::value_is_finite(v)) {
            throw std::runtime_error("integrate_s3: non-finite integrand value");
        }
        sum.add(rule.weights[i] * v);
    }
    return sum.total();
}

} // namespace spintomo
