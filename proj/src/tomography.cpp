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

#include "spintomo/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

namespace spintomo {

namespace {

constexpr double kValueTol = 1e-10;

int parity_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

double clamp_probability(double raw, const char *what) {
    if (raw < -kValueTol || raw > 1.0 + kValueTol) {
        throw std::runtime_error(std::string(what) + ": value " + std::to_string(raw) +
                                 " outside [0,1] beyond tolerance");
    }
    return std::clamp(raw, 0.0, 1.0);
}

double sandwich_probability(const DensityMatrix &rho, const Eigen::MatrixXcd &lift,
                            HalfInteger m) {
    require_projection(rho.j(), m, "tomogram outcome");
    const int idx = basis_index(rho.j(), m);
    const std::complex<double> v = (lift.row(idx) * rho.matrix() * lift.row(idx).adjoint())(0, 0);
    if (std::abs(v.imag()) > kHermitianTol) {
        throw std::runtime_error("tomogram value has imaginary part beyond 1e-12");
    }
    return clamp_probability(v.real(), "tomogram");
}

int min_order_for(HalfInteger j) { return static_cast<int>(2 * j.twice()) + 1; } // 4j + 1

void require_rule(const QuadratureRule &rule, QuadratureDomain domain, HalfInteger j,
                  const char *what) {
    if (rule.domain != domain) {
        throw std::invalid_argument(std::string(what) + ": rule has the wrong domain");
    }
    if (rule.order != 0 && rule.order < min_order_for(j)) {
        throw std::invalid_argument(std::string(what) + ": rule order " +
                                    std::to_string(rule.order) + " below required " +
                                    std::to_string(min_order_for(j)));
    }
    if (rule.size() == 0) {
        throw std::invalid_argument(std::string(what) + ": empty rule");
    }
}

} // namespace

void SpinTomogram::validate() const {
    std::map<std::array<long long, 4>, std::pair<double, int>> groups;
    for (const auto &s : samples) {
        require_projection(j, s.m, "SpinTomogram");
        if (s.value < -1e-12 || s.value > 1.0 + 1e-12) {
            throw std::invalid_argument("SpinTomogram: probability outside [0,1]");
        }
        const Quaternion q = s.param.canonical();
        const auto key = std::array<long long, 4>{
            std::llround(q.a0 * 1e9), std::llround(q.a1 * 1e9), std::llround(q.a2 * 1e9),
            std::llround(q.a3 * 1e9)};
        auto &[sum, count] = groups[key];
        sum += s.value;
        ++count;
    }
    for (const auto &[key, entry] : groups) {
        if (entry.second == dimension(j) && std::abs(entry.first - 1.0) > 1e-10) {
            throw std::invalid_argument("SpinTomogram: outcomes at a parameter do not sum to 1");
        }
    }
}

double tomogram_value(const DensityMatrix &rho, const SU2Matrix &u, HalfInteger m) {
    return sandwich_probability(rho, spin_representation(rho.j(), u), m);
}

double tomogram_quaternion(const DensityMatrix &rho, const Quaternion &a, HalfInteger m) {
    return sandwich_probability(rho, spin_representation(rho.j(), a), m);
}

double qubit_tomogram_closed_form(const StokesVector &s, double phi, double theta) {
    if (s.squared_norm() > 1.0 + kHermitianTol) {
        throw std::invalid_argument("qubit tomogram: |S| exceeds 1");
    }
    const Eigen::Vector3d n = direction_from_euler(phi, theta);
    return 0.5 * (1.0 + s.sx * n.x() + s.sy * n.y() + s.sz * n.z());
}

double qubit_tomogram_quaternion(const StokesVector &s, const Quaternion &a) {
    if (s.squared_norm() > 1.0 + kHermitianTol) {
        throw std::invalid_argument("qubit tomogram: |S| exceeds 1");
    }
    const Eigen::Vector3d n = direction_from_quaternion(a);
    return 0.5 * (1.0 + s.sx * n.x() + s.sy * n.y() + s.sz * n.z());
}

TensorOperatorBasis::TensorOperatorBasis(HalfInteger j) : j_(j) {
    if (j.twice() < 0) {
        throw std::invalid_argument("TensorOperatorBasis: negative spin");
    }
    const int dim = dimension(j);
    const int lmax = static_cast<int>(j.twice()); // 2j
    ops_.resize(static_cast<std::size_t>(lmax) + 1);
    diag_.resize(static_cast<std::size_t>(lmax) + 1);
    for (int l = 0; l <= lmax; ++l) {
        auto &row = ops_[static_cast<std::size_t>(l)];
        row.assign(static_cast<std::size_t>(2 * l) + 1, Eigen::MatrixXcd::Zero(dim, dim));
        for (int mu = -l; mu <= l; ++mu) {
            Eigen::MatrixXcd &b = row[static_cast<std::size_t>(mu + l)];
            for (int r = 0; r < dim; ++r) {
                const HalfInteger mr = projection_at(j, r);
                for (int c = 0; c < dim; ++c) {
                    const HalfInteger mc = projection_at(j, c);
                    if (mr.twice() - mc.twice() != 2 * mu) {
                        continue;
                    }
                    const double cg = clebsch_gordan(j, mr, j, -mc, HalfInteger::from_int(l),
                                                     HalfInteger::from_int(mu));
                    b(r, c) = parity_sign((j.twice() - mc.twice()) / 2) * cg;
                }
            }
        }
        auto &d = diag_[static_cast<std::size_t>(l)];
        d.resize(static_cast<std::size_t>(dim));
        const Eigen::MatrixXcd &b0 = row[static_cast<std::size_t>(l)];
        for (int r = 0; r < dim; ++r) {
            d[static_cast<std::size_t>(r)] = b0(r, r).real();
        }
    }
}

namespace {

// K_j(m, .) = sum_l (2l+1) b_l(m) sum_mu D^l_{mu 0}(.) B_{l mu}; `columns`
// holds the D^l_{mu 0} vectors at the evaluation point.
Eigen::MatrixXcd assemble_kernel(const TensorOperatorBasis &basis, HalfInteger m,
                                 const std::vector<Eigen::VectorXcd> &columns) {
    const HalfInteger j = basis.j();
    require_projection(j, m, "reconstruction_kernel");
    const int dim = dimension(j);
    Eigen::MatrixXcd kernel = Eigen::MatrixXcd::Zero(dim, dim);
    for (int l = 0; l < basis.rank_count(); ++l) {
        const double scale = (2.0 * l + 1.0) * basis.diagonal_weight(l, m);
        if (scale == 0.0) {
            continue;
        }
        const Eigen::VectorXcd &col = columns[static_cast<std::size_t>(l)];
        for (int mu = -l; mu <= l; ++mu) {
            kernel += scale * col(l - mu) * basis.op(l, mu);
        }
    }
    return kernel;
}

} // namespace

Eigen::MatrixXcd reconstruction_kernel(HalfInteger j, HalfInteger m, const EulerAngles &e) {
    const TensorOperatorBasis basis(j);
    const CayleyKlein ck = cayley_klein_from_euler({e.phi, e.theta, 0.0});
    return assemble_kernel(basis, m, wigner_D_axis_columns(static_cast<int>(j.twice()), ck));
}

Eigen::MatrixXcd reconstruction_kernel(HalfInteger j, HalfInteger m, const Quaternion &a) {
    const TensorOperatorBasis basis(j);
    const CayleyKlein ck = cayley_klein_from_quaternion(a);
    return assemble_kernel(basis, m, wigner_D_axis_columns(static_cast<int>(j.twice()), ck));
}

namespace {

// Shared node loop: per node, fold the outcome sum into per-rank weights
// t_l = sum_m T(m) b_l(m), then accumulate sum_{l,mu} (2l+1) t_l D^l_{mu0} B.
template <typename NodePoint, typename NodeEval>
DensityMatrix reconstruct_impl(HalfInteger j, const QuadratureRule &rule, NodePoint &&point,
                               NodeEval &&values) {
    const TensorOperatorBasis basis(j);
    const int dim = dimension(j);
    const int lmax = static_cast<int>(j.twice());

    detail::PairwiseSum<Eigen::MatrixXcd> sum;
    std::vector<double> tomo(static_cast<std::size_t>(dim));
    for (std::size_t node = 0; node < rule.size(); ++node) {
        values(node, tomo);
        const auto columns = wigner_D_axis_columns(lmax, point(node));
        Eigen::MatrixXcd contrib = Eigen::MatrixXcd::Zero(dim, dim);
        for (int l = 0; l <= lmax; ++l) {
            double tl = 0.0;
            for (int r = 0; r < dim; ++r) {
                tl += tomo[static_cast<std::size_t>(r)] *
                      basis.diagonal_weight(l, projection_at(j, r));
            }
            if (tl == 0.0) {
                continue;
            }
            const double scale = (2.0 * l + 1.0) * tl;
            const Eigen::VectorXcd &col = columns[static_cast<std::size_t>(l)];
            for (int mu = -l; mu <= l; ++mu) {
                contrib += scale * col(l - mu) * basis.op(l, mu);
            }
        }
        if (!contrib.allFinite()) {
            throw std::runtime_error("reconstruction: non-finite integrand value");
        }
        sum.add(rule.weights[node] * contrib);
    }
    Eigen::MatrixXcd rho = sum.total();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix::unchecked(j, std::move(rho));
}

} // namespace

DensityMatrix reconstruct_density_euler(const EulerEvaluator &tomogram, HalfInteger j,
                                        const QuadratureRule &rule) {
    require_rule(rule, QuadratureDomain::S2, j, "reconstruct_density_euler");
    const int dim = dimension(j);
    return reconstruct_impl(
        j, rule,
        [&](std::size_t node) {
            const auto &p = rule.sphere_nodes[node];
            return cayley_klein_from_euler({p.phi, p.theta, 0.0});
        },
        [&](std::size_t node, std::vector<double> &out) {
            const auto &p = rule.sphere_nodes[node];
            for (int r = 0; r < dim; ++r) {
                out[static_cast<std::size_t>(r)] = tomogram(projection_at(j, r), p.phi, p.theta);
            }
        });
}

DensityMatrix reconstruct_density_quaternion(const GroupEvaluator &tomogram, HalfInteger j,
                                             const QuadratureRule &rule) {
    require_rule(rule, QuadratureDomain::S3, j, "reconstruct_density_quaternion");
    const int dim = dimension(j);
    return reconstruct_impl(
        j, rule,
        [&](std::size_t node) { return cayley_klein_from_quaternion(rule.group_nodes[node]); },
        [&](std::size_t node, std::vector<double> &out) {
            for (int r = 0; r < dim; ++r) {
                out[static_cast<std::size_t>(r)] = tomogram(projection_at(j, r),
                                                            rule.group_nodes[node]);
            }
        });
}

DensityMatrix reconstruct_linear_inversion(const SpinTomogram &samples) {
    const HalfInteger j = samples.j;
    const int dim = dimension(j);
    const int unknowns = dim * dim - 1;
    if (samples.samples.empty()) {
        throw RankError("linear inversion: no samples");
    }

    // Real orthonormal basis of traceless Hermitian matrices built from the
    // tensor operators: B_{l,0} are real diagonal; mu > 0 pairs combine into
    // (B + B^dagger)/sqrt(2) and i(B - B^dagger)/sqrt(2).
    const TensorOperatorBasis basis(j);
    std::vector<Eigen::MatrixXcd> herm;
    herm.reserve(static_cast<std::size_t>(unknowns));
    for (int l = 1; l < basis.rank_count(); ++l) {
        herm.push_back(basis.op(l, 0));
        for (int mu = 1; mu <= l; ++mu) {
            const Eigen::MatrixXcd &b = basis.op(l, mu);
            herm.push_back((b + b.adjoint()) / std::sqrt(2.0));
            herm.push_back(std::complex<double>(0.0, 1.0) * (b - b.adjoint()) / std::sqrt(2.0));
        }
    }

    const auto rows = static_cast<Eigen::Index>(samples.samples.size());
    Eigen::MatrixXd design(rows, unknowns);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index k = 0; k < rows; ++k) {
        const auto &s = samples.samples[static_cast<std::size_t>(k)];
        require_projection(j, s.m, "linear inversion outcome");
        const Eigen::MatrixXcd lift = spin_representation(j, s.param);
        const int idx = basis_index(j, s.m);
        const Eigen::VectorXcd row = lift.row(idx).adjoint();
        // Projector V^dagger |m><m| V sandwiched against each basis matrix.
        for (int i = 0; i < unknowns; ++i) {
            design(k, i) = (row.adjoint() * herm[static_cast<std::size_t>(i)] * row)(0, 0).real();
        }
        rhs(k) = s.value - 1.0 / static_cast<double>(dim);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    if (svd.rank() < unknowns) {
        throw RankError("linear inversion: sample set is not informationally complete (rank " +
                        std::to_string(svd.rank()) + " of " + std::to_string(unknowns) + ")");
    }
    const Eigen::VectorXd x = svd.solve(rhs);

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
    for (int i = 0; i < unknowns; ++i) {
        rho += x(i) * herm[static_cast<std::size_t>(i)];
    }
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix::unchecked(j, std::move(rho));
}

double purity_from_tomogram(const GroupEvaluator &tomogram, HalfInteger j,
                            const QuadratureRule &rule) {
    require_rule(rule, QuadratureDomain::S3, j, "purity_from_tomogram");
    const int dim = dimension(j);
    const double integral = integrate_s3(rule, [&](const Quaternion &a) {
        double squares = 0.0;
        double neighbors = 0.0;
        double prev = 0.0;
        for (int r = 0; r < dim; ++r) {
            const double t = tomogram(projection_at(j, r), a);
            squares += t * t;
            if (r > 0) {
                neighbors += prev * t;
            }
            prev = t;
        }
        return squares - neighbors;
    });
    return static_cast<double>(dim) * integral;
}

double hs_lower_bound(const GroupEvaluator &t1, const GroupEvaluator &t2, HalfInteger j,
                      HalfInteger m, const std::vector<Quaternion> &grid) {
    require_projection(j, m, "hs_lower_bound");
    if (grid.empty()) {
        throw std::invalid_argument("hs_lower_bound: empty grid");
    }
    double best = 0.0;
    for (const Quaternion &a : grid) {
        const double delta = t1(m, a) - t2(m, a);
        best = std::max(best, 0.5 * delta * delta);
    }
    return std::sqrt(best);
}

GroupEvaluator state_evaluator(const DensityMatrix &rho) {
    // Memoize the spin-j lift: callers ask for every outcome at the same
    // parameter in a row. The returned closure is not thread-safe.
    struct Cache {
        bool filled = false;
        Quaternion key;
        Eigen::MatrixXcd lift;
    };
    auto cache = std::make_shared<Cache>();
    return [rho, cache](HalfInteger m, const Quaternion &a) {
        if (!cache->filled || cache->key.a0 != a.a0 || cache->key.a1 != a.a1 ||
            cache->key.a2 != a.a2 || cache->key.a3 != a.a3) {
            cache->lift = spin_representation(rho.j(), a);
            cache->key = a;
            cache->filled = true;
        }
        const int idx = basis_index(rho.j(), m);
        const std::complex<double> v =
            (cache->lift.row(idx) * rho.matrix() * cache->lift.row(idx).adjoint())(0, 0);
        return clamp_probability(v.real(), "tomogram");
    };
}

EulerEvaluator state_evaluator_euler(const DensityMatrix &rho) {
    return [rho](HalfInteger m, double phi, double theta) {
        return tomogram_value(rho, euler_to_su2({phi, theta, 0.0}), m);
    };
}

} // namespace spintomo
