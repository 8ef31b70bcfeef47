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

#include <doctest.h>

#include <map>
#include <numbers>

#include "spintomo/wigner.hpp"

using namespace spintomo;

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI{0.0, 1.0};

HalfInteger h(int twice) { return HalfInteger::from_twice(twice); }

// --- Oracle 1: small-d via the matrix exponential of the y-generator. ---
// J_y = (J_+ - J_-) / (2i) from the ladder matrix elements; d = exp(-i b J_y)
// through the eigendecomposition of the Hermitian J_y.
Eigen::MatrixXcd jy_generator(HalfInteger j) {
    const int dim = dimension(j);
    Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(dim, dim);
    for (int c = 1; c < dim; ++c) {
        const double m = projection_at(j, c).value();
        const double jj = j.value();
        jp(c - 1, c) = std::sqrt(jj * (jj + 1.0) - m * (m + 1.0));
    }
    const Eigen::MatrixXcd jm = jp.adjoint();
    return (jp - jm) / (2.0 * kI);
}

Eigen::MatrixXcd small_d_oracle(HalfInteger j, double beta) {
    const Eigen::MatrixXcd jy = jy_generator(j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(jy);
    const Eigen::VectorXd ev = es.eigenvalues();
    Eigen::MatrixXcd phases = Eigen::MatrixXcd::Zero(ev.size(), ev.size());
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        phases(k, k) = std::polar(1.0, -beta * ev(k));
    }
    return es.eigenvectors() * phases * es.eigenvectors().adjoint();
}

Eigen::MatrixXcd small_d_matrix(HalfInteger j, double beta) {
    const int dim = dimension(j);
    Eigen::MatrixXcd d(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            d(r, c) = wigner_small_d(j, projection_at(j, r), projection_at(j, c), beta);
        }
    }
    return d;
}

Eigen::MatrixXcd wigner_D_matrix(HalfInteger j, const EulerAngles &e) {
    const int dim = dimension(j);
    Eigen::MatrixXcd d(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            d(r, c) = wigner_D(j, projection_at(j, r), projection_at(j, c), e);
        }
    }
    return d;
}

Eigen::MatrixXcd wigner_D_matrix_quat(HalfInteger j, const Quaternion &a) {
    const int dim = dimension(j);
    Eigen::MatrixXcd d(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            d(r, c) = wigner_D_from_quaternion(j, projection_at(j, r), projection_at(j, c), a);
        }
    }
    return d;
}

// --- Oracle 2: Clebsch-Gordan coefficients by the lowering recursion. ---
// Start from the stretched state, lower with J_- = J1_- + J2_-, and obtain
// each lower-j3 top state by orthogonalization with the Condon-Shortley sign.
class CgOracle {
  public:
    CgOracle(HalfInteger j1, HalfInteger j2) : j1_(j1), j2_(j2), d1_(dimension(j1)),
                                               d2_(dimension(j2)) {
        const int jmax = static_cast<int>(j1.twice() + j2.twice());
        const int jmin = std::abs(static_cast<int>(j1.twice() - j2.twice()));
        for (int tj3 = jmax; tj3 >= jmin; tj3 -= 2) {
            const HalfInteger j3 = h(tj3);
            Eigen::VectorXcd top = top_state(j3);
            Eigen::VectorXcd state = top;
            store(j3, j3, state);
            for (int tm = tj3 - 2; tm >= -tj3; tm -= 2) {
                state = lower(state, h(tm + 2), j3);
                store(j3, h(tm), state);
            }
        }
    }

    double value(HalfInteger m1, HalfInteger m2, HalfInteger j3, HalfInteger m3) const {
        const auto it = table_.find({j3.twice(), m3.twice()});
        if (it == table_.end()) {
            return 0.0;
        }
        const std::complex<double> c = it->second(index(m1, m2));
        return c.real();
    }

  private:
    Eigen::Index index(HalfInteger m1, HalfInteger m2) const {
        return basis_index(j1_, m1) * d2_ + basis_index(j2_, m2);
    }

    void store(HalfInteger j3, HalfInteger m3, const Eigen::VectorXcd &state) {
        table_[{j3.twice(), m3.twice()}] = state;
    }

    // J_- acting in the product basis, renormalized to |j3, m3 - 1>.
    Eigen::VectorXcd lower(const Eigen::VectorXcd &state, HalfInteger m_from,
                           HalfInteger j3) const {
        Eigen::VectorXcd out = Eigen::VectorXcd::Zero(d1_ * d2_);
        for (int i1 = 0; i1 < d1_; ++i1) {
            for (int i2 = 0; i2 < d2_; ++i2) {
                const std::complex<double> c = state(i1 * d2_ + i2);
                if (c == 0.0) {
                    continue;
                }
                const double m1 = projection_at(j1_, i1).value();
                const double m2 = projection_at(j2_, i2).value();
                const double jj1 = j1_.value(), jj2 = j2_.value();
                if (i1 + 1 < d1_) {
                    out((i1 + 1) * d2_ + i2) += c * std::sqrt(jj1 * (jj1 + 1) - m1 * (m1 - 1));
                }
                if (i2 + 1 < d2_) {
                    out(i1 * d2_ + (i2 + 1)) += c * std::sqrt(jj2 * (jj2 + 1) - m2 * (m2 - 1));
                }
            }
        }
        const double jj3 = j3.value(), mm = m_from.value();
        return out / std::sqrt(jj3 * (jj3 + 1) - mm * (mm - 1));
    }

    // Unique unit vector in the m3 = j3 slice orthogonal to all higher-j3
    // states, with <j1 j1; j2 j3-j1 | j3 j3> > 0.
    Eigen::VectorXcd top_state(HalfInteger j3) const {
        std::vector<Eigen::VectorXcd> higher;
        for (const auto &[k, v] : table_) {
            if (k.second == j3.twice() && k.first > j3.twice()) {
                higher.push_back(v);
            }
        }
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d1_ * d2_);
        // Seed with any vector in the slice, Gram-Schmidt against higher tops.
        for (int i1 = 0; i1 < d1_; ++i1) {
            for (int i2 = 0; i2 < d2_; ++i2) {
                if (projection_at(j1_, i1).twice() + projection_at(j2_, i2).twice() ==
                    j3.twice()) {
                    Eigen::VectorXcd cand = Eigen::VectorXcd::Zero(d1_ * d2_);
                    cand(i1 * d2_ + i2) = 1.0;
                    for (const auto &hv : higher) {
                        cand -= hv.dot(cand) * hv;
                    }
                    if (cand.norm() > 1e-8) {
                        v = cand / cand.norm();
                        break;
                    }
                }
            }
            if (v.norm() > 0.5) {
                break;
            }
        }
        // Condon-Shortley: the m1 = j1 component is positive.
        const Eigen::Index cs = index(j1_, j3 - j1_);
        if (v(cs).real() < 0.0) {
            v = -v;
        }
        return v;
    }

    HalfInteger j1_, j2_;
    int d1_, d2_;
    std::map<std::pair<std::int64_t, std::int64_t>, Eigen::VectorXcd> table_;
};

} // namespace

TEST_CASE("small-d pinned values") {
    CHECK(wigner_small_d(h(0), h(0), h(0), 1.234) == 1.0);
    for (double beta : {0.0, 0.3, 1.1, 2.9}) {
        CHECK(std::abs(wigner_small_d(h(1), h(1), h(1), beta) - std::cos(beta / 2)) < 1e-14);
        CHECK(std::abs(wigner_small_d(h(1), h(1), h(-1), beta) + std::sin(beta / 2)) < 1e-14);
        CHECK(std::abs(wigner_small_d(h(1), h(-1), h(1), beta) - std::sin(beta / 2)) < 1e-14);
        CHECK(std::abs(wigner_small_d(h(2), h(0), h(0), beta) - std::cos(beta)) < 1e-14);
    }
    CHECK_THROWS_AS(wigner_small_d(h(1), h(3), h(1), 0.5), std::invalid_argument);
    CHECK_THROWS_AS(wigner_small_d(h(1), h(0), h(1), 0.5), std::invalid_argument);
}

TEST_CASE("small-d agrees with the generator exponential for all j <= 3") {
    for (int tj = 0; tj <= 6; ++tj) {
        for (double beta : {0.1, 0.7, 1.9, 3.0}) {
            const Eigen::MatrixXcd oracle = small_d_oracle(h(tj), beta);
            const Eigen::MatrixXcd mine = small_d_matrix(h(tj), beta);
            CHECK((mine - oracle).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("small-d symmetry and unitarity") {
    Rng rng(21);
    for (int tj = 1; tj <= 6; ++tj) {
        const HalfInteger j = h(tj);
        const double beta = kPi * rng.uniform01();
        const Eigen::MatrixXcd d = small_d_matrix(j, beta);
        CHECK((d * d.transpose() - Eigen::MatrixXcd::Identity(d.rows(), d.rows()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
        for (int r = 0; r < dimension(j); ++r) {
            for (int c = 0; c < dimension(j); ++c) {
                const HalfInteger m = projection_at(j, r), n = projection_at(j, c);
                const int sgn = ((m.twice() - n.twice()) / 2) % 2 == 0 ? 1 : -1;
                CHECK(std::abs(d(r, c) - static_cast<double>(sgn) * d(c, r)) < 1e-12);
                CHECK(std::abs(d(r, c) -
                               d(dimension(j) - 1 - c, dimension(j) - 1 - r)) < 1e-12);
            }
        }
    }
}

TEST_CASE("wigner_D at zero angles and against euler_to_su2") {
    for (int tj : {1, 2, 3}) {
        const HalfInteger j = h(tj);
        const Eigen::MatrixXcd d = wigner_D_matrix(j, {0, 0, 0});
        CHECK((d - Eigen::MatrixXcd::Identity(d.rows(), d.rows())).cwiseAbs().maxCoeff() <
              1e-14);
    }
    // Convention map: the j = 1/2 D-matrix is the adjoint of the paper-form
    // SU(2) matrix at the same angles.
    Rng rng(22);
    for (int i = 0; i < 100; ++i) {
        const EulerAngles e{2 * kPi * rng.uniform01(), kPi * rng.uniform01(),
                            kPi * (2 * rng.uniform01() - 1)};
        const Eigen::MatrixXcd d = wigner_D_matrix(h(1), e);
        CHECK((d - Eigen::MatrixXcd(euler_to_su2(e).adjoint())).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("wigner_D unitarity for j <= 3") {
    Rng rng(23);
    for (int tj = 1; tj <= 6; ++tj) {
        const EulerAngles e{2 * kPi * rng.uniform01(), kPi * rng.uniform01(),
                            kPi * (2 * rng.uniform01() - 1)};
        const Eigen::MatrixXcd d = wigner_D_matrix(h(tj), e);
        CHECK((d * d.adjoint() - Eigen::MatrixXcd::Identity(d.rows(), d.rows()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
    }
}

TEST_CASE("spin representation is a homomorphism") {
    Rng rng(24);
    for (int tj = 1; tj <= 4; ++tj) {
        const HalfInteger j = h(tj);
        for (int i = 0; i < 25; ++i) {
            const SU2Matrix u1 = su2_from_quaternion(haar_sample(rng));
            const SU2Matrix u2 = su2_from_quaternion(haar_sample(rng));
            const Eigen::MatrixXcd lhs = spin_representation(j, SU2Matrix(u1 * u2));
            const Eigen::MatrixXcd rhs = spin_representation(j, u1) * spin_representation(j, u2);
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("wigner_D_from_quaternion") {
    const Quaternion e0{1, 0, 0, 0};
    CHECK(std::abs(wigner_D_from_quaternion(h(1), h(1), h(1), e0) - 1.0) < 1e-15);
    CHECK(std::abs(wigner_D_from_quaternion(h(1), h(1), h(-1), e0)) < 1e-15);

    Rng rng(25);
    for (int i = 0; i < 100; ++i) {
        const Quaternion a = haar_sample(rng);
        const EulerDecomposition d = quaternion_to_euler(a);
        if (d.degenerate) {
            continue;
        }
        for (int tj : {1, 2, 3, 4}) {
            const Eigen::MatrixXcd via_group = wigner_D_matrix_quat(h(tj), a);
            const Eigen::MatrixXcd via_euler = wigner_D_matrix(h(tj), d.angles);
            const double direct = (via_group - via_euler).cwiseAbs().maxCoeff();
            const double flipped = (via_group + via_euler).cwiseAbs().maxCoeff();
            if (tj % 2 == 0) {
                CHECK(direct < 1e-10); // integer spin: chart sign is invisible
            } else {
                CHECK(std::min(direct, flipped) < 1e-10);
            }
        }
        // Double-cover sign of the representation.
        for (int tj : {1, 2}) {
            const Eigen::MatrixXcd plus = wigner_D_matrix_quat(h(tj), a);
            const Eigen::MatrixXcd minus = wigner_D_matrix_quat(h(tj), -a);
            const double sign = (tj % 2 == 0) ? 1.0 : -1.0;
            CHECK((plus - sign * minus).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("3j pinned values and selection rules") {
    // (j j 0; m -m 0) = (-1)^{j-m} / sqrt(2j+1)
    CHECK(std::abs(wigner_3j(h(1), h(1), h(0), h(1), h(-1), h(0)) - 1.0 / std::sqrt(2.0)) <
          1e-14);
    for (int tj = 1; tj <= 6; ++tj) {
        for (int tm = -tj; tm <= tj; tm += 2) {
            const double expect =
                (((tj - tm) / 2) % 2 == 0 ? 1.0 : -1.0) / std::sqrt(tj + 1.0);
            CHECK(std::abs(wigner_3j(h(tj), h(tj), h(0), h(tm), h(-tm), h(0)) - expect) < 1e-13);
        }
    }
    // Violated m-sum and triangle rule give zero.
    CHECK(wigner_3j(h(2), h(2), h(2), h(2), h(2), h(2)) == 0.0);
    CHECK(wigner_3j(h(2), h(2), h(8), h(0), h(0), h(0)) == 0.0);
    CHECK(wigner_3j(h(1), h(1), h(1), h(1), h(-1), h(0)) == 0.0); // odd perimeter
    CHECK_THROWS_AS(wigner_3j(h(1), h(1), h(0), h(3), h(-3), h(0)), std::invalid_argument);
}

TEST_CASE("3j orthogonality for quantum numbers up to 3") {
    for (int tj1 = 0; tj1 <= 6; ++tj1) {
        for (int tj2 = 0; tj2 <= 6; ++tj2) {
            // sum over m1, m2 of (2j3+1) [3j]^2 = 1 for every admissible j3.
            for (int tj3 = std::abs(tj1 - tj2); tj3 <= tj1 + tj2; tj3 += 2) {
                double total = 0.0;
                for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                    for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
                        const int tm3 = -(tm1 + tm2);
                        if (std::abs(tm3) > tj3) {
                            continue;
                        }
                        const double w =
                            wigner_3j(h(tj1), h(tj2), h(tj3), h(tm1), h(tm2), h(tm3));
                        total += (tj3 + 1.0) * w * w;
                    }
                }
                CHECK(std::abs(total - 1.0) < 1e-10);
            }
        }
    }
}

TEST_CASE("clebsch_gordan matches the lowering-recursion oracle") {
    for (int tj1 : {1, 2, 3}) {
        for (int tj2 : {1, 2, 3}) {
            const CgOracle oracle{h(tj1), h(tj2)};
            for (int tj3 = std::abs(tj1 - tj2); tj3 <= tj1 + tj2; tj3 += 2) {
                for (int tm3 = -tj3; tm3 <= tj3; tm3 += 2) {
                    for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                        const int tm2 = tm3 - tm1;
                        if (std::abs(tm2) > tj2) {
                            continue;
                        }
                        const double mine =
                            clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tj3), h(tm3));
                        const double ref = oracle.value(h(tm1), h(tm2), h(tj3), h(tm3));
                        CHECK(std::abs(mine - ref) < 1e-12);
                    }
                }
            }
        }
    }
}
