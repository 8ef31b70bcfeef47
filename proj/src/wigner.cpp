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

#include "spintomo/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace spintomo {

namespace {

constexpr int kMaxFactorial = 256;

const std::vector<double> &log_factorial_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(kMaxFactorial + 1, 0.0);
        for (int n = 1; n <= kMaxFactorial; ++n) {
            t[n] = t[n - 1] + std::log(static_cast<double>(n));
        }
        return t;
    }();
    return table;
}

int parity_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

// Integer from an even twice-value; the quantum-number arithmetic below only
// produces even combinations.
int half_twice(std::int64_t twice) { return static_cast<int>(twice / 2); }

// Powers z^0..z^n with 0^0 = 1.
std::vector<std::complex<double>> power_table(std::complex<double> z, int n) {
    std::vector<std::complex<double>> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i - 1)] * z;
    }
    return p;
}

std::complex<double> spin_rep_element(HalfInteger j, HalfInteger mrow, HalfInteger mcol,
                                      const std::vector<std::complex<double>> &pa,
                                      const std::vector<std::complex<double>> &pb,
                                      const std::vector<std::complex<double>> &pc,
                                      const std::vector<std::complex<double>> &pd) {
    // Matrix element of the degree-2j symmetric power of V = [[a, b], [c, d]]:
    //   sqrt((j+m')!(j-m')!(j+m)!(j-m)!) *
    //   sum_k a^k b^{j+m'-k} c^{j+m-k} d^{k-m-m'} /
    //         [k! (j+m-k)! (j+m'-k)! (k-m-m')!]
    const auto &lf = log_factorial_table();
    const int jpr = half_twice(j.twice() + mrow.twice());
    const int jmr = half_twice(j.twice() - mrow.twice());
    const int jpc = half_twice(j.twice() + mcol.twice());
    const int jmc = half_twice(j.twice() - mcol.twice());
    const double lroot = 0.5 * (lf[jpr] + lf[jmr] + lf[jpc] + lf[jmc]);

    const int ksum = half_twice(mrow.twice() + mcol.twice()); // m + m'
    const int kmin = std::max(0, ksum);
    const int kmax = std::min(jpc, jpr);
    std::complex<double> acc = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        const double lden = lf[k] + lf[jpc - k] + lf[jpr - k] + lf[k - ksum];
        const double coeff = std::exp(lroot - lden);
        acc += coeff * pa[static_cast<std::size_t>(k)] * pb[static_cast<std::size_t>(jpr - k)] *
               pc[static_cast<std::size_t>(jpc - k)] * pd[static_cast<std::size_t>(k - ksum)];
    }
    return acc;
}

} // namespace

double log_factorial(int n) {
    if (n < 0 || n > kMaxFactorial) {
        throw std::invalid_argument("log_factorial: argument out of table range");
    }
    return log_factorial_table()[static_cast<std::size_t>(n)];
}

double wigner_small_d(HalfInteger j, HalfInteger m, HalfInteger n, double beta) {
    require_projection(j, m, "wigner_small_d");
    require_projection(j, n, "wigner_small_d");
    const auto &lf = log_factorial_table();

    const int jpm = half_twice(j.twice() + m.twice());
    const int jmm = half_twice(j.twice() - m.twice());
    const int jpn = half_twice(j.twice() + n.twice());
    const int jmn = half_twice(j.twice() - n.twice());
    const int mn = half_twice(m.twice() - n.twice()); // m - n

    const double lroot = 0.5 * (lf[jpm] + lf[jmm] + lf[jpn] + lf[jmn]);
    const double c = std::cos(0.5 * beta);
    const double s = std::sin(0.5 * beta);

    const int smin = std::max(0, -mn);
    const int smax = std::min(jpn, jmm);
    double acc = 0.0;
    for (int t = smin; t <= smax; ++t) {
        const double lden = lf[jpn - t] + lf[t] + lf[mn + t] + lf[jmm - t];
        const int cpow = jpn + jmm - 2 * t; // 2j + n - m - 2t
        const int spow = mn + 2 * t;
        acc += parity_sign(mn + t) * std::exp(lroot - lden) * std::pow(c, cpow) * std::pow(s, spow);
    }
    return acc;
}

std::complex<double> wigner_D(HalfInteger j, HalfInteger m, HalfInteger n, const EulerAngles &e) {
    const double d = wigner_small_d(j, m, n, e.theta);
    return std::polar(d, -(m.value() * e.phi + n.value() * e.psi));
}

std::complex<double> wigner_D_from_quaternion(HalfInteger j, HalfInteger m, HalfInteger n,
                                              const Quaternion &a) {
    require_projection(j, m, "wigner_D_from_quaternion");
    require_projection(j, n, "wigner_D_from_quaternion");
    const CayleyKlein ck = cayley_klein_from_quaternion(a);
    const int deg = static_cast<int>(j.twice());
    const auto pa = power_table(ck.alpha, deg);
    const auto pb = power_table(ck.beta, deg);
    const auto pc = power_table(-std::conj(ck.beta), deg);
    const auto pd = power_table(std::conj(ck.alpha), deg);
    // The representation matrix of the group element is the adjoint of the
    // D-matrix, hence the swapped indices and conjugation.
    return std::conj(spin_rep_element(j, n, m, pa, pb, pc, pd));
}

double wigner_3j(HalfInteger j1, HalfInteger j2, HalfInteger j3, HalfInteger m1, HalfInteger m2,
                 HalfInteger m3) {
    require_projection(j1, m1, "wigner_3j");
    require_projection(j2, m2, "wigner_3j");
    require_projection(j3, m3, "wigner_3j");
    if (m1.twice() + m2.twice() + m3.twice() != 0) {
        return 0.0;
    }
    const std::int64_t tj1 = j1.twice(), tj2 = j2.twice(), tj3 = j3.twice();
    if (tj3 < std::abs(tj1 - tj2) || tj3 > tj1 + tj2 || (tj1 + tj2 + tj3) % 2 != 0) {
        return 0.0;
    }
    const auto &lf = log_factorial_table();

    const int a = half_twice(tj1 + tj2 - tj3);
    const int b = half_twice(tj1 - tj2 + tj3);
    const int c = half_twice(-tj1 + tj2 + tj3);
    const int perim1 = half_twice(tj1 + tj2 + tj3) + 1;
    const int j1pm1 = half_twice(tj1 + m1.twice());
    const int j1mm1 = half_twice(tj1 - m1.twice());
    const int j2pm2 = half_twice(tj2 + m2.twice());
    const int j2mm2 = half_twice(tj2 - m2.twice());
    const int j3pm3 = half_twice(tj3 + m3.twice());
    const int j3mm3 = half_twice(tj3 - m3.twice());

    const double lpref = 0.5 * (lf[a] + lf[b] + lf[c] - lf[perim1] + lf[j1pm1] + lf[j1mm1] +
                                lf[j2pm2] + lf[j2mm2] + lf[j3pm3] + lf[j3mm3]);

    const int t2 = half_twice(tj2 - tj3 - m1.twice()); // j2 - j3 - m1
    const int t3 = half_twice(tj1 - tj3 + m2.twice()); // j1 - j3 + m2
    const int tmin = std::max({0, t2, t3});
    const int tmax = std::min({a, j1mm1, j2pm2});

    double acc = 0.0;
    for (int t = tmin; t <= tmax; ++t) {
        const double lden =
            lf[t] + lf[a - t] + lf[j1mm1 - t] + lf[j2pm2 - t] + lf[t - t2] + lf[t - t3];
        acc += parity_sign(t) * std::exp(lpref - lden);
    }
    return parity_sign(half_twice(tj1 - tj2 - m3.twice())) * acc;
}

double clebsch_gordan(HalfInteger j1, HalfInteger m1, HalfInteger j2, HalfInteger m2,
                      HalfInteger j3, HalfInteger m3) {
    const double w = wigner_3j(j1, j2, j3, m1, m2, -m3);
    if (w == 0.0) {
        return 0.0;
    }
    const int phase = half_twice(j1.twice() - j2.twice() + m3.twice());
    return parity_sign(phase) * std::sqrt(static_cast<double>(j3.twice()) + 1.0) * w;
}

Eigen::MatrixXcd spin_representation(HalfInteger j, const CayleyKlein &ck) {
    if (j.twice() < 0) {
        throw std::invalid_argument("spin_representation: negative spin");
    }
    if (!ck.is_unit()) {
        throw std::invalid_argument("spin_representation: Cayley-Klein pair is not normalized");
    }
    const int dim = dimension(j);
    const int deg = static_cast<int>(j.twice());
    const auto pa = power_table(ck.alpha, deg);
    const auto pb = power_table(ck.beta, deg);
    const auto pc = power_table(-std::conj(ck.beta), deg);
    const auto pd = power_table(std::conj(ck.alpha), deg);

    Eigen::MatrixXcd u(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const HalfInteger mr = projection_at(j, r);
        for (int col = 0; col < dim; ++col) {
            const HalfInteger mc = projection_at(j, col);
            u(r, col) = spin_rep_element(j, mr, mc, pa, pb, pc, pd);
        }
    }
    return u;
}

Eigen::MatrixXcd spin_representation(HalfInteger j, const SU2Matrix &v) {
    return spin_representation(j, cayley_klein_from_su2(v));
}

std::vector<Eigen::VectorXcd> wigner_D_axis_columns(int lmax, const CayleyKlein &ck) {
    if (lmax < 0) {
        throw std::invalid_argument("wigner_D_axis_columns: negative label");
    }
    const auto pa = power_table(ck.alpha, lmax);
    const auto pb = power_table(ck.beta, lmax);
    const auto pc = power_table(-std::conj(ck.beta), lmax);
    const auto pd = power_table(std::conj(ck.alpha), lmax);

    std::vector<Eigen::VectorXcd> columns(static_cast<std::size_t>(lmax) + 1);
    for (int l = 0; l <= lmax; ++l) {
        const HalfInteger hl = HalfInteger::from_int(l);
        Eigen::VectorXcd col(2 * l + 1);
        for (int mu = l; mu >= -l; --mu) {
            // D^l_{mu 0} = conj(representation element at row 0, column mu).
            col(l - mu) = std::conj(
                spin_rep_element(hl, HalfInteger(), HalfInteger::from_int(mu), pa, pb, pc, pd));
        }
        columns[static_cast<std::size_t>(l)] = std::move(col);
    }
    return columns;
}

} // namespace spintomo
