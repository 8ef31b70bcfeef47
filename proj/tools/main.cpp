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

#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spintomo/density.hpp"
#include "spintomo/gaussian.hpp"
#include "spintomo/quadrature.hpp"
#include "spintomo/tomography.hpp"

using json = nlohmann::json;
using namespace spintomo;

namespace {

constexpr int kExitUsage = 2;   // input contract violation
constexpr int kExitNumeric = 3; // numerical / rank failure
constexpr double kPi = std::numbers::pi;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

/// Numeric JSON values may be written as decimal strings to avoid
/// double-rounding of published tables.
double as_number(const json &v, const char *what) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        std::size_t used = 0;
        const double out = std::stod(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(std::string(what) + ": bad numeric string '" + s + "'");
        }
        return out;
    }
    throw std::invalid_argument(std::string(what) + ": expected a number");
}

HalfInteger as_half_integer(const json &v, const char *what) {
    if (v.is_string()) {
        return HalfInteger::parse(v.get<std::string>());
    }
    if (v.is_number()) {
        return HalfInteger::parse(std::to_string(v.get<double>()));
    }
    throw std::invalid_argument(std::string(what) + ": expected a half-integer");
}

json load_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open file: " + path);
    }
    json doc;
    in >> doc;
    return doc;
}

DensityMatrix parse_state(const json &doc) {
    if (doc.contains("stokes")) {
        const auto &arr = doc.at("stokes");
        if (!arr.is_array() || arr.size() != 3) {
            throw std::invalid_argument("state: 'stokes' must hold three numbers");
        }
        if (doc.contains("j") && as_half_integer(doc.at("j"), "state j").twice() != 1) {
            throw std::invalid_argument("state: stokes form requires j = 1/2");
        }
        const StokesVector s{as_number(arr[0], "stokes"), as_number(arr[1], "stokes"),
                             as_number(arr[2], "stokes")};
        DensityMatrix rho = density_from_stokes(s);
        rho.validate();
        return rho;
    }
    if (!doc.contains("j") || !doc.contains("matrix_re") || !doc.contains("matrix_im")) {
        throw std::invalid_argument("state: need either 'stokes' or 'j'+'matrix_re'+'matrix_im'");
    }
    const HalfInteger j = as_half_integer(doc.at("j"), "state j");
    const int dim = dimension(j);
    const auto &re = doc.at("matrix_re");
    const auto &im = doc.at("matrix_im");
    if (!re.is_array() || !im.is_array() || re.size() != static_cast<std::size_t>(dim * dim) ||
        im.size() != static_cast<std::size_t>(dim * dim)) {
        throw std::invalid_argument("state: matrix arrays must hold (2j+1)^2 entries");
    }
    Eigen::MatrixXcd m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            const auto k = static_cast<std::size_t>(r * dim + c);
            m(r, c) = std::complex<double>(as_number(re[k], "matrix_re"),
                                           as_number(im[k], "matrix_im"));
        }
    }
    return DensityMatrix::create(j, m);
}

DensityMatrix load_state(const std::string &path) { return parse_state(load_json(path)); }

SpinTomogram load_samples(const std::string &path, HalfInteger j) {
    const json doc = load_json(path);
    if (!doc.is_array()) {
        throw std::invalid_argument("samples: top-level JSON must be a list");
    }
    SpinTomogram tom;
    tom.j = j;
    for (const auto &item : doc) {
        const auto &q = item.at("quaternion");
        if (!q.is_array() || q.size() != 4) {
            throw std::invalid_argument("samples: 'quaternion' must hold four numbers");
        }
        TomogramSample s;
        s.m = as_half_integer(item.at("m"), "sample m");
        s.param = Quaternion(as_number(q[0], "quaternion"), as_number(q[1], "quaternion"),
                             as_number(q[2], "quaternion"), as_number(q[3], "quaternion"));
        s.value = as_number(item.at("value"), "sample value");
        if (!s.param.is_unit(1e-9)) {
            throw std::invalid_argument("samples: quaternion is not normalized");
        }
        tom.samples.push_back(s);
    }
    tom.validate();
    return tom;
}

json quaternion_json(const Quaternion &q) { return json::array({q.a0, q.a1, q.a2, q.a3}); }

json matrix_json_re(const Eigen::MatrixXcd &m) {
    json arr = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            arr.push_back(m(r, c).real());
        }
    }
    return arr;
}

json matrix_json_im(const Eigen::MatrixXcd &m) {
    json arr = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            arr.push_back(m(r, c).imag());
        }
    }
    return arr;
}

// ---------------------------------------------------------------------------
// convert

int run_convert(const std::vector<double> &quat, const std::vector<double> &euler,
                const std::vector<double> &ck_vals, const std::vector<double> &su2_vals) {
    const int given = static_cast<int>(!quat.empty()) + static_cast<int>(!euler.empty()) +
                      static_cast<int>(!ck_vals.empty()) + static_cast<int>(!su2_vals.empty());
    if (given != 1) {
        throw std::invalid_argument("convert: give exactly one input parameterization");
    }

    Quaternion q;
    if (!quat.empty()) {
        q = Quaternion(quat[0], quat[1], quat[2], quat[3]);
        require_unit(q, "convert");
    } else if (!euler.empty()) {
        q = quaternion_from_euler({euler[0], euler[1], euler[2]});
    } else if (!ck_vals.empty()) {
        const CayleyKlein ck{{ck_vals[0], ck_vals[1]}, {ck_vals[2], ck_vals[3]}};
        if (!ck.is_unit(1e-9)) {
            throw std::invalid_argument("convert: |alpha|^2 + |beta|^2 differs from 1");
        }
        q = quaternion_from_cayley_klein(ck).normalized();
    } else {
        SU2Matrix u;
        u << std::complex<double>(su2_vals[0], su2_vals[1]),
            std::complex<double>(su2_vals[2], su2_vals[3]),
            std::complex<double>(su2_vals[4], su2_vals[5]),
            std::complex<double>(su2_vals[6], su2_vals[7]);
        q = quaternion_from_su2(u);
    }
    q = q.canonical();

    const EulerDecomposition ed = quaternion_to_euler(q);
    const CayleyKlein ck = cayley_klein_from_quaternion(q);
    const SU2Matrix u = su2_from_quaternion(q);
    const Rotation3 r = rotation_from_quaternion(q);
    const Eigen::Vector3d n = direction_from_quaternion(q);

    json out;
    out["quaternion"] = quaternion_json(q);
    out["euler"] = {{"phi", ed.angles.phi}, {"theta", ed.angles.theta}, {"psi", ed.angles.psi}};
    out["degenerate"] = ed.degenerate;
    out["cayley_klein"] = {{"alpha_re", ck.alpha.real()},
                           {"alpha_im", ck.alpha.imag()},
                           {"beta_re", ck.beta.real()},
                           {"beta_im", ck.beta.imag()}};
    out["su2_re"] = matrix_json_re(u);
    out["su2_im"] = matrix_json_im(u);
    json rot = json::array();
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) {
            rot.push_back(r(i, k));
        }
    }
    out["rotation"] = rot;
    out["direction"] = json::array({n.x(), n.y(), n.z()});
    std::printf("%s\n", out.dump(2).c_str());
    return 0;
}

// ---------------------------------------------------------------------------
// tomogram-grid

int run_tomogram_grid(const std::string &state_path, const std::vector<int> &grid,
                      const std::string &m_text) {
    if (grid.size() != 2 || grid[0] < 2 || grid[1] < 2) {
        throw std::invalid_argument("tomogram-grid: --grid needs theta and phi step counts >= 2");
    }
    const DensityMatrix rho = load_state(state_path);
    const HalfInteger m = m_text.empty() ? rho.j() : HalfInteger::parse(m_text);
    require_projection(rho.j(), m, "tomogram-grid outcome");

    const int ntheta = grid[0];
    const int nphi = grid[1];
    std::printf("phi,theta,value\n");
    for (int ip = 0; ip < nphi; ++ip) {
        const double phi = 2.0 * kPi * static_cast<double>(ip) / static_cast<double>(nphi - 1);
        for (int it = 0; it < ntheta; ++it) {
            const double theta = kPi * static_cast<double>(it) / static_cast<double>(ntheta - 1);
            const double v = tomogram_value(rho, euler_to_su2({phi, theta, 0.0}), m);
            std::printf("%s,%s,%s\n", fmt12(phi).c_str(), fmt12(theta).c_str(),
                        fmt12(v).c_str());
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// reconstruct

using SampleKey = std::pair<std::int64_t, std::array<long long, 4>>;

std::array<long long, 4> quantize(const Quaternion &q) {
    const Quaternion c = q.canonical();
    return {std::llround(c.a0 * 1e9), std::llround(c.a1 * 1e9), std::llround(c.a2 * 1e9),
            std::llround(c.a3 * 1e9)};
}

std::map<SampleKey, double> sample_table(const SpinTomogram &tom) {
    std::map<SampleKey, double> table;
    for (const auto &s : tom.samples) {
        table[{s.m.twice(), quantize(s.param)}] = s.value;
    }
    return table;
}

GroupEvaluator table_evaluator(std::map<SampleKey, double> table) {
    return [table = std::move(table)](HalfInteger m, const Quaternion &a) {
        const auto it = table.find({m.twice(), quantize(a)});
        if (it == table.end()) {
            throw RankError("samples do not cover the quadrature nodes of the requested rule "
                            "(regenerate with --print-nodes)");
        }
        return it->second;
    };
}

std::vector<Quaternion> rule_node_quaternions(const QuadratureRule &rule) {
    std::vector<Quaternion> nodes;
    if (rule.domain == QuadratureDomain::S3) {
        nodes = rule.group_nodes;
    } else {
        nodes.reserve(rule.size());
        for (const auto &p : rule.sphere_nodes) {
            nodes.push_back(quaternion_from_euler({p.phi, p.theta, 0.0}).canonical());
        }
    }
    return nodes;
}

int run_reconstruct(const std::string &samples_path, const std::string &j_text,
                    const std::string &method, int rule_order, const std::string &ref_path,
                    bool print_nodes) {
    const HalfInteger j = HalfInteger::parse(j_text);
    if (j.twice() <= 0) {
        throw std::invalid_argument("reconstruct: spin must be positive");
    }
    const int L = rule_order > 0 ? rule_order : 2 * static_cast<int>(j.twice()) + 2; // 4j + 2

    QuadratureRule rule;
    if (method == "kernel-euler") {
        rule = product_rule_s2(L);
    } else if (method == "kernel-quaternion") {
        rule = product_rule_s3(L);
    } else if (method != "linear-inversion") {
        throw std::invalid_argument("reconstruct: unknown method '" + method + "'");
    }

    if (print_nodes) {
        if (method == "linear-inversion") {
            throw std::invalid_argument("reconstruct: --print-nodes needs a kernel method");
        }
        json out = json::array();
        for (const Quaternion &q : rule_node_quaternions(rule)) {
            for (int r = 0; r < dimension(j); ++r) {
                out.push_back({{"m", projection_at(j, r).to_string()},
                               {"quaternion", quaternion_json(q)},
                               {"value", 0.0}});
            }
        }
        std::printf("%s\n", out.dump(2).c_str());
        return 0;
    }

    if (samples_path.empty()) {
        throw std::invalid_argument("reconstruct: --samples is required");
    }
    const SpinTomogram tom = load_samples(samples_path, j);

    DensityMatrix rec = DensityMatrix::unchecked(j, Eigen::MatrixXcd());
    if (method == "linear-inversion") {
        rec = reconstruct_linear_inversion(tom);
    } else {
        const auto evaluator = table_evaluator(sample_table(tom));
        if (method == "kernel-euler") {
            rec = reconstruct_density_euler(
                [&](HalfInteger m, double phi, double theta) {
                    return evaluator(m, quaternion_from_euler({phi, theta, 0.0}));
                },
                j, rule);
        } else {
            rec = reconstruct_density_quaternion(evaluator, j, rule);
        }
    }

    json out;
    out["j"] = j.to_string();
    out["matrix_re"] = matrix_json_re(rec.matrix());
    out["matrix_im"] = matrix_json_im(rec.matrix());
    out["min_eigenvalue"] = rec.min_eigenvalue();
    out["trace_re"] = rec.matrix().trace().real();
    if (!ref_path.empty()) {
        const DensityMatrix ref = load_state(ref_path);
        out["hs_distance_to_reference"] = hs_distance(rec, ref);
    }
    std::printf("%s\n", out.dump(2).c_str());
    return 0;
}

// ---------------------------------------------------------------------------
// purity

int run_purity(const std::string &state_path, const std::string &samples_path,
               const std::string &j_text, int rule_order) {
    if (state_path.empty() == samples_path.empty()) {
        throw std::invalid_argument("purity: give exactly one of --state / --samples");
    }
    if (!state_path.empty()) {
        const DensityMatrix rho = load_state(state_path);
        const int L =
            rule_order > 0 ? rule_order : 2 * static_cast<int>(rho.j().twice()) + 2;
        const QuadratureRule rule = product_rule_s3(L);
        const double direct = purity_direct(rho);
        const double tomo = purity_from_tomogram(state_evaluator(rho), rho.j(), rule);
        std::printf("purity_direct = %s\n", fmt12(direct).c_str());
        std::printf("purity_tomographic = %s\n", fmt12(tomo).c_str());
        std::printf("abs_difference = %s\n", fmt12(std::abs(direct - tomo)).c_str());
        return 0;
    }
    if (j_text.empty()) {
        throw std::invalid_argument("purity: --samples needs --j");
    }
    const HalfInteger j = HalfInteger::parse(j_text);
    const int L = rule_order > 0 ? rule_order : 2 * static_cast<int>(j.twice()) + 2;
    const QuadratureRule rule = product_rule_s3(L);
    const SpinTomogram tom = load_samples(samples_path, j);
    const double tomo = purity_from_tomogram(table_evaluator(sample_table(tom)), j, rule);
    std::printf("purity_tomographic = %s\n", fmt12(tomo).c_str());
    return 0;
}

// ---------------------------------------------------------------------------
// distance

int run_distance(const std::string &state_path, const std::string &state2_path,
                 const std::string &m_text, int grid_size, std::optional<std::uint64_t> seed) {
    const DensityMatrix rho1 = load_state(state_path);
    const DensityMatrix rho2 = load_state(state2_path);
    if (!seed) {
        throw std::invalid_argument("distance: --seed is required");
    }
    if (grid_size < 1) {
        throw std::invalid_argument("distance: --grid must be >= 1");
    }
    const HalfInteger m = m_text.empty() ? rho1.j() : HalfInteger::parse(m_text);

    Rng rng(*seed);
    std::vector<Quaternion> grid;
    grid.reserve(static_cast<std::size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i) {
        grid.push_back(haar_sample(rng));
    }
    const double bound =
        hs_lower_bound(state_evaluator(rho1), state_evaluator(rho2), rho1.j(), m, grid);
    const double dist = hs_distance(rho1, rho2);
    std::printf("hs_distance = %s\n", fmt12(dist).c_str());
    std::printf("hs_lower_bound = %s\n", fmt12(bound).c_str());
    std::printf("bound_holds = %s\n", bound <= dist + 1e-12 ? "true" : "false");
    return 0;
}

// ---------------------------------------------------------------------------
// cv

int run_cv(const std::string &state_path, const std::string &mode, double mu, double eta,
           double theta, std::optional<double> qmin, std::optional<double> qmax, int qsteps,
           int count, std::optional<std::uint64_t> seed) {
    GaussianState g = GaussianState::vacuum();
    if (!state_path.empty()) {
        const json doc = load_json(state_path);
        if (doc.contains("mean_q")) g.mean_q = as_number(doc.at("mean_q"), "mean_q");
        if (doc.contains("mean_p")) g.mean_p = as_number(doc.at("mean_p"), "mean_p");
        if (doc.contains("cov_qq")) g.cov_qq = as_number(doc.at("cov_qq"), "cov_qq");
        if (doc.contains("cov_qp")) g.cov_qp = as_number(doc.at("cov_qp"), "cov_qp");
        if (doc.contains("cov_pp")) g.cov_pp = as_number(doc.at("cov_pp"), "cov_pp");
    }
    g.validate();

    if (mode == "sample") {
        if (!seed) {
            throw std::invalid_argument("cv: sample mode requires --seed");
        }
        if (count < 1) {
            throw std::invalid_argument("cv: --count must be >= 1");
        }
        Rng rng(*seed);
        const auto samples = homodyne_sample(g, theta, count, rng);
        std::printf("# seed=%llu\n", static_cast<unsigned long long>(*seed));
        std::printf("sample\n");
        for (double v : samples) {
            std::printf("%s\n", fmt12(v).c_str());
        }
        return 0;
    }

    const bool optical = (mode == "optical");
    if (!optical && mode != "symplectic") {
        throw std::invalid_argument("cv: unknown mode '" + mode + "'");
    }
    if (!optical && mu == 0.0 && eta == 0.0) {
        throw std::invalid_argument("cv: (mu, eta) must not both vanish");
    }
    if (qsteps < 2) {
        throw std::invalid_argument("cv: --q-steps must be >= 2");
    }
    const auto [mean, sigma] = optical
                                   ? quadrature_moments(g, theta)
                                   : std::pair<double, double>{
                                         mu * g.mean_q + eta * g.mean_p,
                                         std::sqrt(mu * mu * g.cov_qq + 2 * mu * eta * g.cov_qp +
                                                   eta * eta * g.cov_pp)};
    const double lo = qmin.value_or(mean - 8.0 * sigma);
    const double hi = qmax.value_or(mean + 8.0 * sigma);
    std::printf("Q,value\n");
    for (int i = 0; i < qsteps; ++i) {
        const double q = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(qsteps - 1);
        const double v = optical ? optical_tomogram_gaussian(g, q, theta)
                                 : symplectic_tomogram_gaussian(g, q, mu, eta);
        std::printf("%s,%s\n", fmt12(q).c_str(), fmt12(v).c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Spin and continuous-variable tomography toolkit"};
    app.require_subcommand(1);

    // convert
    auto *convert = app.add_subcommand("convert", "Convert between group parameterizations");
    std::vector<double> quat, euler, ck_vals, su2_vals;
    convert->add_option("--quaternion", quat, "a0 a1 a2 a3")->expected(4);
    convert->add_option("--euler", euler, "phi theta psi")->expected(3);
    convert->add_option("--cayley-klein", ck_vals, "Re(alpha) Im(alpha) Re(beta) Im(beta)")
        ->expected(4);
    convert->add_option("--su2", su2_vals, "row-major re/im pairs of the 2x2 matrix")->expected(8);

    // tomogram-grid
    auto *grid_cmd = app.add_subcommand("tomogram-grid", "Emit tomogram values on a phi/theta grid");
    std::string state_path, m_text;
    std::vector<int> grid;
    grid_cmd->add_option("--state", state_path, "state JSON file")->required();
    grid_cmd->add_option("--grid", grid, "theta_steps phi_steps")->expected(2);
    grid_cmd->add_option("--m", m_text, "outcome (default +j)");

    // reconstruct
    auto *rec_cmd = app.add_subcommand("reconstruct", "Reconstruct a density matrix from samples");
    std::string samples_path, j_text, method = "kernel-euler", ref_path;
    int rule_order = 0;
    bool print_nodes = false;
    rec_cmd->add_option("--samples", samples_path, "samples JSON file");
    rec_cmd->add_option("--j", j_text, "spin, e.g. 1/2")->required();
    rec_cmd->add_option("--method", method,
                        "kernel-euler | kernel-quaternion | linear-inversion");
    rec_cmd->add_option("--rule-order", rule_order, "product-rule L (default 4j+2)");
    rec_cmd->add_option("--state", ref_path, "optional reference state for a distance report");
    rec_cmd->add_flag("--print-nodes", print_nodes,
                      "emit the sample-file skeleton for the chosen rule and exit");

    // purity
    auto *pur_cmd = app.add_subcommand("purity", "Report direct and tomographic purity");
    std::string pur_state, pur_samples, pur_j;
    int pur_order = 0;
    pur_cmd->add_option("--state", pur_state, "state JSON file");
    pur_cmd->add_option("--samples", pur_samples, "samples JSON file");
    pur_cmd->add_option("--j", pur_j, "spin (required with --samples)");
    pur_cmd->add_option("--rule-order", pur_order, "product-rule L (default 4j+2)");

    // distance
    auto *dist_cmd = app.add_subcommand("distance", "Hilbert-Schmidt distance and tomographic bound");
    std::string dist_state, dist_state2, dist_m;
    int dist_grid = 1000;
    std::optional<std::uint64_t> dist_seed;
    dist_cmd->add_option("--state", dist_state, "first state JSON file")->required();
    dist_cmd->add_option("--state2", dist_state2, "second state JSON file")->required();
    dist_cmd->add_option("--m", dist_m, "outcome (default +j)");
    dist_cmd->add_option("--grid", dist_grid, "number of Haar grid points");
    dist_cmd->add_option("--seed", dist_seed, "RNG seed for the grid");

    // cv
    auto *cv_cmd = app.add_subcommand("cv", "Gaussian-state quadrature tomograms and sampling");
    std::string cv_state, cv_mode = "optical";
    double cv_mu = 1.0, cv_eta = 0.0, cv_theta = 0.0;
    std::optional<double> cv_qmin, cv_qmax;
    int cv_qsteps = 201, cv_count = 1;
    std::optional<std::uint64_t> cv_seed;
    cv_cmd->add_option("--state", cv_state, "Gaussian state JSON file (default vacuum)");
    cv_cmd->add_option("--mode", cv_mode, "symplectic | optical | sample");
    cv_cmd->add_option("--mu", cv_mu, "symplectic mu");
    cv_cmd->add_option("--eta", cv_eta, "symplectic eta");
    cv_cmd->add_option("--theta", cv_theta, "phase-space rotation angle");
    cv_cmd->add_option("--q-min", cv_qmin, "grid start (default mean - 8 sigma)");
    cv_cmd->add_option("--q-max", cv_qmax, "grid end (default mean + 8 sigma)");
    cv_cmd->add_option("--q-steps", cv_qsteps, "grid point count");
    cv_cmd->add_option("--count", cv_count, "sample count");
    cv_cmd->add_option("--seed", cv_seed, "RNG seed for sample mode");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }

    try {
        if (convert->parsed()) {
            return run_convert(quat, euler, ck_vals, su2_vals);
        }
        if (grid_cmd->parsed()) {
            if (grid.empty()) {
                grid = {20, 20};
            }
            return run_tomogram_grid(state_path, grid, m_text);
        }
        if (rec_cmd->parsed()) {
            return run_reconstruct(samples_path, j_text, method, rule_order, ref_path,
                                   print_nodes);
        }
        if (pur_cmd->parsed()) {
            return run_purity(pur_state, pur_samples, pur_j, pur_order);
        }
        if (dist_cmd->parsed()) {
            return run_distance(dist_state, dist_state2, dist_m, dist_grid, dist_seed);
        }
        if (cv_cmd->parsed()) {
            return run_cv(cv_state, cv_mode, cv_mu, cv_eta, cv_theta, cv_qmin, cv_qmax, cv_qsteps,
                          cv_count, cv_seed);
        }
    } catch (const RankError &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumeric;
    } catch (const std::invalid_argument &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumeric;
    }
    return 0;
}
