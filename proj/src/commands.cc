// Copyright 2026 The ybsys Authors
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

#include "ybsys/commands.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "ybsys/braid.h"
#include "ybsys/entanglement.h"
#include "ybsys/errors.h"
#include "ybsys/states.h"
#include "ybsys/yangbaxter.h"

namespace ybsys {

using nlohmann::json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFiniteDifferenceStep = 1e-5;
constexpr double kFiniteDifferenceTol = 1e-6;
constexpr double kMonogamyTol = 1e-8;

double finite_or_throw(double x, const std::string &what) {
    if (!std::isfinite(x)) throw NumericalFailure(what + " is not finite");
    return x;
}

json complex_list(const ComplexVector &v) {
    json out = json::array();
    for (const auto &z : v.entries()) out.push_back({z.real(), z.imag()});
    return out;
}

json entanglement_json(const EntanglementReport &r) {
    return {{"tau_abc", r.tau_abc}, {"c_ab", r.c_ab},       {"c_bc", r.c_bc},
            {"c_ac", r.c_ac},       {"c2_a_bc", r.c2_a_bc}, {"c2_b_ac", r.c2_b_ac},
            {"c2_c_ab", r.c2_c_ab}, {"monogamy_residual", r.monogamy_residual}};
}

}  // namespace

// ---------------------------------------------------------------------------
// RunReport

void RunReport::check(const std::string &name, double residual, double tol, bool gating) {
    finite_or_throw(residual, "residual " + name);
    checks_.push_back({{"name", name}, {"residual", residual}, {"tol", tol}, {"pass", residual <= tol}, {"gating", gating}});
    if (!residuals_.contains(name) || residuals_[name].get<double>() < residual) residuals_[name] = residual;
}

bool RunReport::pass() const {
    for (const auto &c : checks_) {
        if (c["gating"].get<bool>() && !c["pass"].get<bool>()) return false;
    }
    return true;
}

json RunReport::to_json() const {
    return {{"command", command_}, {"parameters", parameters_}, {"results", results_},
            {"residuals", residuals_}, {"checks", checks_},     {"pass", pass()}};
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// verify-algebra

RunReport cmd_verify_algebra(double tol, int phi_samples, std::uint64_t seed) {
    if (phi_samples < 1) throw InvalidInput("phi_samples must be at least 1");
    RunReport rep("verify-algebra");
    rep.parameters() = {{"tol", tol}, {"phi_samples", phi_samples}, {"seed", seed}};

    json per_phi = json::array();
    for (int k = 0; k < phi_samples; ++k) {
        double phi = kTwoPi * k / phi_samples;
        auto bs = build_braidset(phi);
        auto rel = check_es2_relations(bs, tol);
        json row = {{"phi", phi}, {"alpha", rel.alpha}};
        for (const auto &c : rel.checks) {
            rep.check(c.name, c.residual, tol, c.gating);
            row[c.name] = c.residual;
        }
        per_phi.push_back(row);
    }
    rep.results()["relations"] = per_phi;

    // Unitarity on the 11 x 11 grid over [0, 2 pi)^2 plus seeded random samples.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::vector<RParams> points;
    for (int i = 0; i < 11; ++i) {
        for (int j = 0; j < 11; ++j) points.push_back({kTwoPi * i / 11.0, kTwoPi * j / 11.0});
    }
    for (int k = 0; k < phi_samples; ++k) {
        double theta = angle(rng);
        points.push_back({theta, angle(rng)});
    }
    double worst2 = 0.0, worst3 = 0.0;
    for (const auto &p : points) {
        worst2 = std::max(worst2, unitarity_residual(r_matrix(System::kTwoQubit, p)));
        worst3 = std::max(worst3, unitarity_residual(r_matrix(System::kThreeQubit, p)));
    }
    rep.check("unitarity_two_qubit", worst2, tol);
    rep.check("unitarity_three_qubit", worst3, tol);
    rep.results()["unitarity_points"] = points.size();
    return rep;
}

// ---------------------------------------------------------------------------
// ybe

RunReport cmd_ybe(int samples, int phi_values, std::uint64_t seed, double tol) {
    if (samples < 1 || phi_values < 1) throw InvalidInput("samples and phi_values must be positive");
    RunReport rep("ybe");
    rep.parameters() = {{"samples", samples}, {"phi_values", phi_values}, {"seed", seed}, {"tol", tol}};

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    auto draw = [&] {
        for (;;) {
            Complex x = std::polar(1.0, angle(rng));
            if (std::abs(x + 1.0 / x) > 1e-3) return x;
        }
    };

    double worst2 = 0.0;
    std::vector<double> three;
    json samples_json = json::array();
    for (int s = 0; s < samples; ++s) {
        Complex x, y;
        do {
            x = draw();
            y = draw();
        } while (std::abs(x * y + 1.0 / (x * y)) <= 1e-3);
        for (int j = 0; j < phi_values; ++j) {
            double phi = kTwoPi * j / phi_values;
            double r2 = ybe_residual(System::kTwoQubit, {x}, {y}, phi);
            double r3 = ybe_residual(System::kThreeQubit, {x}, {y}, phi);
            worst2 = std::max(worst2, r2);
            three.push_back(r3);
            samples_json.push_back({{"x_arg", std::arg(x)}, {"y_arg", std::arg(y)}, {"phi", phi},
                                    {"two_qubit", r2}, {"three_qubit", r3}});
        }
    }
    rep.check("ybe_two_qubit_unit_circle", worst2, tol);
    auto [mn, mx] = std::minmax_element(three.begin(), three.end());
    double mean = 0.0;
    for (double r : three) mean += r;
    mean /= static_cast<double>(three.size());
    rep.check("ybe_three_qubit_unit_circle", *mx, tol, false);
    rep.results()["three_qubit_residual"] = {{"min", *mn}, {"max", *mx}, {"mean", mean}};
    rep.results()["samples"] = samples_json;

    // Same lifted equation with the ratio on the anti-Hermitian generator and
    // real positive x, the unitary branch of that family.
    std::uniform_real_distribution<double> logx(-1.5, 1.5);
    double gen2 = 0.0, gen3 = 0.0;
    for (int s = 0; s < samples; ++s) {
        double x = std::exp(logx(rng));
        double y = std::exp(logx(rng));
        double phi = kTwoPi * (s % phi_values) / phi_values;
        gen2 = std::max(gen2, ybe_residual_generator_form(System::kTwoQubit, x, y, phi));
        gen3 = std::max(gen3, ybe_residual_generator_form(System::kThreeQubit, x, y, phi));
    }
    rep.check("ybe_two_qubit_generator_form_real_x", gen2, tol, false);
    rep.check("ybe_three_qubit_generator_form_real_x", gen3, tol, false);
    return rep;
}

// ---------------------------------------------------------------------------
// entangle

RunReport cmd_entangle(const RParams &p, const std::string &input, double tol, bool diagnostic) {
    RunReport rep("entangle");
    rep.parameters() = {{"theta", p.theta}, {"phi", p.phi}, {"input", input}, {"tol", tol}};
    auto state = apply_r(p, ThreeQubitState::basis(input));
    auto r = full_report(state);
    rep.results()["report"] = entanglement_json(r);
    rep.results()["amplitudes"] = complex_list(state.amplitudes());
    json closed = {{"tau_abc", tangle_closed_form(p.theta)},
                   {"c_pair", pair_concurrence_closed_form(p.theta)},
                   {"c2_one_rest", one_vs_rest_sq_closed_form(p.theta)}};
    rep.results()["closed_form"] = closed;

    rep.check("tangle_vs_closed_form", std::abs(r.tau_abc - tangle_closed_form(p.theta)), tol);
    double cp = pair_concurrence_closed_form(p.theta);
    rep.check("pair_concurrence_vs_closed_form",
              std::max({std::abs(r.c_ab - cp), std::abs(r.c_bc - cp), std::abs(r.c_ac - cp)}), tol);
    double c2 = one_vs_rest_sq_closed_form(p.theta);
    rep.check("one_vs_rest_sq_vs_closed_form",
              std::max({std::abs(r.c2_a_bc - c2), std::abs(r.c2_b_ac - c2), std::abs(r.c2_c_ab - c2)}), tol);
    rep.check("monogamy", r.monogamy_residual, std::max(tol, kMonogamyTol));

    if (diagnostic) {
        auto rho = state.density();
        json d;
        d["concurrence_eigenvalue_convention"] = {
            {"c_ab", concurrence_eigenvalue_convention(partial_trace(rho, {0, 1}, 3))},
            {"c_bc", concurrence_eigenvalue_convention(partial_trace(rho, {1, 2}, 3))},
            {"c_ac", concurrence_eigenvalue_convention(partial_trace(rho, {0, 2}, 3))}};
        d["monogamy_residual_bc_ac"] = r.monogamy_residual_bc_ac;
        double transcription = (state.amplitudes() - apply_r_closed_form(p, input)).norm();
        d["closed_form_action_distance"] = transcription;
        rep.results()["diagnostic"] = d;
        rep.check("closed_form_action", transcription, tol, false);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// sweep

void SweepSpec::validate() const {
    if (!(theta_min <= theta_max)) throw InvalidInput("sweep: theta_min must not exceed theta_max");
    if (steps < 2) throw InvalidInput("sweep: steps must be at least 2");
    static const std::set<std::string> known{"tangle", "pair_concurrence", "one_vs_rest_sq", "eigenvalues", "berry"};
    for (const auto &q : quantities) {
        if (!known.contains(q)) throw InvalidInput("sweep: unknown quantity " + q);
    }
    if (quantities.contains("berry") && berry_steps < kMinBerrySteps) throw InvalidInput("sweep: berry_steps too small");
    basis_index(input);
    if (input.size() != 3) throw InvalidInput("sweep: input must be a three-qubit basis label");
}

std::vector<SweepRow> sweep_rows(const SweepSpec &spec) {
    spec.validate();
    std::vector<SweepRow> rows(static_cast<std::size_t>(spec.steps));
    bool want_eigs = spec.quantities.contains("eigenvalues");
    bool want_berry = spec.quantities.contains("berry");

    auto compute = [&](std::size_t k) {
        double theta = spec.theta_min + (spec.theta_max - spec.theta_min) * static_cast<double>(k) / (spec.steps - 1);
        SweepRow row;
        row.theta = theta;
        auto state = apply_r({theta, spec.phi}, ThreeQubitState::basis(spec.input));
        auto r = full_report(state);
        row.tau_measured = r.tau_abc;
        row.tau_closed = tangle_closed_form(theta);
        row.c_pair_measured = r.c_ab;
        row.c_pair_closed = pair_concurrence_closed_form(theta);
        row.c2_one_rest_measured = r.c2_a_bc;
        row.c2_one_rest_closed = one_vs_rest_sq_closed_form(theta);
        row.max_residual = std::max({std::abs(r.tau_abc - row.tau_closed), std::abs(r.c_ab - row.c_pair_closed),
                                     std::abs(r.c_bc - row.c_pair_closed), std::abs(r.c_ac - row.c_pair_closed),
                                     std::abs(r.c2_a_bc - row.c2_one_rest_closed),
                                     std::abs(r.c2_b_ac - row.c2_one_rest_closed),
                                     std::abs(r.c2_c_ab - row.c2_one_rest_closed)});
        if (want_eigs) row.eigenvalues = eigh(hamiltonian({theta, spec.phi, 1.0, 1.0})).eigenvalues;
        if (want_berry) {
            for (int i = 5; i <= 8; ++i) row.berry.push_back(berry_analytic(i, theta, spec.berry_steps));
            row.berry_closed = 0.5 * solid_angle(theta);
        }
        rows[k] = std::move(row);
    };

    std::size_t n = rows.size();
    std::size_t workers = spec.workers > 0 ? static_cast<std::size_t>(spec.workers)
                                           : std::max<std::size_t>(1, std::thread::hardware_concurrency());
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (std::size_t k = 0; k < n; ++k) compute(k);
        return rows;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t k = w; k < n; k += workers) compute(k);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) t.join();
    for (auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rows;
}

void write_sweep_csv(const SweepSpec &spec, const std::vector<SweepRow> &rows, std::ostream &out) {
    bool want_eigs = spec.quantities.contains("eigenvalues");
    bool want_berry = spec.quantities.contains("berry");
    out << "theta,tau_measured,tau_closed,c_pair_measured,c_pair_closed,c2_one_rest_measured,c2_one_rest_closed,"
           "max_residual";
    if (want_eigs) {
        for (int k = 1; k <= 8; ++k) out << ",e" << k;
    }
    if (want_berry) out << ",gamma5,gamma6,gamma7,gamma8,gamma_closed";
    out << '\n';
    for (const auto &r : rows) {
        out << format_double(r.theta) << ',' << format_double(r.tau_measured) << ',' << format_double(r.tau_closed)
            << ',' << format_double(r.c_pair_measured) << ',' << format_double(r.c_pair_closed) << ','
            << format_double(r.c2_one_rest_measured) << ',' << format_double(r.c2_one_rest_closed) << ','
            << format_double(r.max_residual);
        for (double e : r.eigenvalues) out << ',' << format_double(e);
        if (want_berry) {
            for (double g : r.berry) out << ',' << format_double(g);
            out << ',' << format_double(r.berry_closed);
        }
        out << '\n';
    }
}

RunReport sweep_report(const SweepSpec &spec, const std::vector<SweepRow> &rows, double tol) {
    RunReport rep("sweep");
    rep.parameters() = {{"theta_min", spec.theta_min}, {"theta_max", spec.theta_max}, {"steps", spec.steps},
                        {"phi", spec.phi},             {"input", spec.input},         {"tol", tol},
                        {"quantities", spec.quantities}};
    json out = json::array();
    double worst = 0.0;
    for (const auto &r : rows) {
        json row = {{"theta", r.theta},
                    {"tau_measured", r.tau_measured},
                    {"tau_closed", r.tau_closed},
                    {"c_pair_measured", r.c_pair_measured},
                    {"c_pair_closed", r.c_pair_closed},
                    {"c2_one_rest_measured", r.c2_one_rest_measured},
                    {"c2_one_rest_closed", r.c2_one_rest_closed},
                    {"max_residual", r.max_residual}};
        if (!r.eigenvalues.empty()) row["eigenvalues"] = r.eigenvalues;
        if (!r.berry.empty()) {
            row["berry"] = r.berry;
            row["berry_closed"] = r.berry_closed;
        }
        out.push_back(row);
        worst = std::max(worst, r.max_residual);
    }
    rep.results()["rows"] = out;
    rep.check("closed_form_agreement", worst, tol);
    return rep;
}

// ---------------------------------------------------------------------------
// spectrum

RunReport cmd_spectrum(const DriveParams &d, double tol) {
    RunReport rep("spectrum");
    rep.parameters() = {{"theta", d.theta}, {"phi", d.phi}, {"phi_dot", d.phi_dot}, {"hbar", d.hbar}, {"tol", tol}};
    auto s = spectrum(d);
    auto h = hamiltonian(d);
    double fd = frobenius_distance(h, hamiltonian_from_r(d, kFiniteDifferenceStep));

    rep.results()["eigenvalues"] = s.eigenvalues;
    rep.results()["degeneracy_pattern"] = s.degeneracy_pattern;
    rep.results()["closed_form"] = s.closed_form;
    json fixtures = json::array();
    for (const auto &f : s.fixtures) {
        fixtures.push_back({{"index", f.index},
                            {"listed_energy", f.listed_energy},
                            {"listed_residual", f.listed_residual},
                            {"measured_energy", f.measured_energy},
                            {"measured_residual", f.measured_residual},
                            {"measured_level", to_string(f.measured_level)}});
        rep.check("fixture_listed_eigen_equation", f.listed_residual, tol);
        rep.check("fixture_is_eigenvector", f.measured_residual, tol);
    }
    rep.results()["fixtures"] = fixtures;
    json projectors = json::array();
    for (const auto &p : s.projectors) {
        projectors.push_back({{"level", to_string(p.level)},
                              {"listed_states", p.listed_states},
                              {"measured_states", p.measured_states},
                              {"listed_distance", p.listed_distance},
                              {"measured_distance", p.measured_distance}});
        rep.check("level_projector_measured_grouping", p.measured_distance, 1e-8);
        rep.check("level_projector_listed_grouping", p.listed_distance, 1e-8, false);
    }
    rep.results()["projectors"] = projectors;

    auto su2 = su2_relations(d);
    rep.results()["su2"] = {{"i_plus_square", su2.i_plus_square},
                            {"i_minus_square", su2.i_minus_square},
                            {"raising_commutator", su2.raising_commutator},
                            {"i3_plus", su2.i3_plus},
                            {"i3_minus", su2.i3_minus},
                            {"ladder_coefficient", su2.ladder_coefficient},
                            {"decomposition", su2.decomposition},
                            {"i3_square_global", su2.i3_square_global},
                            {"i3_square_restricted", su2.i3_square_restricted}};

    rep.check("hermiticity", s.hermiticity, tol);
    rep.check("closed_form_spectrum", s.closed_form_match, tol);
    rep.check("finite_difference_hamiltonian", fd, kFiniteDifferenceTol);
    rep.check("su2_i_plus_square", std::max(su2.i_plus_square, su2.i_minus_square), tol);
    rep.check("su2_raising_commutator", su2.raising_commutator, tol);
    rep.check("su2_i3_ladder", std::max(su2.i3_plus, su2.i3_minus), tol);
    rep.check("su2_decomposition", su2.decomposition, tol, false);
    rep.check("su2_i3_square_global", su2.i3_square_global, tol, false);
    rep.check("su2_i3_square_restricted", su2.i3_square_restricted, tol, false);
    return rep;
}

// ---------------------------------------------------------------------------
// berry

RunReport cmd_berry(double theta, int steps, BerryMethod method, double tol) {
    RunReport rep("berry");
    rep.parameters() = {{"theta", theta}, {"steps", steps}, {"method", to_string(method)}, {"tol", tol}};
    json reports = json::array();
    for (Level level : {Level::kZero, Level::kMinus, Level::kPlus}) {
        auto b = berry_report(theta, level, method, steps);
        reports.push_back({{"theta", b.theta},
                           {"level", to_string(b.level)},
                           {"method", to_string(b.method)},
                           {"states", b.states},
                           {"phases", b.phases},
                           {"closed_form", b.closed_form},
                           {"solid_angle", b.solid_angle},
                           {"residuals", b.residuals}});
        rep.check(std::string("berry_") + to_string(level), b.max_residual(), tol);
        if (level != Level::kZero && b.phases.size() == 2) {
            // Opposite phases inside one doublet; reported for comparison.
            rep.check(std::string("doublet_opposite_phases_") + to_string(level),
                      std::abs(wrap_pi(b.phases[0] + b.phases[1])), tol, false);
        }
    }
    rep.results()["reports"] = reports;
    return rep;
}

}  // namespace ybsys
