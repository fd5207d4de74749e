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

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ybsys/commands.h"
#include "ybsys/errors.h"

namespace {

using namespace ybsys;

struct Globals {
    std::optional<double> tol;
    std::uint64_t seed = 20260101;
    std::string format = "json";
    std::string out;
    bool degrees = false;

    double angle(double x) const { return degrees ? x * std::numbers::pi / 180.0 : x; }
    double tol_or(double fallback) const { return tol.value_or(fallback); }
};

void emit(const Globals &g, const std::string &text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw InvalidInput("cannot open output file " + g.out);
    f << text;
    if (!f) throw NumericalFailure("failed writing " + g.out);
}

int finish(const Globals &g, const RunReport &rep) {
    if (g.format != "json") throw InvalidInput("--format csv is only available for sweep");
    emit(g, rep.to_json().dump(2) + "\n");
    return rep.pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"ybsys: three-qubit Yang-Baxter system calculator"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--tol", g.tol, "Residual tolerance (command-specific default)")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for random sampling");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_flag("--degrees", g.degrees, "Interpret angle arguments in degrees");

    int phi_samples = 17;
    auto *verify = app.add_subcommand("verify-algebra", "Braid relations and unitarity");
    verify->add_option("--phi-samples", phi_samples)->check(CLI::PositiveNumber);

    int samples = 50, phi_values = 5;
    auto *ybe = app.add_subcommand("ybe", "Yang-Baxter residuals on random spectral parameters");
    ybe->add_option("--samples", samples)->check(CLI::PositiveNumber);
    ybe->add_option("--phi-values", phi_values)->check(CLI::PositiveNumber);

    double theta = 0.0, phi = 0.0, phi_dot = 1.0, hbar = 1.0;
    std::string input = "000";
    bool diagnostic = false;
    auto *entangle = app.add_subcommand("entangle", "Entanglement of R applied to a basis state");
    entangle->add_option("--theta", theta)->required();
    entangle->add_option("--phi", phi);
    entangle->add_option("--input", input);
    entangle->add_flag("--diagnostic", diagnostic, "Include alternative conventions");

    SweepSpec spec;
    std::vector<std::string> quantities;
    auto *sweep = app.add_subcommand("sweep", "Entanglement curves over a theta grid");
    sweep->add_option("--theta-min", spec.theta_min)->required();
    sweep->add_option("--theta-max", spec.theta_max)->required();
    sweep->add_option("--steps", spec.steps)->required();
    sweep->add_option("--phi", spec.phi);
    sweep->add_option("--input", spec.input);
    sweep->add_option("--quantities", quantities, "Subset of tangle,pair_concurrence,one_vs_rest_sq,eigenvalues,berry")
        ->delimiter(',');
    sweep->add_option("--berry-steps", spec.berry_steps);
    sweep->add_option("--workers", spec.workers)->check(CLI::NonNegativeNumber);

    auto *spectrum_cmd = app.add_subcommand("spectrum", "Hamiltonian spectrum and eigenstate checks");
    spectrum_cmd->add_option("--theta", theta)->required();
    spectrum_cmd->add_option("--phi", phi);
    spectrum_cmd->add_option("--phi-dot", phi_dot);
    spectrum_cmd->add_option("--hbar", hbar);

    int steps = 10000;
    std::string method = "analytic";
    auto *berry = app.add_subcommand("berry", "Berry phases of the three levels");
    berry->add_option("--theta", theta)->required();
    berry->add_option("--steps", steps);
    berry->add_option("--method", method)->check(CLI::IsMember({"analytic", "wilson"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) return finish(g, cmd_verify_algebra(g.tol_or(kDefaultTol), phi_samples, g.seed));
        if (*ybe) return finish(g, cmd_ybe(samples, phi_values, g.seed, g.tol_or(kDefaultTol)));
        if (*entangle) return finish(g, cmd_entangle({g.angle(theta), g.angle(phi)}, input, g.tol_or(1e-9), diagnostic));
        if (*sweep) {
            spec.theta_min = g.angle(spec.theta_min);
            spec.theta_max = g.angle(spec.theta_max);
            spec.phi = g.angle(spec.phi);
            if (!quantities.empty()) spec.quantities = {quantities.begin(), quantities.end()};
            auto rows = sweep_rows(spec);
            auto rep = sweep_report(spec, rows, g.tol_or(1e-9));
            if (g.format == "csv") {
                std::ostringstream csv;
                write_sweep_csv(spec, rows, csv);
                emit(g, csv.str());
            } else {
                emit(g, rep.to_json().dump(2) + "\n");
            }
            return rep.pass() ? kExitOk : kExitCheckFailed;
        }
        if (*spectrum_cmd) {
            DriveParams d{g.angle(theta), g.angle(phi), phi_dot, hbar};
            d.validate();
            return finish(g, cmd_spectrum(d, g.tol_or(kDefaultTol)));
        }
        if (*berry) {
            auto m = method == "wilson" ? BerryMethod::kWilson : BerryMethod::kAnalytic;
            return finish(g, cmd_berry(g.angle(theta), steps, m, g.tol_or(m == BerryMethod::kWilson ? 1e-4 : 1e-5)));
        }
    } catch (const InvalidInput &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalFailure &e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
