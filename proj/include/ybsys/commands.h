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

#ifndef YBSYS_COMMANDS_H
#define YBSYS_COMMANDS_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ybsys/berry.h"
#include "ybsys/dynamics.h"

namespace ybsys {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitNumerical = 3,
};

/// Command echo, parameters, results and named residual checks. pass() holds
/// iff every gating check has residual <= tol.
class RunReport {
   public:
    explicit RunReport(std::string command) : command_(std::move(command)) {}

    nlohmann::json &parameters() { return parameters_; }
    nlohmann::json &results() { return results_; }

    /// Records a check and keeps the maximum residual seen under `name`.
    void check(const std::string &name, double residual, double tol, bool gating = true);

    bool pass() const;
    const nlohmann::json &checks() const { return checks_; }
    nlohmann::json to_json() const;

   private:
    std::string command_;
    nlohmann::json parameters_ = nlohmann::json::object();
    nlohmann::json results_ = nlohmann::json::object();
    nlohmann::json checks_ = nlohmann::json::array();
    nlohmann::json residuals_ = nlohmann::json::object();
};

/// Fixed-format decimal with 17 significant digits, '.' separator,
/// independent of the global locale.
std::string format_double(double x);

RunReport cmd_verify_algebra(double tol, int phi_samples, std::uint64_t seed);

RunReport cmd_ybe(int samples, int phi_values, std::uint64_t seed, double tol);

RunReport cmd_entangle(const RParams &p, const std::string &input, double tol, bool diagnostic = false);

struct SweepSpec {
    double theta_min = 0.0;
    double theta_max = 0.0;
    int steps = 2;
    double phi = 0.0;
    std::string input = "000";
    std::set<std::string> quantities{"tangle", "pair_concurrence", "one_vs_rest_sq"};
    int berry_steps = 1000;
    int workers = 0;  // 0: hardware concurrency

    void validate() const;
};

struct SweepRow {
    double theta = 0.0;
    double tau_measured = 0.0;
    double tau_closed = 0.0;
    double c_pair_measured = 0.0;
    double c_pair_closed = 0.0;
    double c2_one_rest_measured = 0.0;
    double c2_one_rest_closed = 0.0;
    double max_residual = 0.0;
    std::vector<double> eigenvalues;   // when "eigenvalues" requested
    std::vector<double> berry;         // gamma_5..gamma_8, when "berry" requested
    double berry_closed = 0.0;
};

std::vector<SweepRow> sweep_rows(const SweepSpec &spec);
void write_sweep_csv(const SweepSpec &spec, const std::vector<SweepRow> &rows, std::ostream &out);
RunReport sweep_report(const SweepSpec &spec, const std::vector<SweepRow> &rows, double tol);

RunReport cmd_spectrum(const DriveParams &d, double tol);

RunReport cmd_berry(double theta, int steps, BerryMethod method, double tol);

}  // namespace ybsys

#endif
