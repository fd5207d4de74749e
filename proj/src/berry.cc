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

#include "ybsys/berry.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ybsys/errors.h"

namespace ybsys {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGapThreshold = 1e-8;

void require_steps(int steps) {
    if (steps < kMinBerrySteps) {
        throw InvalidInput("Berry phase needs at least " + std::to_string(kMinBerrySteps) + " steps");
    }
}

void require_upper_fixture(int i) {
    if (i < 5 || i > 8) throw InvalidInput("fixture index must be in 5..8");
}

double grid_phi(int k, int steps) { return kTwoPi * static_cast<double>(k) / static_cast<double>(steps); }

// Two eigenvectors of H belonging to `level`, checked for separation.
std::array<ComplexVector, 2> level_basis(const DriveParams &d, Level level) {
    auto eig = eigh(hamiltonian(d));
    double target = static_cast<int>(level) * d.level_energy();
    std::array<std::size_t, 8> order{};
    for (std::size_t k = 0; k < 8; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(eig.eigenvalues[a] - target) < std::abs(eig.eigenvalues[b] - target);
    });
    double inside = std::max(std::abs(eig.eigenvalues[order[0]] - target), std::abs(eig.eigenvalues[order[1]] - target));
    double outside = std::abs(eig.eigenvalues[order[2]] - target);
    if (outside - inside < kGapThreshold) {
        throw DegenerateCrossing("berry_wilson: level gap below threshold at theta = " + std::to_string(d.theta));
    }
    return {eig.eigenvectors[order[0]], eig.eigenvectors[order[1]]};
}

using Mat2 = std::array<Complex, 4>;

Mat2 mul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

const char *to_string(BerryMethod m) { return m == BerryMethod::kAnalytic ? "analytic" : "wilson"; }

double wrap_pi(double x) {
    double w = std::remainder(x, kTwoPi);
    if (w <= -std::numbers::pi) w += kTwoPi;
    return w;
}

double solid_angle(double theta) { return kTwoPi * (1.0 - std::cos(theta)); }

double discrete_berry_phase(std::span<const ComplexVector> loop) {
    if (loop.size() < 2) throw InvalidInput("discrete_berry_phase: loop needs at least two states");
    double gamma = 0.0;
    for (std::size_t k = 0; k < loop.size(); ++k) {
        const auto &next = loop[(k + 1) % loop.size()];
        gamma -= std::arg(inner(loop[k], next));
    }
    return gamma;
}

double berry_analytic(int i, double theta, int steps) {
    require_upper_fixture(i);
    require_steps(steps);
    std::vector<ComplexVector> loop;
    loop.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) loop.push_back(eigenstate_fixture(i, theta, grid_phi(k, steps)).amplitudes());
    return discrete_berry_phase(loop);
}

double berry_naive(int i, double theta, int steps) {
    require_upper_fixture(i);
    require_steps(steps);
    double h = kTwoPi / steps;
    double gamma = 0.0;
    for (int k = 0; k < steps; ++k) {
        auto chi = eigenstate_fixture(i, theta, grid_phi(k, steps)).amplitudes();
        auto fwd = eigenstate_fixture(i, theta, grid_phi(k + 1, steps)).amplitudes();
        auto bwd = eigenstate_fixture(i, theta, grid_phi(k - 1, steps)).amplitudes();
        Complex deriv = inner(chi, fwd - bwd) / (2.0 * h);
        gamma += (kI * deriv).real() * h;
    }
    return gamma;
}

double berry_closed_form(int i, double theta) {
    double half = 0.5 * solid_angle(theta);
    switch (i) {
        case 1: case 2: case 3: case 4: return 0.0;
        case 5: case 7: return half;
        case 6: case 8: return -half;
        default: throw InvalidInput("berry_closed_form: index must be in 1..8");
    }
}

std::vector<double> berry_wilson(Level level, double theta, int steps, double phi_dot, double hbar) {
    if (level == Level::kZero) throw InvalidInput("berry_wilson: zero level has no doublet; use zero_level_phase");
    require_steps(steps);
    DriveParams d{theta, 0.0, phi_dot, hbar};
    d.validate();

    auto first = level_basis(d, level);
    auto prev = first;
    Mat2 w{1.0, 0.0, 0.0, 1.0};
    for (int k = 1; k <= steps; ++k) {
        std::array<ComplexVector, 2> next;
        if (k == steps) {
            next = first;  // close the loop on the identical basis
        } else {
            d.phi = grid_phi(k, steps);
            next = level_basis(d, level);
        }
        Mat2 overlap{inner(prev[0], next[0]), inner(prev[0], next[1]), inner(prev[1], next[0]), inner(prev[1], next[1])};
        w = mul(w, overlap);
        prev = next;
    }

    Complex half_trace = 0.5 * (w[0] + w[3]);
    Complex det = w[0] * w[3] - w[1] * w[2];
    Complex disc = std::sqrt(half_trace * half_trace - det);
    std::vector<double> phases{-std::arg(half_trace + disc), -std::arg(half_trace - disc)};
    for (auto &p : phases) p = wrap_pi(p);
    std::sort(phases.begin(), phases.end());
    return phases;
}

double zero_level_phase(double theta) {
    constexpr int kProbe = 64;
    for (int i = 1; i <= 4; ++i) {
        auto ref = eigenstate_fixture(i, theta, 0.0).amplitudes();
        for (int k = 1; k < kProbe; ++k) {
            auto v = eigenstate_fixture(i, theta, grid_phi(k, kProbe)).amplitudes();
            if (v != ref) throw NumericalFailure("zero_level_phase: fixture depends on phi");
        }
    }
    return 0.0;
}

double BerryReport::max_residual() const {
    double m = 0.0;
    for (double r : residuals) m = std::max(m, r);
    return m;
}

BerryReport berry_report(double theta, Level level, BerryMethod method, int steps) {
    BerryReport rep;
    rep.theta = theta;
    rep.level = level;
    rep.method = method;
    rep.solid_angle = solid_angle(theta);
    for (int i = 1; i <= 8; ++i) {
        if (measured_level(i, theta) == level) rep.states.push_back(i);
    }

    if (level == Level::kZero) {
        double z = zero_level_phase(theta);
        for (int i : rep.states) {
            rep.phases.push_back(z);
            rep.closed_form.push_back(berry_closed_form(i, theta));
        }
    } else if (method == BerryMethod::kAnalytic) {
        for (int i : rep.states) {
            rep.phases.push_back(berry_analytic(i, theta, steps));
            rep.closed_form.push_back(berry_closed_form(i, theta));
        }
    } else {
        rep.phases = berry_wilson(level, theta, steps);
        for (int i : rep.states) rep.closed_form.push_back(berry_closed_form(i, theta));
        // Eigenphases are only defined mod 2 pi; pair them with the closed form
        // in wrapped order.
        std::sort(rep.closed_form.begin(), rep.closed_form.end(),
                  [](double a, double b) { return wrap_pi(a) < wrap_pi(b); });
    }
    for (std::size_t k = 0; k < rep.phases.size() && k < rep.closed_form.size(); ++k) {
        rep.residuals.push_back(std::abs(wrap_pi(rep.phases[k] - rep.closed_form[k])));
    }
    if (rep.phases.size() != rep.closed_form.size()) {
        throw NumericalFailure("berry_report: level dimension does not match its fixture count");
    }
    return rep;
}

}  // namespace ybsys
