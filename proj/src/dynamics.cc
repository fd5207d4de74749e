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

#include "ybsys/dynamics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ybsys/braid.h"
#include "ybsys/errors.h"
#include "ybsys/yangbaxter.h"

namespace ybsys {

namespace {

struct ThreeSiteSpins {
    ComplexMatrix plus[3];
    ComplexMatrix minus[3];
    ComplexMatrix z[3];
};

const ThreeSiteSpins &three_site_spins() {
    static const ThreeSiteSpins ops = [] {
        const auto &s = spin_ops();
        ThreeSiteSpins o;
        for (int k = 0; k < 3; ++k) {
            o.plus[k] = site_op(s.s_plus, k, 3);
            o.minus[k] = site_op(s.s_minus, k, 3);
            o.z[k] = site_op(s.s3, k, 3);
        }
        return o;
    }();
    return ops;
}

// Pair creation/annihilation part, multiplied by sin cos / sqrt(3).
ComplexMatrix pairing_terms(double phi) {
    const auto &o = three_site_spins();
    Complex em = std::polar(1.0, -phi);
    Complex ep = std::polar(1.0, phi);
    return o.z[1] * (o.plus[0] * o.plus[2] * em + o.minus[0] * o.minus[2] * ep) * Complex(2.0) +
           (o.plus[0] * o.plus[1] + o.plus[1] * o.plus[2]) * em + (o.minus[0] * o.minus[1] + o.minus[1] * o.minus[2]) * ep;
}

// Field and hopping part, multiplied by cos^2 / 3.
ComplexMatrix hopping_terms() {
    const auto &o = three_site_spins();
    return (o.z[0] + o.z[1] + o.z[2]) * Complex(2.0) +
           o.z[1] * (o.plus[0] * o.minus[2] + o.minus[0] * o.plus[2]) * Complex(2.0) -
           (o.plus[0] * o.minus[1] + o.plus[1] * o.minus[2] + o.minus[0] * o.plus[1] + o.minus[1] * o.plus[2]);
}

double residual(const ComplexMatrix &h, const ComplexVector &v, double energy) {
    return (h * v - v * Complex(energy)).norm();
}

}  // namespace

void DriveParams::validate() const {
    if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(phi_dot) || !std::isfinite(hbar)) {
        throw InvalidInput("DriveParams: non-finite field");
    }
    if (hbar <= 0.0) throw InvalidInput("DriveParams: hbar must be positive");
}

double DriveParams::level_energy() const { return hbar * phi_dot * std::cos(theta); }

const char *to_string(Level l) {
    switch (l) {
        case Level::kZero: return "zero";
        case Level::kMinus: return "minus";
        case Level::kPlus: return "plus";
    }
    return "?";
}

ComplexMatrix hamiltonian(const DriveParams &d) {
    d.validate();
    double s = std::sin(d.theta);
    double c = std::cos(d.theta);
    double scale = d.hbar * d.phi_dot;
    return pairing_terms(d.phi) * Complex(scale * s * c / std::sqrt(3.0)) + hopping_terms() * Complex(scale * c * c / 3.0);
}

ComplexMatrix level_operator(double theta, double phi) {
    return pairing_terms(phi) * Complex(std::sin(theta) / std::sqrt(3.0)) +
           hopping_terms() * Complex(std::cos(theta) / 3.0);
}

ComplexMatrix hamiltonian_from_r(const DriveParams &d, double dt) {
    d.validate();
    if (!(dt > 0.0 && dt <= 1e-3)) throw InvalidInput("hamiltonian_from_r: dt must lie in (0, 1e-3]");
    auto r = [&](double phi) { return r_matrix(System::kThreeQubit, {d.theta, phi}); };
    auto derivative = (r(d.phi + d.phi_dot * dt) - r(d.phi - d.phi_dot * dt)) * Complex(1.0 / (2.0 * dt));
    return derivative * dagger(r(d.phi)) * Complex(0.0, d.hbar);
}

Su2Ops su2_ops(const DriveParams &d) {
    d.validate();
    const auto &o = three_site_spins();
    Su2Ops out;
    out.i_plus = o.plus[0] * o.plus[1] + o.plus[1] * o.plus[2] + o.z[1] * o.plus[0] * o.plus[2] * Complex(2.0);
    out.i_minus = o.minus[0] * o.minus[1] + o.minus[1] * o.minus[2] + o.z[1] * o.minus[0] * o.minus[2] * Complex(2.0);
    out.i_3 = o.z[0] + o.z[1] + o.z[2] + o.z[1] * (o.plus[0] * o.minus[2] + o.minus[0] * o.plus[2]) -
              (o.plus[0] * o.minus[1] + o.minus[0] * o.plus[1] + o.plus[1] * o.minus[2] + o.minus[1] * o.plus[2]) *
                  Complex(0.5);
    double sc = d.hbar * d.phi_dot * std::sin(d.theta) * std::cos(d.theta) / std::sqrt(3.0);
    out.b_plus = std::polar(sc, -d.phi);
    out.b_minus = std::conj(out.b_plus);
    double c = std::cos(d.theta);
    out.b_3 = 2.0 / 3.0 * d.hbar * d.phi_dot * c * c;
    return out;
}

Su2Report su2_relations(const DriveParams &d) {
    auto ops = su2_ops(d);
    const auto &ip = ops.i_plus;
    const auto &im = ops.i_minus;
    const auto &i3 = ops.i_3;
    auto id = ComplexMatrix::identity(8);

    Su2Report r;
    r.i_plus_square = (ip * ip).frobenius_norm();
    r.i_minus_square = (im * im).frobenius_norm();
    r.i_minus_is_dagger = frobenius_distance(im, dagger(ip));
    r.raising_commutator = frobenius_distance(commutator(ip, im), i3 * Complex(2.0));
    auto c3p = commutator(i3, ip);
    r.i3_plus = frobenius_distance(c3p, ip);
    r.i3_minus = frobenius_distance(commutator(i3, im), -im);

    Complex num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < ip.entries().size(); ++k) {
        num += std::conj(ip.entries()[k]) * c3p.entries()[k];
        den += std::norm(ip.entries()[k]);
    }
    r.ladder_coefficient = den > 0.0 ? (num / den).real() : 0.0;
    r.ladder_coefficient_residual = frobenius_distance(c3p, ip * Complex(r.ladder_coefficient));

    auto h = hamiltonian(d);
    r.decomposition = frobenius_distance(h, ip * ops.b_plus + im * ops.b_minus + i3 * Complex(ops.b_3));

    auto defect = i3 * i3 - id * Complex(0.25);
    r.i3_square_global = defect.frobenius_norm();
    std::vector<ComplexVector> upper;
    for (int i = 5; i <= 8; ++i) upper.push_back(eigenstate_fixture(i, d.theta, d.phi).amplitudes());
    auto q = ComplexMatrix::from_columns(orthonormalize(upper));
    r.i3_square_restricted = (dagger(q) * defect * q).frobenius_norm();
    return r;
}

ThreeQubitState eigenstate_fixture(int i, double theta, double phi) {
    double sh = std::sin(theta / 2.0);
    double ch = std::cos(theta / 2.0);
    double r3 = 1.0 / std::sqrt(3.0);
    double r2 = 1.0 / std::sqrt(2.0);
    Complex em = std::polar(1.0, -phi);
    Complex ep = std::polar(1.0, phi);

    std::vector<std::pair<const char *, Complex>> terms;
    switch (i) {
        case 1: terms = {{"011", -r2}, {"110", r2}}; break;
        case 2: terms = {{"001", -r2}, {"100", r2}}; break;
        case 3: terms = {{"011", -r2}, {"101", r2}}; break;
        case 4: terms = {{"001", r2}, {"010", r2}}; break;
        case 5: terms = {{"001", -r3 * em * sh}, {"010", r3 * em * sh}, {"100", -r3 * em * sh}, {"111", ch}}; break;
        case 6: terms = {{"001", r3 * ch}, {"010", -r3 * ch}, {"100", r3 * ch}, {"111", ep * sh}}; break;
        case 7: terms = {{"000", -em * sh}, {"011", r3 * ch}, {"101", r3 * ch}, {"110", r3 * ch}}; break;
        case 8: terms = {{"000", ch}, {"011", r3 * ep * sh}, {"101", r3 * ep * sh}, {"110", r3 * ep * sh}}; break;
        default: throw InvalidInput("eigenstate_fixture: index must be in 1..8, got " + std::to_string(i));
    }
    std::vector<Complex> amp(8);
    for (const auto &[label, value] : terms) amp[basis_index(label)] += value;
    return ThreeQubitState(ComplexVector(std::move(amp)));
}

Level listed_level(int i) {
    if (i >= 1 && i <= 4) return Level::kZero;
    if (i == 5 || i == 6) return Level::kMinus;
    if (i == 7 || i == 8) return Level::kPlus;
    throw InvalidInput("listed_level: index must be in 1..8");
}

double listed_energy(int i, const DriveParams &d) { return static_cast<int>(listed_level(i)) * d.level_energy(); }

Level measured_level(int i, double theta) {
    auto chi = eigenstate_fixture(i, theta, 0.0).amplitudes();
    double label = inner(chi, level_operator(theta, 0.0) * chi).real();
    long rounded = std::lround(label);
    if (std::abs(label - static_cast<double>(rounded)) > 1e-8 || rounded < -1 || rounded > 1) {
        throw NumericalFailure("measured_level: fixture " + std::to_string(i) + " is not in a single level");
    }
    return static_cast<Level>(rounded);
}

std::vector<int> degeneracy_pattern(const std::vector<double> &sorted, double gap) {
    std::vector<int> pattern;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (k == 0 || sorted[k] - sorted[k - 1] > gap) {
            pattern.push_back(1);
        } else {
            ++pattern.back();
        }
    }
    return pattern;
}

SpectrumReport spectrum(const DriveParams &d) {
    auto h = hamiltonian(d);
    SpectrumReport rep;
    rep.drive = d;
    rep.hermiticity = frobenius_distance(h, dagger(h));
    auto eig = eigh(h);
    rep.eigenvalues = eig.eigenvalues;
    rep.eigenvectors = eig.eigenvectors;

    double hnorm = h.frobenius_norm();
    double gap = 1e-8 * std::max(hnorm, d.hbar * std::abs(d.phi_dot));
    rep.degeneracy_pattern = degeneracy_pattern(rep.eigenvalues, gap);

    double e = std::abs(d.level_energy());
    rep.closed_form = {-e, -e, 0.0, 0.0, 0.0, 0.0, e, e};
    for (std::size_t k = 0; k < 8; ++k) {
        rep.closed_form_match = std::max(rep.closed_form_match, std::abs(rep.eigenvalues[k] - rep.closed_form[k]));
    }

    for (int i = 1; i <= 8; ++i) {
        auto chi = eigenstate_fixture(i, d.theta, d.phi).amplitudes();
        FixtureCheck f;
        f.index = i;
        f.listed_energy = listed_energy(i, d);
        f.listed_residual = residual(h, chi, f.listed_energy);
        f.measured_energy = inner(chi, h * chi).real();
        f.measured_residual = residual(h, chi, f.measured_energy);
        f.measured_level = measured_level(i, d.theta);
        rep.fixtures.push_back(f);
    }

    // Projector comparison needs the three levels separated.
    if (e > 1e-8 && e > gap) {
        for (Level level : {Level::kZero, Level::kMinus, Level::kPlus}) {
            double target = static_cast<int>(level) * d.level_energy();
            std::vector<ComplexVector> numeric;
            for (std::size_t k = 0; k < 8; ++k) {
                if (std::abs(rep.eigenvalues[k] - target) <= std::max(gap, 1e-10)) numeric.push_back(rep.eigenvectors[k]);
            }
            LevelProjectorCheck pc;
            pc.level = level;
            std::vector<ComplexVector> listed, measured;
            for (const auto &f : rep.fixtures) {
                auto chi = eigenstate_fixture(f.index, d.theta, d.phi).amplitudes();
                if (listed_level(f.index) == level) {
                    pc.listed_states.push_back(f.index);
                    listed.push_back(chi);
                }
                if (f.measured_level == level) {
                    pc.measured_states.push_back(f.index);
                    measured.push_back(chi);
                }
            }
            auto p_numeric = projector(numeric);
            auto distance_to = [&](const std::vector<ComplexVector> &set) {
                if (set.empty()) return p_numeric.frobenius_norm();
                return frobenius_distance(p_numeric, projector(orthonormalize(set)));
            };
            pc.listed_distance = distance_to(listed);
            pc.measured_distance = distance_to(measured);
            rep.projectors.push_back(std::move(pc));
        }
    }
    return rep;
}

}  // namespace ybsys
