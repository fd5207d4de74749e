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

#include "ybsys/braid.h"

#include <cmath>

#include "ybsys/errors.h"

namespace ybsys {

const SpinOps &spin_ops() {
    static const SpinOps ops{
        ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}},
        ComplexMatrix{{0.0, 0.0}, {1.0, 0.0}},
        ComplexMatrix{{0.5, 0.0}, {0.0, -0.5}},
    };
    return ops;
}

ComplexMatrix site_op(const ComplexMatrix &op, int site, int n_sites) {
    if (site < 0 || site >= n_sites) throw InvalidInput("site_op: site out of range");
    ComplexMatrix out = ComplexMatrix::identity(1);
    auto id2 = ComplexMatrix::identity(2);
    for (int k = 0; k < n_sites; ++k) out = kron(out, k == site ? op : id2);
    return out;
}

ComplexMatrix build_m4(double phi) {
    const auto &s = spin_ops();
    Complex em = std::polar(1.0, -phi);
    Complex ep = std::polar(1.0, phi);
    return em * kron(s.s_plus, s.s_plus) - ep * kron(s.s_minus, s.s_minus) + kron(s.s_plus, s.s_minus) -
           kron(s.s_minus, s.s_plus);
}

ComplexMatrix printed_m4(double phi) {
    Complex em = std::polar(1.0, -phi);
    Complex ep = std::polar(1.0, phi);
    return ComplexMatrix{
        {0.0, 0.0, 0.0, em},
        {0.0, 0.0, 1.0, 0.0},
        {0.0, 1.0, 0.0, 0.0},
        {-ep, 0.0, 0.0, 1.0},
    };
}

ComplexMatrix printed_composite(double phi) {
    Complex e = std::polar(1.0, -phi);
    Complex f = std::polar(1.0, phi);
    ComplexMatrix raw{
        {0.0, 0.0, 0.0, e, 0.0, e, e, 0.0},
        {0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, e},
        {0.0, -1.0, 0.0, 0.0, 1.0, 0.0, 0.0, -e},
        {-f, 0.0, 0.0, 0.0, 0.0, 1.0, -1.0, 0.0},
        {0.0, -1.0, -1.0, 0.0, 0.0, 0.0, 0.0, e},
        {-f, 0.0, 0.0, -1.0, 0.0, 0.0, 1.0, 0.0},
        {-f, 0.0, 0.0, 1.0, 0.0, -1.0, 0.0, 0.0},
        {0.0, -f, f, 0.0, -f, 0.0, 0.0, 0.0},
    };
    return raw * Complex(1.0 / std::sqrt(3.0));
}

BraidSet build_braidset(double phi) {
    BraidSet bs;
    bs.phi = phi;
    bs.m4 = build_m4(phi);
    auto id2 = ComplexMatrix::identity(2);
    bs.a8 = kron(bs.m4, id2);
    bs.b8 = kron(id2, bs.m4);
    bs.mcal = (bs.a8 + bs.b8 + bs.b8 * bs.a8) * Complex(1.0 / std::sqrt(3.0));
    bs.mbb = bs.mcal * Complex(0.0, -1.0);
    bs.alpha = (bs.mbb * bs.mbb).trace().real() / 8.0;
    return bs;
}

bool RelationReport::all_gating_pass() const {
    for (const auto &c : checks) {
        if (c.gating && !c.pass) return false;
    }
    return true;
}

const RelationCheck &RelationReport::at(const std::string &name) const {
    for (const auto &c : checks) {
        if (c.name == name) return c;
    }
    throw InvalidInput("RelationReport: no check named " + name);
}

RelationReport check_es2_relations(const BraidSet &bs, double tol) {
    RelationReport rep;
    rep.phi = bs.phi;
    rep.alpha = bs.alpha;
    auto add = [&](std::string name, double residual, bool gating) {
        rep.checks.push_back({std::move(name), residual, residual <= tol, gating});
    };

    const auto &a = bs.a8;
    const auto &b = bs.b8;
    add("m4_square", frobenius_distance(bs.m4 * bs.m4, -ComplexMatrix::identity(4)), true);
    add("aba", frobenius_distance(a * b * a, b), true);
    add("bab", frobenius_distance(b * a * b, a), true);
    add("anticommute", anticommutator(a, b).frobenius_norm(), true);
    add("mbb_square", frobenius_distance(bs.mbb * bs.mbb, ComplexMatrix::identity(8) * Complex(bs.alpha)), true);
    add("mbb_hermitian", frobenius_distance(bs.mbb, dagger(bs.mbb)), true);
    add("mcal_antihermitian", frobenius_distance(bs.mcal, -dagger(bs.mcal)), true);

    // Mixed relation on four sites; the realization of the subscripts is a choice.
    auto id2 = ComplexMatrix::identity(2);
    auto x = kron(bs.mbb, id2);
    auto y = kron(id2, bs.mbb);
    auto xyx = x * y * x;
    auto yxy = y * x * y;
    add("mixed_as_printed_xyx_eq_x", frobenius_distance(xyx, x), false);
    add("mixed_as_printed_yxy_eq_y", frobenius_distance(yxy, y), false);
    add("mixed_swapped_xyx_eq_y", frobenius_distance(xyx, y), false);
    add("mixed_swapped_yxy_eq_x", frobenius_distance(yxy, x), false);

    add("printed_m4_distance", frobenius_distance(printed_m4(bs.phi), bs.m4), false);
    add("printed_composite_distance", frobenius_distance(printed_composite(bs.phi), bs.mcal), false);
    return rep;
}

}  // namespace ybsys
