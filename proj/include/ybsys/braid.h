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

#ifndef YBSYS_BRAID_H
#define YBSYS_BRAID_H

#include <string>
#include <vector>

#include "ybsys/linalg.h"

namespace ybsys {

/// Single-site spin-1/2 operators. |0> is the S3 = +1/2 state and
/// S+ = |0><1|, so S+ S+ |11> = |00>.
struct SpinOps {
    ComplexMatrix s_plus;
    ComplexMatrix s_minus;
    ComplexMatrix s3;
};

const SpinOps &spin_ops();

/// `op` acting on `site` (0 = most significant) of an `n_sites` chain.
ComplexMatrix site_op(const ComplexMatrix &op, int site, int n_sites);

/// Two-site generator
///   M = e^{-i phi} S+S+ - e^{i phi} S-S- + S+S- - S-S+,
/// built from spin operators. Anti-Hermitian with M^2 = -I.
ComplexMatrix build_m4(double phi);

/// The 4x4 matrix exactly as printed in the source text (entries (3,2) = +1 and
/// (4,4) = 1). Kept only for diagnostics; it is not a valid generator.
ComplexMatrix printed_m4(double phi);

/// The printed 8x8 composite matrix, transcribed entry by entry.
ComplexMatrix printed_composite(double phi);

struct BraidSet {
    double phi = 0.0;
    ComplexMatrix m4;    // M
    ComplexMatrix a8;    // M (x) I
    ComplexMatrix b8;    // I (x) M
    ComplexMatrix mcal;  // (a8 + b8 + b8 a8) / sqrt(3)
    ComplexMatrix mbb;   // -i mcal, Hermitian involution
    double alpha = 0.0;  // measured: tr(mbb^2) / 8
};

BraidSet build_braidset(double phi);

struct RelationCheck {
    std::string name;
    double residual = 0.0;
    bool pass = false;
    bool gating = true;  // false: reported only, never fails a run
};

struct RelationReport {
    double phi = 0.0;
    double alpha = 0.0;
    std::vector<RelationCheck> checks;

    bool all_gating_pass() const;
    const RelationCheck &at(const std::string &name) const;
};

/// Extraspecial 2-group relations and their residuals:
///   m4_square        ||M^2 + I_4||
///   aba              ||A B A - B||     (A = M (x) I, B = I (x) M)
///   bab              ||B A B - A||
///   anticommute      ||A B + B A||
///   mbb_square       ||Mbb^2 - alpha I||, alpha measured
///   mbb_hermitian    ||Mbb - Mbb^dagger||
///   mcal_antihermitian
/// plus non-gating readings of the mixed relation on a four-site chain with
/// X = Mbb (x) I, Y = I (x) Mbb: as printed (XYX = X, YXY = Y) and with the
/// right-hand sides swapped (XYX = Y, YXY = X). Diagnostics against the
/// printed 4x4 and 8x8 matrices are also non-gating.
RelationReport check_es2_relations(const BraidSet &bs, double tol = kDefaultTol);

}  // namespace ybsys

#endif
