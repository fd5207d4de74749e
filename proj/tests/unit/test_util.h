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

#ifndef YBSYS_TESTS_TEST_UTIL_H
#define YBSYS_TESTS_TEST_UTIL_H

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ybsys/linalg.h"

namespace ybsys::testing {

inline constexpr double kPi = std::numbers::pi;

inline ComplexMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<Complex> e(rows * cols);
    for (auto &z : e) z = {n(rng), n(rng)};
    return ComplexMatrix(rows, cols, std::move(e));
}

inline ComplexMatrix random_hermitian(std::mt19937_64 &rng, std::size_t n) {
    auto a = random_matrix(rng, n, n);
    return (a + dagger(a)) * Complex(0.5);
}

inline ComplexVector random_state(std::mt19937_64 &rng, std::size_t dim) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<Complex> e(dim);
    for (auto &z : e) z = {n(rng), n(rng)};
    return ComplexVector(std::move(e)).normalized();
}

inline double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// n points uniformly from lo to hi inclusive.
inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    for (int k = 0; k < n; ++k) out.push_back(lo + (hi - lo) * k / (n - 1));
    return out;
}

}  // namespace ybsys::testing

#endif
