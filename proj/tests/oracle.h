// Copyright 2026 The densecode Authors
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

// Test-only reference simulator. Gates are materialized as full 2^n x 2^n
// operators from their per-entry definition and applied by plain
// matrix-vector multiplication, sharing no code with the kernels.

#ifndef DENSECODE_TESTS_ORACLE_H
#define DENSECODE_TESTS_ORACLE_H

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Vec = std::vector<C>;
using Mat = std::vector<std::vector<C>>;

inline const C kI{0, 1};
inline const double kS = 1 / std::sqrt(2.0);

inline Mat gate_h() {
    return {{kS, kS}, {kS, -kS}};
}
inline Mat gate_x() {
    return {{0, 1}, {1, 0}};
}
inline Mat gate_z() {
    return {{1, 0}, {0, -1}};
}
/// X times Z as a matrix product.
inline Mat gate_xz() {
    Mat x = gate_x(), z = gate_z(), r(2, std::vector<C>(2));
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++)
            for (int k = 0; k < 2; k++) r[i][j] += x[i][k] * z[k][j];
    return r;
}

inline int bit(uint64_t v, unsigned q) {
    return static_cast<int>((v >> q) & 1);
}

/// Operator for a 2x2 gate on qubit `target` of an n-qubit register:
/// U[i][j] = g[i_t][j_t] if i and j agree outside bit t, else 0.
inline Mat lift(unsigned n, unsigned target, const Mat &g) {
    uint64_t dim = uint64_t{1} << n;
    uint64_t mask = ~(uint64_t{1} << target);
    Mat u(dim, std::vector<C>(dim));
    for (uint64_t i = 0; i < dim; i++)
        for (uint64_t j = 0; j < dim; j++)
            if ((i & mask) == (j & mask)) u[i][j] = g[bit(i, target)][bit(j, target)];
    return u;
}

/// Permutation operator of CNOT: |i> -> |i ^ (c_bit(i) << t)>.
inline Mat cnot(unsigned n, unsigned control, unsigned target) {
    uint64_t dim = uint64_t{1} << n;
    Mat u(dim, std::vector<C>(dim));
    for (uint64_t j = 0; j < dim; j++) {
        uint64_t i = bit(j, control) ? j ^ (uint64_t{1} << target) : j;
        u[i][j] = 1;
    }
    return u;
}

inline Vec apply(const Mat &u, const Vec &v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); i++)
        for (size_t j = 0; j < v.size(); j++) out[i] += u[i][j] * v[j];
    return out;
}

inline Vec basis(unsigned n, uint64_t k) {
    Vec v(uint64_t{1} << n);
    v[k] = 1;
    return v;
}

inline C dot(const Vec &a, const Vec &b) {
    C s = 0;
    for (size_t i = 0; i < a.size(); i++) s += std::conj(a[i]) * b[i];
    return s;
}

/// Random unit vector with Gaussian components.
inline Vec random_state(unsigned n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vec v(uint64_t{1} << n);
    double norm = 0;
    for (auto &z : v) {
        z = C(g(rng), g(rng));
        norm += std::norm(z);
    }
    for (auto &z : v) z /= std::sqrt(norm);
    return v;
}

}  // namespace oracle

#endif
