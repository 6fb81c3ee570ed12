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

#include <utility>

#include "densecode/kernels.h"
#include "kernels_internal.h"

namespace densecode::kernels {
namespace scalar {

void apply_matrix(std::span<Complex> amps, size_t target, const Matrix2 &m) {
    const size_t half = amps.size() / 2;
    const size_t step = size_t{1} << target;
    for (size_t k = 0; k < half; k++) {
        size_t i0 = insert_zero_bit(k, target);
        size_t i1 = i0 | step;
        Complex a0 = amps[i0];
        Complex a1 = amps[i1];
        amps[i0] = m[0] * a0 + m[1] * a1;
        amps[i1] = m[2] * a0 + m[3] * a1;
    }
}

void apply_cnot(std::span<Complex> amps, size_t control, size_t target) {
    const size_t quarter = amps.size() / 4;
    const size_t cbit = size_t{1} << control;
    const size_t tbit = size_t{1} << target;
    for (size_t k = 0; k < quarter; k++) {
        size_t i = insert_two_zero_bits(k, control, target) | cbit;
        std::swap(amps[i], amps[i | tbit]);
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    double re = 0;
    double im = 0;
    for (size_t k = 0; k < a.size(); k++) {
        // conj(a) * b
        re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
        im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
    }
    return {re, im};
}

double norm_squared(std::span<const Complex> a) {
    double total = 0;
    for (const Complex &z : a) {
        total += z.real() * z.real() + z.imag() * z.imag();
    }
    return total;
}

}  // namespace scalar

const KernelTable &scalar_table() {
    static const KernelTable table{
        Backend::Scalar,
        &scalar::apply_matrix,
        &scalar::apply_cnot,
        &scalar::inner_product,
        &scalar::norm_squared,
    };
    return table;
}

}  // namespace densecode::kernels
