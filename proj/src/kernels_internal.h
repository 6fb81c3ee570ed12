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

#ifndef DENSECODE_KERNELS_INTERNAL_H
#define DENSECODE_KERNELS_INTERNAL_H

#include <algorithm>
#include <cstddef>
#include <span>

#include "densecode/kernels.h"

namespace densecode::kernels {

namespace scalar {
void apply_matrix(std::span<Complex> amps, size_t target, const Matrix2 &m);
void apply_cnot(std::span<Complex> amps, size_t control, size_t target);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
double norm_squared(std::span<const Complex> a);
}  // namespace scalar

/// Null when the AVX2 translation unit was not compiled.
const KernelTable *avx2_table_unchecked();

/// Spreads k apart so that bit position `bit` of the result is zero.
inline size_t insert_zero_bit(size_t k, size_t bit) {
    size_t low = k & ((size_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

inline size_t insert_two_zero_bits(size_t k, size_t bit_a, size_t bit_b) {
    size_t lo = std::min(bit_a, bit_b);
    size_t hi = std::max(bit_a, bit_b);
    return insert_zero_bit(insert_zero_bit(k, lo), hi);
}

}  // namespace densecode::kernels

#endif
