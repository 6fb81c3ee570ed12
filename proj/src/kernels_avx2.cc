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

// This translation unit is compiled with -mavx2 -mfma. Nothing in it may run
// before the dispatcher has confirmed CPU support.

#include <immintrin.h>

#include "densecode/kernels.h"
#include "kernels_internal.h"

namespace densecode::kernels {
namespace {

// A __m256d holds two complex numbers: [re0, im0, re1, im1].

inline __m256d load2(const Complex *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(Complex *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

inline __m256d swap_re_im(__m256d v) {
    return _mm256_permute_pd(v, 0b0101);
}

/// Lane-wise complex product (c_re + i c_im) * x, where c_re/c_im hold the
/// real/imaginary parts of each lane's coefficient duplicated across the pair.
inline __m256d cmul(__m256d c_re, __m256d c_im, __m256d x) {
    return _mm256_fmaddsub_pd(c_re, x, _mm256_mul_pd(c_im, swap_re_im(x)));
}

struct Coef {
    __m256d re;
    __m256d im;
};

inline Coef broadcast(Complex c) {
    return {_mm256_set1_pd(c.real()), _mm256_set1_pd(c.imag())};
}

/// Coefficient c0 in lane 0 and c1 in lane 1.
inline Coef lanes(Complex c0, Complex c1) {
    return {_mm256_setr_pd(c0.real(), c0.real(), c1.real(), c1.real()),
            _mm256_setr_pd(c0.imag(), c0.imag(), c1.imag(), c1.imag())};
}

void apply_matrix_low(std::span<Complex> amps, const Matrix2 &m) {
    // Both amplitudes of a pair share one register: [a0, a1] -> [m00 a0 + m01 a1, m10 a0 + m11 a1].
    const Coef first = lanes(m[0], m[2]);
    const Coef second = lanes(m[1], m[3]);
    for (size_t i = 0; i < amps.size(); i += 2) {
        __m256d v = load2(&amps[i]);
        __m256d a0 = _mm256_permute2f128_pd(v, v, 0x00);
        __m256d a1 = _mm256_permute2f128_pd(v, v, 0x11);
        __m256d r = _mm256_add_pd(cmul(first.re, first.im, a0), cmul(second.re, second.im, a1));
        store2(&amps[i], r);
    }
}

void apply_matrix(std::span<Complex> amps, size_t target, const Matrix2 &m) {
    if (target == 0) {
        apply_matrix_low(amps, m);
        return;
    }
    const Coef m00 = broadcast(m[0]);
    const Coef m01 = broadcast(m[1]);
    const Coef m10 = broadcast(m[2]);
    const Coef m11 = broadcast(m[3]);
    const size_t half = amps.size() / 2;
    const size_t step = size_t{1} << target;
    // With target >= 1, indices i0 and i0 + 1 both have the target bit clear.
    for (size_t k = 0; k < half; k += 2) {
        size_t i0 = insert_zero_bit(k, target);
        size_t i1 = i0 | step;
        __m256d a0 = load2(&amps[i0]);
        __m256d a1 = load2(&amps[i1]);
        __m256d r0 = _mm256_add_pd(cmul(m00.re, m00.im, a0), cmul(m01.re, m01.im, a1));
        __m256d r1 = _mm256_add_pd(cmul(m10.re, m10.im, a0), cmul(m11.re, m11.im, a1));
        store2(&amps[i0], r0);
        store2(&amps[i1], r1);
    }
}

void apply_cnot(std::span<Complex> amps, size_t control, size_t target) {
    if (control == 0 || target == 0) {
        scalar::apply_cnot(amps, control, target);
        return;
    }
    const size_t quarter = amps.size() / 4;
    const size_t cbit = size_t{1} << control;
    const size_t tbit = size_t{1} << target;
    for (size_t k = 0; k < quarter; k += 2) {
        size_t i = insert_two_zero_bits(k, control, target) | cbit;
        size_t j = i | tbit;
        __m256d x = load2(&amps[i]);
        __m256d y = load2(&amps[j]);
        store2(&amps[i], y);
        store2(&amps[j], x);
    }
}

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    // re(conj(a) b) = ar br + ai bi ; im(conj(a) b) = ar bi - ai br
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    const size_t n = a.size();
    size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d va = load2(&a[k]);
        __m256d vb = load2(&b[k]);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        acc_im = _mm256_fmadd_pd(va, swap_re_im(vb), acc_im);
    }
    // acc_im lanes are [ar bi, ai br, ...]; the odd terms enter with a minus sign.
    const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
    Complex total{hsum(acc_re), hsum(_mm256_mul_pd(acc_im, sign))};
    if (k < n) {
        total += scalar::inner_product(a.subspan(k), b.subspan(k));
    }
    return total;
}

double norm_squared(std::span<const Complex> a) {
    __m256d acc = _mm256_setzero_pd();
    const size_t n = a.size();
    size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d v = load2(&a[k]);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double total = hsum(acc);
    if (k < n) {
        total += scalar::norm_squared(a.subspan(k));
    }
    return total;
}

}  // namespace

const KernelTable *avx2_table_unchecked() {
    static const KernelTable table{
        Backend::Avx2,
        &apply_matrix,
        &apply_cnot,
        &inner_product,
        &norm_squared,
    };
    return &table;
}

}  // namespace densecode::kernels
