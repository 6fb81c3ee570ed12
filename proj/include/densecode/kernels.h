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

/**
 * @file
 * Amplitude-array kernels behind the statevector engine.
 *
 * Every kernel has a portable scalar reference implementation. On x86-64 an
 * AVX2+FMA variant is also compiled (in its own translation unit, with the
 * matching target flags) and selected at runtime when the CPU supports it.
 * The scalar set is the ground truth: the SIMD set is equivalence-tested
 * against it on random states.
 *
 * All kernels operate in place on interleaved complex<double> storage of
 * length 2^num_qubits, qubit 0 being the least significant index bit.
 * Index arguments are assumed already validated by the caller.
 */
#ifndef DENSECODE_KERNELS_H
#define DENSECODE_KERNELS_H

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace densecode {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

namespace kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend backend);

struct KernelTable {
    Backend backend;
    void (*apply_matrix)(std::span<Complex> amps, size_t target, const Matrix2 &m);
    void (*apply_cnot)(std::span<Complex> amps, size_t control, size_t target);
    Complex (*inner_product)(std::span<const Complex> a, std::span<const Complex> b);
    double (*norm_squared)(std::span<const Complex> a);
};

/// Reference implementations, always available.
const KernelTable &scalar_table();

/// AVX2+FMA implementations, or nullptr when not compiled in or the running
/// CPU lacks the instructions.
const KernelTable *avx2_table();

/// Best backend for this machine.
Backend detect_best_backend();

/// Table currently used by the statevector engine. Defaults to
/// detect_best_backend().
const KernelTable &active();

/// Forces a backend. Returns false (and changes nothing) when the backend is
/// unavailable on this machine.
bool set_backend(Backend backend);

}  // namespace kernels
}  // namespace densecode

#endif
