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

#include <atomic>

#include "densecode/kernels.h"
#include "kernels_internal.h"

namespace densecode::kernels {

#ifndef DENSECODE_HAVE_AVX2
const KernelTable *avx2_table_unchecked() {
    return nullptr;
}
#endif

namespace {

bool cpu_has_avx2_fma() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable &table_for(Backend backend) {
    if (backend == Backend::Avx2) {
        if (const KernelTable *t = avx2_table()) {
            return *t;
        }
    }
    return scalar_table();
}

std::atomic<const KernelTable *> &active_slot() {
    static std::atomic<const KernelTable *> slot{&table_for(detect_best_backend())};
    return slot;
}

}  // namespace

std::string_view backend_name(Backend backend) {
    switch (backend) {
        case Backend::Scalar:
            return "scalar";
        case Backend::Avx2:
            return "avx2";
    }
    return "unknown";
}

const KernelTable *avx2_table() {
    static const bool supported = cpu_has_avx2_fma();
    return supported ? avx2_table_unchecked() : nullptr;
}

Backend detect_best_backend() {
    return avx2_table() != nullptr ? Backend::Avx2 : Backend::Scalar;
}

const KernelTable &active() {
    return *active_slot().load(std::memory_order_acquire);
}

bool set_backend(Backend backend) {
    if (backend == Backend::Avx2 && avx2_table() == nullptr) {
        return false;
    }
    active_slot().store(&table_for(backend), std::memory_order_release);
    return true;
}

}  // namespace densecode::kernels
