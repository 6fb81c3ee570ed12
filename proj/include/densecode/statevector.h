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
 * Dense n-qubit statevector engine.
 *
 * Basis index convention is little-endian: qubit q is bit q of the index, so
 * |q1 q0> = |10> is index 2 and the state with only qubit 0 set is index 1.
 *
 * Operations are pure. They never modify their inputs and return a fresh
 * state. The in-place member functions exist for hot loops that own their
 * state and are the primitives the pure functions are built on.
 */
#ifndef DENSECODE_STATEVECTOR_H
#define DENSECODE_STATEVECTOR_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "densecode/kernels.h"

namespace densecode {

/// Registers above this size are rejected rather than allocated.
inline constexpr size_t kMaxQubits = 26;

inline constexpr double kIdentityTolerance = 1e-12;
inline constexpr double kMeasureTolerance = 1e-9;

struct QubitIndex {
    size_t value;
    constexpr explicit QubitIndex(size_t v) : value(v) {
    }
    friend constexpr bool operator==(QubitIndex, QubitIndex) = default;
};

/// Fixed single-qubit gates.
///
/// `Y` is realized as the product X*Z = [[0, -1], [1, 0]], which equals the
/// textbook Pauli-Y times -i. The global phase has no effect on orthogonality
/// or decoding and keeps every encoding matrix real.
enum class GateName { I, X, Y, Z, H };

class SingleQubitGate {
   public:
    constexpr explicit SingleQubitGate(GateName name) : name_(name) {
    }
    GateName name() const {
        return name_;
    }
    Matrix2 matrix() const;
    std::string_view label() const;

   private:
    GateName name_;
};

inline const SingleQubitGate kGateI{GateName::I};
inline const SingleQubitGate kGateX{GateName::X};
inline const SingleQubitGate kGateY{GateName::Y};
inline const SingleQubitGate kGateZ{GateName::Z};
inline const SingleQubitGate kGateH{GateName::H};

class StateVector {
   public:
    /// Wraps raw amplitudes. The length must be 2^n with 1 <= n <= kMaxQubits.
    /// No normalization is imposed; callers building superpositions by hand
    /// are responsible for it.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dimension() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    const Complex &operator[](size_t index) const {
        return amplitudes_[index];
    }

    double norm_squared() const;

    void apply_inplace(const SingleQubitGate &gate, QubitIndex target);
    void apply_cnot_inplace(QubitIndex control, QubitIndex target);

   private:
    StateVector(size_t num_qubits, std::vector<Complex> amplitudes);
    friend StateVector make_basis_state(size_t num_qubits, uint64_t basis_index);

    void check_qubit(QubitIndex q, std::string_view role) const;

    size_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Computational basis state |basis_index> on num_qubits qubits.
StateVector make_basis_state(size_t num_qubits, uint64_t basis_index);

StateVector apply_single_qubit_gate(const StateVector &state, const SingleQubitGate &gate, QubitIndex target);

StateVector apply_cnot(const StateVector &state, QubitIndex control, QubitIndex target);

/// <a|b> = sum_i conj(a_i) b_i.
Complex inner_product(const StateVector &a, const StateVector &b);

/// Index k with |amplitude_k|^2 >= 1 - tol. Throws NonDeterministicOutcome
/// carrying the largest probability seen when no such index exists.
uint64_t measure_all_deterministic(const StateVector &state, double tol = kMeasureTolerance);

/// Same as measure_all_deterministic, also reporting the winning probability.
struct Readout {
    uint64_t basis_index;
    double probability;
};
Readout readout_deterministic(const StateVector &state, double tol = kMeasureTolerance);

}  // namespace densecode

#endif
