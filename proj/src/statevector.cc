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

#include "densecode/statevector.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "densecode/errors.h"

namespace densecode {

Matrix2 SingleQubitGate::matrix() const {
    switch (name_) {
        case GateName::I:
            return {1.0, 0.0, 0.0, 1.0};
        case GateName::X:
            return {0.0, 1.0, 1.0, 0.0};
        case GateName::Y:
            return {0.0, -1.0, 1.0, 0.0};
        case GateName::Z:
            return {1.0, 0.0, 0.0, -1.0};
        case GateName::H: {
            const double s = std::numbers::sqrt2 / 2;
            return {s, s, s, -s};
        }
    }
    throw DomainError("unknown gate");
}

std::string_view SingleQubitGate::label() const {
    switch (name_) {
        case GateName::I:
            return "I";
        case GateName::X:
            return "X";
        case GateName::Y:
            return "Y";
        case GateName::Z:
            return "Z";
        case GateName::H:
            return "H";
    }
    return "?";
}

StateVector::StateVector(size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const size_t n = amplitudes.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw DomainError("amplitude count must be a power of two >= 2, got " + std::to_string(n));
    }
    const auto num_qubits = static_cast<size_t>(std::countr_zero(n));
    if (num_qubits > kMaxQubits) {
        throw DomainError("num_qubits " + std::to_string(num_qubits) + " exceeds " + std::to_string(kMaxQubits));
    }
    return StateVector(num_qubits, std::move(amplitudes));
}

double StateVector::norm_squared() const {
    return kernels::active().norm_squared(amplitudes_);
}

void StateVector::check_qubit(QubitIndex q, std::string_view role) const {
    if (q.value >= num_qubits_) {
        throw DomainError(std::string(role) + " qubit " + std::to_string(q.value) + " out of range for " +
                          std::to_string(num_qubits_) + "-qubit state");
    }
}

void StateVector::apply_inplace(const SingleQubitGate &gate, QubitIndex target) {
    check_qubit(target, "target");
    if (gate.name() == GateName::I) {
        return;
    }
    kernels::active().apply_matrix(amplitudes_, target.value, gate.matrix());
}

void StateVector::apply_cnot_inplace(QubitIndex control, QubitIndex target) {
    check_qubit(control, "control");
    check_qubit(target, "target");
    if (control == target) {
        throw DomainError("CNOT control and target must differ, both are " + std::to_string(control.value));
    }
    kernels::active().apply_cnot(amplitudes_, control.value, target.value);
}

StateVector make_basis_state(size_t num_qubits, uint64_t basis_index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw DomainError("num_qubits must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                          std::to_string(num_qubits));
    }
    const uint64_t dim = uint64_t{1} << num_qubits;
    if (basis_index >= dim) {
        throw DomainError("basis_index " + std::to_string(basis_index) + " out of range [0, " + std::to_string(dim) +
                          ")");
    }
    std::vector<Complex> amps(dim);
    amps[basis_index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

StateVector apply_single_qubit_gate(const StateVector &state, const SingleQubitGate &gate, QubitIndex target) {
    StateVector out = state;
    out.apply_inplace(gate, target);
    return out;
}

StateVector apply_cnot(const StateVector &state, QubitIndex control, QubitIndex target) {
    StateVector out = state;
    out.apply_cnot_inplace(control, target);
    return out;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("inner product of " + std::to_string(a.num_qubits()) + "-qubit and " +
                          std::to_string(b.num_qubits()) + "-qubit states");
    }
    return kernels::active().inner_product(a.amplitudes(), b.amplitudes());
}

Readout readout_deterministic(const StateVector &state, double tol) {
    if (!(tol > 0 && tol < 1)) {
        throw DomainError("measurement tolerance must be in (0, 1)");
    }
    uint64_t best = 0;
    double best_p = -1;
    const auto amps = state.amplitudes();
    for (size_t k = 0; k < amps.size(); k++) {
        double p = std::norm(amps[k]);
        if (p > best_p) {
            best_p = p;
            best = k;
        }
    }
    if (best_p < 1 - tol) {
        throw NonDeterministicOutcome(
            "no basis state has probability >= 1 - " + std::to_string(tol) + " (max " + std::to_string(best_p) + ")",
            best_p);
    }
    return {best, best_p};
}

uint64_t measure_all_deterministic(const StateVector &state, double tol) {
    return readout_deterministic(state, tol).basis_index;
}

}  // namespace densecode
