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

#include "densecode/protocols.h"

#include <cmath>
#include <string>

#include "densecode/errors.h"

namespace densecode {

std::string_view scheme_name(Scheme scheme) {
    return scheme == Scheme::Pairwise ? "pairwise" : "ghz";
}

Scheme parse_scheme(std::string_view text) {
    if (text == "pairwise") {
        return Scheme::Pairwise;
    }
    if (text == "ghz" || text == "max-entangled") {
        return Scheme::MaxEntangled;
    }
    throw DomainError("unknown scheme '" + std::string(text) + "' (expected pairwise or ghz)");
}

SchemeConfig::SchemeConfig(Scheme scheme, uint64_t n) : scheme_(scheme), n_(n) {
    if (n < 1) {
        throw DomainError("scheme parameter N must be >= 1");
    }
}

uint64_t SchemeConfig::num_qubits() const {
    return scheme_ == Scheme::Pairwise ? 2 * n_ : n_ + 1;
}

uint64_t SchemeConfig::capacity_bits() const {
    return scheme_ == Scheme::Pairwise ? 2 * n_ : n_ + 1;
}

uint64_t SchemeConfig::message_capacity() const {
    uint64_t bits = capacity_bits();
    if (bits > 63) {
        throw DomainError("message capacity 2^" + std::to_string(bits) + " does not fit in 64 bits");
    }
    return uint64_t{1} << bits;
}

QubitIndex SchemeConfig::alice_qubit(uint64_t k) const {
    if (k >= n_) {
        throw DomainError("Alice qubit " + std::to_string(k) + " out of range");
    }
    return QubitIndex(scheme_ == Scheme::Pairwise ? 2 * k : k + 1);
}

QubitIndex SchemeConfig::bob_qubit(uint64_t k) const {
    if (scheme_ == Scheme::Pairwise) {
        if (k >= n_) {
            throw DomainError("Bob qubit " + std::to_string(k) + " out of range");
        }
        return QubitIndex(2 * k + 1);
    }
    if (k != 0) {
        throw DomainError("Bob holds a single qubit in the ghz scheme");
    }
    return QubitIndex(0);
}

Message::Message(const SchemeConfig &config, uint64_t value) : value_(value), capacity_(config.message_capacity()) {
    if (value >= capacity_) {
        throw DomainError("message " + std::to_string(value) + " out of range: " + std::string(scheme_name(config.scheme())) +
                          " N=" + std::to_string(config.n()) + " carries " + std::to_string(capacity_) + " messages");
    }
}

TimingModel::TimingModel(double t_h, double t_c) : t_h_(t_h), t_c_(t_c) {
    if (!(t_h > 0) || !(t_c > 0) || !std::isfinite(t_h) || !std::isfinite(t_c)) {
        throw DomainError("gate times must be positive and finite (t_h=" + std::to_string(t_h) +
                          ", t_c=" + std::to_string(t_c) + ")");
    }
}

namespace {

void check_register(const SchemeConfig &config) {
    if (config.num_qubits() > kMaxQubits) {
        throw DomainError(std::string(scheme_name(config.scheme())) + " N=" + std::to_string(config.n()) + " needs " +
                          std::to_string(config.num_qubits()) + " qubits, above the " + std::to_string(kMaxQubits) +
                          "-qubit register limit");
    }
}

void check_matches(const SchemeConfig &config, const StateVector &state) {
    if (state.num_qubits() != config.num_qubits()) {
        throw DomainError("state has " + std::to_string(state.num_qubits()) + " qubits, scheme expects " +
                          std::to_string(config.num_qubits()));
    }
}

}  // namespace

StateVector prepare_initial_state(const SchemeConfig &config) {
    check_register(config);
    StateVector state = make_basis_state(config.num_qubits(), 0);
    if (config.scheme() == Scheme::Pairwise) {
        for (uint64_t k = 0; k < config.n(); k++) {
            state.apply_inplace(kGateH, config.alice_qubit(k));
            state.apply_cnot_inplace(config.alice_qubit(k), config.bob_qubit(k));
        }
    } else {
        state.apply_inplace(kGateH, QubitIndex(0));
        for (uint64_t i = 1; i <= config.n(); i++) {
            state.apply_cnot_inplace(QubitIndex(0), QubitIndex(i));
        }
    }
    return state;
}

StateVector encode(const SchemeConfig &config, const StateVector &initial, const Message &message) {
    check_matches(config, initial);
    if (message.capacity() != config.message_capacity()) {
        throw DomainError("message was built for a different scheme configuration");
    }
    StateVector state = initial;
    uint64_t m = message.value();
    if (config.scheme() == Scheme::Pairwise) {
        for (uint64_t k = 0; k < config.n(); k++, m >>= 2) {
            QubitIndex alice = config.alice_qubit(k);
            switch (m & 3) {
                case 1:
                    state.apply_inplace(kGateX, alice);
                    break;
                case 2:
                    state.apply_inplace(kGateZ, alice);
                    break;
                case 3:
                    state.apply_inplace(kGateY, alice);  // X*Z
                    break;
                default:
                    break;
            }
        }
    } else {
        if (m & 1) {
            state.apply_inplace(kGateZ, QubitIndex(1));
        }
        for (uint64_t i = 1; i <= config.n(); i++) {
            if ((m >> i) & 1) {
                state.apply_inplace(kGateX, QubitIndex(i));
            }
        }
    }
    return state;
}

DecodeResult decode(const SchemeConfig &config, const StateVector &received, double tol) {
    check_matches(config, received);
    StateVector state = received;
    GateLedger ledger;
    if (config.scheme() == Scheme::Pairwise) {
        for (uint64_t k = 0; k < config.n(); k++) {
            state.apply_cnot_inplace(config.alice_qubit(k), config.bob_qubit(k));
            ledger.cnot_count++;
            state.apply_inplace(kGateH, config.alice_qubit(k));
            ledger.hadamard_count++;
        }
    } else {
        for (uint64_t i = 1; i <= config.n(); i++) {
            state.apply_cnot_inplace(QubitIndex(0), QubitIndex(i));
            ledger.cnot_count++;
        }
        state.apply_inplace(kGateH, QubitIndex(0));
        ledger.hadamard_count++;
    }

    Readout r = readout_deterministic(state, tol);
    uint64_t value = 0;
    if (config.scheme() == Scheme::Pairwise) {
        // Per pair the readout is (alice, bob) = (0,0) I, (0,1) X, (1,0) Z, (1,1) XZ.
        for (uint64_t k = 0; k < config.n(); k++) {
            uint64_t alice = (r.basis_index >> (2 * k)) & 1;
            uint64_t bob = (r.basis_index >> (2 * k + 1)) & 1;
            value |= (bob | (alice << 1)) << (2 * k);
        }
    } else {
        value = r.basis_index;
    }
    return {value, ledger, r.probability};
}

GateLedger expected_ledger(const SchemeConfig &config) {
    if (config.scheme() == Scheme::Pairwise) {
        return {config.n(), config.n()};
    }
    return {1, config.n()};
}

double decoding_time(const SchemeConfig &config, const GateLedger &ledger, const TimingModel &timing) {
    if (ledger != expected_ledger(config)) {
        throw DomainError("gate ledger (H=" + std::to_string(ledger.hadamard_count) +
                          ", CNOT=" + std::to_string(ledger.cnot_count) + ") does not belong to " +
                          std::string(scheme_name(config.scheme())) + " N=" + std::to_string(config.n()));
    }
    return static_cast<double>(ledger.hadamard_count) * timing.t_h() +
           static_cast<double>(ledger.cnot_count) * timing.t_c();
}

}  // namespace densecode
