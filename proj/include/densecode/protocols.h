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
 * The two multiqubit dense-coding schemes.
 *
 * Pairwise: N Bell pairs on 2N qubits. Pair k is qubits {2k, 2k+1}; Alice
 * holds 2k and Bob holds 2k+1. A message is read as N base-4 digits, digit k
 * (least significant first) selecting {I, X, Z, XZ} on Alice's qubit 2k.
 * Decoding runs CNOT(2k -> 2k+1) then H(2k) on every pair.
 *
 * MaxEntangled ("ghz"): one (N+1)-qubit GHZ state. Bob keeps qubit 0, Alice
 * holds qubits 1..N. A message is N+1 bits: bit 0 is the phase bit (Z on
 * qubit 1), bit i for i >= 1 flips qubit i with X. Decoding runs CNOT(0 -> i)
 * for i = 1..N then H(0); the readout index equals the message.
 *
 * Encoding Paulis are free in the gate ledger. Only the decoding H and CNOT
 * gates are counted, since the rate model charges t_h and t_c only.
 */
#ifndef DENSECODE_PROTOCOLS_H
#define DENSECODE_PROTOCOLS_H

#include <cstdint>
#include <string_view>

#include "densecode/statevector.h"

namespace densecode {

enum class Scheme { Pairwise, MaxEntangled };

/// "pairwise" or "ghz".
std::string_view scheme_name(Scheme scheme);

/// Accepts "pairwise", "ghz" and "max-entangled". Throws DomainError otherwise.
Scheme parse_scheme(std::string_view text);

class SchemeConfig {
   public:
    SchemeConfig(Scheme scheme, uint64_t n);

    Scheme scheme() const {
        return scheme_;
    }
    uint64_t n() const {
        return n_;
    }
    /// 2N for Pairwise, N+1 for MaxEntangled.
    uint64_t num_qubits() const;
    /// 4^N for Pairwise, 2^(N+1) for MaxEntangled. Requires the value to fit
    /// in 64 bits.
    uint64_t message_capacity() const;
    /// log2 of message_capacity(): 2N or N+1. Valid for any N.
    uint64_t capacity_bits() const;
    /// Qubits Alice transmits to Bob: N in both schemes.
    uint64_t particles_sent() const {
        return n_;
    }

    QubitIndex alice_qubit(uint64_t k) const;
    QubitIndex bob_qubit(uint64_t k) const;

   private:
    Scheme scheme_;
    uint64_t n_;
};

class Message {
   public:
    Message(const SchemeConfig &config, uint64_t value);
    uint64_t value() const {
        return value_;
    }
    uint64_t capacity() const {
        return capacity_;
    }

   private:
    uint64_t value_;
    uint64_t capacity_;
};

struct GateLedger {
    uint64_t hadamard_count = 0;
    uint64_t cnot_count = 0;
    friend bool operator==(const GateLedger &, const GateLedger &) = default;
};

/// Gate operation times (arbitrary time unit). Both must be strictly positive.
class TimingModel {
   public:
    TimingModel(double t_h, double t_c);
    double t_h() const {
        return t_h_;
    }
    double t_c() const {
        return t_c_;
    }

   private:
    double t_h_;
    double t_c_;
};

struct DecodeResult {
    uint64_t message_value;
    GateLedger ledger;
    /// Probability of the basis state that was read out.
    double readout_probability;
};

StateVector prepare_initial_state(const SchemeConfig &config);

StateVector encode(const SchemeConfig &config, const StateVector &initial, const Message &message);

DecodeResult decode(const SchemeConfig &config, const StateVector &received, double tol = kMeasureTolerance);

/// Ledger every successful decode produces: (N, N) Pairwise, (1, N) MaxEntangled.
GateLedger expected_ledger(const SchemeConfig &config);

/// hadamard_count * t_h + cnot_count * t_c.
double decoding_time(const SchemeConfig &config, const GateLedger &ledger, const TimingModel &timing);

}  // namespace densecode

#endif
