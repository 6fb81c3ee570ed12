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

#include "densecode/errors.h"
#include "gtest/gtest.h"
#include "oracle.h"

using namespace densecode;

namespace {

const double kS = 1 / std::sqrt(2.0);

void expect_amps(const StateVector &s, const oracle::Vec &expected, double tol = 1e-12) {
    ASSERT_EQ(s.dimension(), expected.size());
    for (size_t i = 0; i < expected.size(); i++) {
        EXPECT_LT(std::abs(s[i] - expected[i]), tol) << "index " << i;
    }
}

/// Encoded state built from lifted operators, independent of encode().
oracle::Vec oracle_encoded(Scheme scheme, unsigned n, uint64_t m) {
    if (scheme == Scheme::Pairwise) {
        unsigned q = 2 * n;
        oracle::Vec v = oracle::basis(q, 0);
        for (unsigned k = 0; k < n; k++) {
            v = oracle::apply(oracle::lift(q, 2 * k, oracle::gate_h()), v);
            v = oracle::apply(oracle::cnot(q, 2 * k, 2 * k + 1), v);
        }
        for (unsigned k = 0; k < n; k++) {
            unsigned digit = (m >> (2 * k)) & 3;
            const oracle::Mat table[] = {{{1, 0}, {0, 1}}, oracle::gate_x(), oracle::gate_z(), oracle::gate_xz()};
            v = oracle::apply(oracle::lift(q, 2 * k, table[digit]), v);
        }
        return v;
    }
    unsigned q = n + 1;
    oracle::Vec v = oracle::basis(q, 0);
    v = oracle::apply(oracle::lift(q, 0, oracle::gate_h()), v);
    for (unsigned i = 1; i <= n; i++) v = oracle::apply(oracle::cnot(q, 0, i), v);
    if (m & 1) v = oracle::apply(oracle::lift(q, 1, oracle::gate_z()), v);
    for (unsigned i = 1; i <= n; i++)
        if ((m >> i) & 1) v = oracle::apply(oracle::lift(q, i, oracle::gate_x()), v);
    return v;
}

}  // namespace

TEST(scheme_config, layout) {
    SchemeConfig p(Scheme::Pairwise, 3);
    EXPECT_EQ(p.num_qubits(), 6u);
    EXPECT_EQ(p.message_capacity(), 64u);
    EXPECT_EQ(p.alice_qubit(2), QubitIndex(4));
    EXPECT_EQ(p.bob_qubit(2), QubitIndex(5));
    EXPECT_THROW(p.alice_qubit(3), DomainError);

    SchemeConfig g(Scheme::MaxEntangled, 3);
    EXPECT_EQ(g.num_qubits(), 4u);
    EXPECT_EQ(g.message_capacity(), 16u);
    EXPECT_EQ(g.alice_qubit(0), QubitIndex(1));
    EXPECT_EQ(g.bob_qubit(0), QubitIndex(0));
    EXPECT_THROW(g.bob_qubit(1), DomainError);

    EXPECT_THROW(SchemeConfig(Scheme::Pairwise, 0), DomainError);
    EXPECT_EQ(SchemeConfig(Scheme::Pairwise, 1000000).capacity_bits(), 2000000u);
    EXPECT_THROW(SchemeConfig(Scheme::Pairwise, 32).message_capacity(), DomainError);
    EXPECT_EQ(parse_scheme("max-entangled"), Scheme::MaxEntangled);
    EXPECT_THROW(parse_scheme("bose"), DomainError);
}

TEST(message, range) {
    SchemeConfig p(Scheme::Pairwise, 2);
    EXPECT_EQ(Message(p, 15).value(), 15u);
    try {
        Message(p, 16);
        FAIL();
    } catch (const DomainError &e) {
        EXPECT_NE(std::string(e.what()).find("16 messages"), std::string::npos);
    }
    EXPECT_THROW(Message(SchemeConfig(Scheme::MaxEntangled, 2), 8), DomainError);
}

TEST(prepare_initial_state, examples) {
    expect_amps(prepare_initial_state(SchemeConfig(Scheme::Pairwise, 1)), {kS, 0, 0, kS});
    expect_amps(prepare_initial_state(SchemeConfig(Scheme::MaxEntangled, 1)), {kS, 0, 0, kS});
    expect_amps(prepare_initial_state(SchemeConfig(Scheme::MaxEntangled, 2)), {kS, 0, 0, 0, 0, 0, 0, kS});
    // Pairwise N=2: product of two Bell pairs, indices {0, 3, 12, 15} at 1/2.
    StateVector two = prepare_initial_state(SchemeConfig(Scheme::Pairwise, 2));
    for (size_t i = 0; i < 16; i++) {
        bool on = i == 0 || i == 3 || i == 12 || i == 15;
        EXPECT_NEAR(std::abs(two[i]), on ? 0.5 : 0.0, 1e-12);
    }
    EXPECT_THROW(prepare_initial_state(SchemeConfig(Scheme::Pairwise, 14)), DomainError);
}

TEST(encode, examples) {
    SchemeConfig p1(Scheme::Pairwise, 1);
    StateVector bell = prepare_initial_state(p1);
    expect_amps(encode(p1, bell, Message(p1, 0)), {kS, 0, 0, kS});
    expect_amps(encode(p1, bell, Message(p1, 1)), {0, kS, kS, 0});

    SchemeConfig g2(Scheme::MaxEntangled, 2);
    StateVector ghz = prepare_initial_state(g2);
    expect_amps(encode(g2, ghz, Message(g2, 1)), {kS, 0, 0, 0, 0, 0, 0, -kS});
}

TEST(encode, matches_operator_oracle_exhaustively) {
    for (unsigned n = 1; n <= 2; n++) {
        SchemeConfig c(Scheme::Pairwise, n);
        StateVector init = prepare_initial_state(c);
        for (uint64_t m = 0; m < c.message_capacity(); m++) {
            expect_amps(encode(c, init, Message(c, m)), oracle_encoded(Scheme::Pairwise, n, m));
        }
    }
    for (unsigned n = 1; n <= 4; n++) {
        SchemeConfig c(Scheme::MaxEntangled, n);
        StateVector init = prepare_initial_state(c);
        for (uint64_t m = 0; m < c.message_capacity(); m++) {
            expect_amps(encode(c, init, Message(c, m)), oracle_encoded(Scheme::MaxEntangled, n, m));
        }
    }
}

TEST(encode, errors) {
    SchemeConfig p1(Scheme::Pairwise, 1);
    SchemeConfig p2(Scheme::Pairwise, 2);
    EXPECT_THROW(encode(p1, prepare_initial_state(p2), Message(p1, 0)), DomainError);
    EXPECT_THROW(encode(p2, prepare_initial_state(p2), Message(p1, 0)), DomainError);
}

TEST(decode, examples) {
    SchemeConfig p1(Scheme::Pairwise, 1);
    DecodeResult r = decode(p1, prepare_initial_state(p1));
    EXPECT_EQ(r.message_value, 0u);
    EXPECT_EQ(r.ledger, (GateLedger{1, 1}));

    SchemeConfig g2(Scheme::MaxEntangled, 2);
    StateVector z = apply_single_qubit_gate(prepare_initial_state(g2), kGateZ, QubitIndex(1));
    DecodeResult rg = decode(g2, z);
    EXPECT_EQ(rg.message_value, 1u);
    EXPECT_EQ(rg.ledger, (GateLedger{1, 2}));
}

TEST(decode, round_trip_exhaustive) {
    for (unsigned n = 1; n <= 3; n++) {
        SchemeConfig c(Scheme::Pairwise, n);
        StateVector init = prepare_initial_state(c);
        for (uint64_t m = 0; m < c.message_capacity(); m++) {
            StateVector e = encode(c, init, Message(c, m));
            EXPECT_NEAR(e.norm_squared(), 1.0, 1e-12);
            DecodeResult d = decode(c, e);
            EXPECT_EQ(d.message_value, m);
            EXPECT_EQ(d.ledger, (GateLedger{n, n}));
            EXPECT_GE(d.readout_probability, 1 - 1e-9);
        }
    }
    for (unsigned n = 1; n <= 10; n++) {
        SchemeConfig c(Scheme::MaxEntangled, n);
        StateVector init = prepare_initial_state(c);
        for (uint64_t m = 0; m < c.message_capacity(); m++) {
            StateVector e = encode(c, init, Message(c, m));
            EXPECT_NEAR(e.norm_squared(), 1.0, 1e-12);
            DecodeResult d = decode(c, e);
            EXPECT_EQ(d.message_value, m);
            EXPECT_EQ(d.ledger, (GateLedger{1, n}));
        }
    }
}

TEST(decode, malformed_input_is_non_deterministic) {
    SchemeConfig p1(Scheme::Pairwise, 1);
    // |00>: not in the Bell basis, decodes to a uniform superposition.
    EXPECT_THROW(decode(p1, make_basis_state(2, 0)), NonDeterministicOutcome);
    EXPECT_THROW(decode(p1, make_basis_state(3, 0)), DomainError);
}

TEST(decoding_time, examples) {
    TimingModel unit(1, 1);
    SchemeConfig p3(Scheme::Pairwise, 3);
    SchemeConfig g3(Scheme::MaxEntangled, 3);
    EXPECT_EQ(decoding_time(p3, expected_ledger(p3), unit), 6.0);
    EXPECT_EQ(decoding_time(g3, expected_ledger(g3), unit), 4.0);
    EXPECT_THROW(TimingModel(0, 1), DomainError);
    EXPECT_THROW(TimingModel(1, -1), DomainError);
    EXPECT_THROW(TimingModel(1, std::nan("")), DomainError);
    EXPECT_THROW(decoding_time(p3, GateLedger{1, 3}, unit), DomainError);

    TimingModel t(0.25, 1.5);
    for (uint64_t n = 1; n <= 10; n++) {
        SchemeConfig p(Scheme::Pairwise, n);
        SchemeConfig g(Scheme::MaxEntangled, n);
        EXPECT_DOUBLE_EQ(decoding_time(p, expected_ledger(p), t), n * (0.25 + 1.5));
        EXPECT_DOUBLE_EQ(decoding_time(g, expected_ledger(g), t), 0.25 + n * 1.5);
    }
}
