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

#include "densecode/verification.h"

#include <cmath>

#include "densecode/errors.h"
#include "gtest/gtest.h"
#include "oracle.h"

using namespace densecode;

namespace {
const double kS = 1 / std::sqrt(2.0);
}

TEST(gram_check, examples) {
    std::vector<StateVector> basis{make_basis_state(1, 0), make_basis_state(1, 1)};
    GramResult r = gram_check(basis, 1e-10);
    EXPECT_TRUE(r.is_orthonormal);
    EXPECT_EQ(r.max_off_diagonal, 0.0);

    std::vector<StateVector> skew{make_basis_state(1, 0), StateVector::from_amplitudes({kS, kS})};
    r = gram_check(skew, 1e-10);
    EXPECT_FALSE(r.is_orthonormal);
    EXPECT_NEAR(r.max_off_diagonal, kS, 1e-15);
}

TEST(gram_check, errors) {
    std::vector<StateVector> none;
    EXPECT_THROW(gram_check(none, 1e-10), DomainError);
    std::vector<StateVector> mixed{make_basis_state(1, 0), make_basis_state(2, 0)};
    EXPECT_THROW(gram_check(mixed, 1e-10), DomainError);
    std::vector<StateVector> one{make_basis_state(1, 0)};
    EXPECT_THROW(gram_check(one, 0.0), DomainError);
    // Unnormalized input fails on the diagonal.
    std::vector<StateVector> big{StateVector::from_amplitudes({2, 0})};
    EXPECT_FALSE(gram_check(big, 1e-10).is_orthonormal);
}

TEST(gram_check, pairwise_n2_all_encoded_states) {
    auto states = encoded_states(SchemeConfig(Scheme::Pairwise, 2));
    ASSERT_EQ(states.size(), 16u);
    GramResult r = gram_check(states, 1e-10);
    EXPECT_TRUE(r.is_orthonormal);
    EXPECT_LE(r.max_off_diagonal, 1e-12);

    // Independent oracle over the same states.
    double worst = 0;
    for (size_t i = 0; i < states.size(); i++) {
        for (size_t j = i + 1; j < states.size(); j++) {
            oracle::Vec a(states[i].amplitudes().begin(), states[i].amplitudes().end());
            oracle::Vec b(states[j].amplitudes().begin(), states[j].amplitudes().end());
            worst = std::max(worst, std::abs(oracle::dot(a, b)));
        }
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(gram_check, sparse_and_dense_agree) {
    for (auto scheme : {Scheme::Pairwise, Scheme::MaxEntangled}) {
        auto dense = encoded_states(SchemeConfig(scheme, 3));
        std::vector<SparseState> sparse;
        for (const auto &s : dense) sparse.push_back(compress(s));
        GramResult a = gram_check(std::span<const StateVector>(dense), 1e-10);
        GramResult b = gram_check(std::span<const SparseState>(sparse), 1e-10);
        EXPECT_EQ(a.is_orthonormal, b.is_orthonormal);
        EXPECT_NEAR(a.max_off_diagonal, b.max_off_diagonal, 1e-14);
        EXPECT_NEAR(a.max_diagonal_deviation, b.max_diagonal_deviation, 1e-14);
        for (size_t i = 0; i < dense.size(); i += 7) {
            for (size_t j = 0; j < dense.size(); j += 5) {
                EXPECT_LT(std::abs(inner_product(dense[i], dense[j]) - inner_product(sparse[i], sparse[j])), 1e-14);
            }
        }
    }
}

TEST(gram_check, removing_any_pairwise_n1_state_leaves_three_orthogonal) {
    auto states = encoded_states(SchemeConfig(Scheme::Pairwise, 1));
    for (size_t drop = 0; drop < states.size(); drop++) {
        std::vector<StateVector> rest;
        for (size_t i = 0; i < states.size(); i++)
            if (i != drop) rest.push_back(states[i]);
        ASSERT_EQ(rest.size(), 3u);
        EXPECT_TRUE(gram_check(rest, 1e-10).is_orthonormal);
    }
}

TEST(greedy_orthogonal_subset, counts_distinguishable_states) {
    std::vector<SparseState> states{compress(make_basis_state(1, 0)), compress(StateVector::from_amplitudes({kS, kS})),
                                    compress(make_basis_state(1, 1)), compress(make_basis_state(1, 0))};
    EXPECT_EQ(greedy_orthogonal_subset_size(states), 2u);
}

TEST(capacity, examples) {
    CapacityReport r = capacity(SchemeConfig(Scheme::Pairwise, 3), CapacityMethod::RoundTrip);
    EXPECT_EQ(r.message_count, 64u);
    EXPECT_EQ(r.bits, 6.0);
    EXPECT_FALSE(r.max_off_diagonal);
    ASSERT_TRUE(r.min_readout_probability);
    EXPECT_GE(*r.min_readout_probability, 1 - 1e-9);

    r = capacity(SchemeConfig(Scheme::MaxEntangled, 1), CapacityMethod::Gram);
    EXPECT_EQ(r.message_count, 4u);
    EXPECT_EQ(r.bits, 2.0);
    ASSERT_TRUE(r.max_off_diagonal);
    EXPECT_LE(*r.max_off_diagonal, 1e-12);

    r = capacity(SchemeConfig(Scheme::MaxEntangled, 4), CapacityMethod::Gram);
    EXPECT_EQ(r.message_count, 32u);
    EXPECT_EQ(r.bits, 5.0);
}

TEST(capacity, limits) {
    EXPECT_THROW(capacity(SchemeConfig(Scheme::Pairwise, 5), CapacityMethod::Gram), CapacityLimitError);
    EXPECT_THROW(capacity(SchemeConfig(Scheme::Pairwise, 7), CapacityMethod::RoundTrip), CapacityLimitError);
    EXPECT_THROW(capacity(SchemeConfig(Scheme::MaxEntangled, 13), CapacityMethod::Gram), CapacityLimitError);
    try {
        capacity(SchemeConfig(Scheme::Pairwise, 9), CapacityMethod::Gram);
        FAIL();
    } catch (const CapacityLimitError &e) {
        EXPECT_EQ(e.bound(), 4u);
    }
}

TEST(capacity, bits_are_linear_never_exponential) {
    for (uint64_t n = 1; n <= 4; n++) {
        SchemeConfig p(Scheme::Pairwise, n);
        SchemeConfig g(Scheme::MaxEntangled, n);
        auto pg = capacity(p, CapacityMethod::Gram);
        auto pr = capacity(p, CapacityMethod::RoundTrip);
        auto gg = capacity(g, CapacityMethod::Gram);
        auto gr = capacity(g, CapacityMethod::RoundTrip);
        EXPECT_EQ(pg.message_count, pr.message_count);
        EXPECT_EQ(gg.message_count, gr.message_count);
        EXPECT_EQ(pg.bits, 2.0 * n);
        EXPECT_EQ(gg.bits, n + 1.0);
        if (n >= 3) EXPECT_NE(pg.bits, std::ldexp(1.0, n));
    }
}

TEST(capacity, sparse_gram_path_large_ghz) {
    // 2^(N+1) x 2^(N+1) exceeds the dense budget from N = 11.
    CapacityReport r = capacity(SchemeConfig(Scheme::MaxEntangled, 11), CapacityMethod::Gram);
    EXPECT_EQ(r.message_count, 4096u);
    EXPECT_EQ(r.bits, 12.0);
    EXPECT_LE(*r.max_off_diagonal, 1e-12);
}
