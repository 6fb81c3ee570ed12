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
 * Brute-force message counting.
 *
 * A scheme carries M messages when M encoded states are perfectly
 * distinguishable in a single shot. Two certificates are offered:
 *
 *  - Gram: every pair of encoded states is orthogonal (identity Gram matrix).
 *  - RoundTrip: the decoding circuit recovers every message exactly.
 *
 * Both enumerate the whole message space, so each has an N bound.
 */
#ifndef DENSECODE_VERIFICATION_H
#define DENSECODE_VERIFICATION_H

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "densecode/protocols.h"
#include "densecode/statevector.h"

namespace densecode {

inline constexpr double kOrthogonalityTolerance = 1e-10;

enum class CapacityMethod { Gram, RoundTrip };

std::string_view method_name(CapacityMethod method);
CapacityMethod parse_method(std::string_view text);

/// Largest N for which `method` may enumerate `scheme`.
uint64_t max_feasible_n(Scheme scheme, CapacityMethod method);
bool is_feasible(const SchemeConfig &config, CapacityMethod method);

/// Nonzero entries of a state, indices ascending. Storage for large sets of
/// encoded states, which have 2 (ghz) or 2^N (pairwise) nonzero amplitudes.
struct SparseState {
    size_t num_qubits = 0;
    std::vector<uint64_t> indices;
    std::vector<Complex> values;
};

/// Drops exact zeros only, so inner products are unchanged.
SparseState compress(const StateVector &state);

Complex inner_product(const SparseState &a, const SparseState &b);

struct GramResult {
    bool is_orthonormal = false;
    /// max_{i != j} |<psi_i|psi_j>|; 0 for a single state.
    double max_off_diagonal = 0;
    /// max_i |<psi_i|psi_i> - 1|.
    double max_diagonal_deviation = 0;
};

GramResult gram_check(std::span<const StateVector> states, double tol = kOrthogonalityTolerance);
GramResult gram_check(std::span<const SparseState> states, double tol = kOrthogonalityTolerance);

/// Size of a mutually orthogonal, unit-norm subset picked greedily in list
/// order. A lower bound on the number of perfectly distinguishable states.
uint64_t greedy_orthogonal_subset_size(std::span<const SparseState> states, double tol = kOrthogonalityTolerance);

struct CapacityReport {
    Scheme scheme;
    uint64_t n;
    CapacityMethod method;
    uint64_t message_count;
    /// log2(message_count).
    double bits;
    /// Gram only.
    std::optional<double> max_off_diagonal;
    /// RoundTrip only: smallest readout probability over all messages.
    std::optional<double> min_readout_probability;
};

/// Encodes every message of the scheme and certifies how many are
/// distinguishable. Throws CapacityLimitError beyond max_feasible_n().
CapacityReport capacity(const SchemeConfig &config, CapacityMethod method, double tol = kOrthogonalityTolerance);

/// All encoded states of a scheme, message order.
std::vector<StateVector> encoded_states(const SchemeConfig &config);

}  // namespace densecode

#endif
