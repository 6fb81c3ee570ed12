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

#include <algorithm>
#include <cmath>
#include <string>

#include "densecode/errors.h"

namespace densecode {

std::string_view method_name(CapacityMethod method) {
    return method == CapacityMethod::Gram ? "gram" : "roundtrip";
}

CapacityMethod parse_method(std::string_view text) {
    if (text == "gram") {
        return CapacityMethod::Gram;
    }
    if (text == "roundtrip") {
        return CapacityMethod::RoundTrip;
    }
    throw DomainError("unknown method '" + std::string(text) + "' (expected gram or roundtrip)");
}

uint64_t max_feasible_n(Scheme scheme, CapacityMethod method) {
    // Gram bounds keep the pair count near 10^7 or below; round-trip bounds
    // keep (messages x amplitudes x gates) around 10^9.
    if (method == CapacityMethod::Gram) {
        return scheme == Scheme::Pairwise ? 4 : 12;
    }
    return scheme == Scheme::Pairwise ? 6 : 12;
}

bool is_feasible(const SchemeConfig &config, CapacityMethod method) {
    return config.n() <= max_feasible_n(config.scheme(), method);
}

SparseState compress(const StateVector &state) {
    SparseState out;
    out.num_qubits = state.num_qubits();
    const auto amps = state.amplitudes();
    for (size_t k = 0; k < amps.size(); k++) {
        if (amps[k] != Complex{}) {
            out.indices.push_back(k);
            out.values.push_back(amps[k]);
        }
    }
    return out;
}

Complex inner_product(const SparseState &a, const SparseState &b) {
    if (a.num_qubits != b.num_qubits) {
        throw DomainError("inner product of " + std::to_string(a.num_qubits) + "-qubit and " +
                          std::to_string(b.num_qubits) + "-qubit states");
    }
    Complex total{};
    size_t i = 0;
    size_t j = 0;
    while (i < a.indices.size() && j < b.indices.size()) {
        if (a.indices[i] < b.indices[j]) {
            i++;
        } else if (b.indices[j] < a.indices[i]) {
            j++;
        } else {
            total += std::conj(a.values[i]) * b.values[j];
            i++;
            j++;
        }
    }
    return total;
}

namespace {

size_t qubits_of(const StateVector &s) {
    return s.num_qubits();
}
size_t qubits_of(const SparseState &s) {
    return s.num_qubits;
}

template <typename State>
GramResult gram_check_impl(std::span<const State> states, double tol) {
    if (states.empty()) {
        throw DomainError("gram_check needs at least one state");
    }
    if (!(tol > 0 && tol < 1)) {
        throw DomainError("gram tolerance must be in (0, 1)");
    }
    const size_t qubits = qubits_of(states[0]);
    for (const State &s : states) {
        if (qubits_of(s) != qubits) {
            throw DomainError("gram_check states differ in dimension");
        }
    }
    // Hermitian: the upper triangle determines every |entry|.
    GramResult result;
    for (size_t i = 0; i < states.size(); i++) {
        double diag = std::abs(inner_product(states[i], states[i]) - 1.0);
        result.max_diagonal_deviation = std::max(result.max_diagonal_deviation, diag);
        for (size_t j = i + 1; j < states.size(); j++) {
            double off = std::abs(inner_product(states[i], states[j]));
            result.max_off_diagonal = std::max(result.max_off_diagonal, off);
        }
    }
    result.is_orthonormal = result.max_diagonal_deviation <= tol && result.max_off_diagonal < tol;
    return result;
}

}  // namespace

GramResult gram_check(std::span<const StateVector> states, double tol) {
    return gram_check_impl(states, tol);
}

GramResult gram_check(std::span<const SparseState> states, double tol) {
    return gram_check_impl(states, tol);
}

uint64_t greedy_orthogonal_subset_size(std::span<const SparseState> states, double tol) {
    std::vector<size_t> kept;
    for (size_t i = 0; i < states.size(); i++) {
        if (std::abs(inner_product(states[i], states[i]) - 1.0) > tol) {
            continue;
        }
        bool orthogonal = std::all_of(kept.begin(), kept.end(), [&](size_t j) {
            return std::abs(inner_product(states[j], states[i])) < tol;
        });
        if (orthogonal) {
            kept.push_back(i);
        }
    }
    return kept.size();
}

std::vector<StateVector> encoded_states(const SchemeConfig &config) {
    const StateVector initial = prepare_initial_state(config);
    const uint64_t count = config.message_capacity();
    std::vector<StateVector> out;
    out.reserve(count);
    for (uint64_t m = 0; m < count; m++) {
        out.push_back(encode(config, initial, Message(config, m)));
    }
    return out;
}

namespace {

// Up to this many amplitudes in total the encoded set is kept dense and the
// Gram matrix runs on the SIMD inner-product kernel.
constexpr uint64_t kDenseGramBudget = uint64_t{1} << 22;

CapacityReport gram_capacity(const SchemeConfig &config, double tol) {
    const uint64_t count = config.message_capacity();
    const uint64_t dim = uint64_t{1} << config.num_qubits();
    CapacityReport report{config.scheme(), config.n(), CapacityMethod::Gram, 0, 0, std::nullopt, std::nullopt};

    std::vector<SparseState> sparse;
    sparse.reserve(count);
    GramResult gram;
    if (count * dim <= kDenseGramBudget) {
        std::vector<StateVector> dense = encoded_states(config);
        gram = gram_check(std::span<const StateVector>(dense), tol);
        if (!gram.is_orthonormal) {
            for (const StateVector &s : dense) {
                sparse.push_back(compress(s));
            }
        }
    } else {
        const StateVector initial = prepare_initial_state(config);
        for (uint64_t m = 0; m < count; m++) {
            sparse.push_back(compress(encode(config, initial, Message(config, m))));
        }
        gram = gram_check(std::span<const SparseState>(sparse), tol);
    }
    report.max_off_diagonal = gram.max_off_diagonal;
    report.message_count = gram.is_orthonormal ? count : greedy_orthogonal_subset_size(sparse, tol);
    return report;
}

CapacityReport roundtrip_capacity(const SchemeConfig &config) {
    const uint64_t count = config.message_capacity();
    CapacityReport report{config.scheme(), config.n(), CapacityMethod::RoundTrip, 0, 0, std::nullopt, std::nullopt};
    const StateVector initial = prepare_initial_state(config);
    double min_p = 1.0;
    uint64_t ok = 0;
    for (uint64_t m = 0; m < count; m++) {
        StateVector encoded = encode(config, initial, Message(config, m));
        try {
            DecodeResult d = decode(config, encoded);
            min_p = std::min(min_p, d.readout_probability);
            // decode is a function of the state, so distinct correct outputs
            // certify distinct, perfectly distinguishable messages.
            if (d.message_value == m) {
                ok++;
            }
        } catch (const NonDeterministicOutcome &e) {
            min_p = std::min(min_p, e.max_probability());
        }
    }
    report.message_count = ok;
    report.min_readout_probability = min_p;
    return report;
}

}  // namespace

CapacityReport capacity(const SchemeConfig &config, CapacityMethod method, double tol) {
    if (!is_feasible(config, method)) {
        uint64_t bound = max_feasible_n(config.scheme(), method);
        throw CapacityLimitError(std::string(method_name(method)) + " verification of " +
                                     std::string(scheme_name(config.scheme())) + " supports N <= " +
                                     std::to_string(bound) + ", got N=" + std::to_string(config.n()),
                                 bound);
    }
    CapacityReport report =
        method == CapacityMethod::Gram ? gram_capacity(config, tol) : roundtrip_capacity(config);
    report.bits = report.message_count == 0 ? 0.0 : std::log2(static_cast<double>(report.message_count));
    return report;
}

}  // namespace densecode
