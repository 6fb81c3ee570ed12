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

#ifndef DENSECODE_ERRORS_H
#define DENSECODE_ERRORS_H

#include <cstdint>
#include <stdexcept>
#include <string>

namespace densecode {

/// A caller-supplied argument violates an operation's precondition.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Readout of a state that is not (numerically) a computational basis state.
///
/// Raised where the protocol guarantees a deterministic outcome, so it points
/// at a malformed input state or a circuit bug rather than bad user input.
class NonDeterministicOutcome : public std::runtime_error {
   public:
    NonDeterministicOutcome(const std::string &what, double max_probability)
        : std::runtime_error(what), max_probability_(max_probability) {
    }
    double max_probability() const noexcept {
        return max_probability_;
    }

   private:
    double max_probability_;
};

/// A brute-force enumeration was requested beyond its supported size.
class CapacityLimitError : public std::runtime_error {
   public:
    CapacityLimitError(const std::string &what, uint64_t bound) : std::runtime_error(what), bound_(bound) {
    }
    /// Largest supported N for the requested scheme/method.
    uint64_t bound() const noexcept {
        return bound_;
    }

   private:
    uint64_t bound_;
};

/// Simulated results disagree with the closed-form expectation.
class VerificationFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace densecode

#endif
