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
 * Information rates of the two schemes.
 *
 *   per time:                r_p = 2N / (N (t_h + t_c))      r_m = (N + 1) / (t_h + N t_c)
 *   per time per particle:   r_p / N                         r_m / N
 *
 * Both schemes send N particles. With t_h == t_c == t both per-time rates are
 * 1/t for every N. The pairwise/ghz ratio 2 (t_h + N t_c) / ((N + 1)(t_h + t_c))
 * moves monotonically from 1 at N = 1 toward 2 t_c / (t_h + t_c), so it is
 * bounded for every timing.
 *
 * The "claimed" pairwise rate 2^N / (N (t_h + t_c)) counts 2^N bits instead
 * of 2N. It is reproduced only as a labeled comparison column.
 */
#ifndef DENSECODE_RATES_H
#define DENSECODE_RATES_H

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "densecode/protocols.h"

namespace densecode {

/// Largest N for which 2^N is computed for the claimed-rate column.
inline constexpr uint64_t kMaxClaimedRateN = 1023;

double rate_eq1(Scheme scheme, uint64_t n, const TimingModel &timing);

/// rate_eq1 / N.
double rate_eq2(Scheme scheme, uint64_t n, const TimingModel &timing);

/// Incorrect 2^N-bit pairwise rate, for side-by-side tabulation only.
double erroneous_rate(uint64_t n, const TimingModel &timing);

/// lim_{N->inf} rate_eq1(Pairwise) / rate_eq1(MaxEntangled) = 2 t_c / (t_h + t_c).
double pairwise_ratio_limit(const TimingModel &timing);

/// sup over N >= 1 of the same ratio: max(1, 2 t_c / (t_h + t_c)).
double pairwise_ratio_supremum(const TimingModel &timing);

struct RateReport {
    Scheme scheme;
    uint64_t n;
    double bits;
    uint64_t particles_sent;
    GateLedger ledger;
    double total_time;
    /// bits / total_time
    double rate_per_time;
    /// rate_per_time / particles_sent
    double rate_per_time_per_particle;
    /// Pairwise rows with N <= kMaxClaimedRateN only.
    std::optional<double> erroneous_rate_per_time;
};

RateReport make_rate_report(const SchemeConfig &config, double bits, const TimingModel &timing);

enum class CapacitySource { Formula, Simulated };

std::string_view capacity_source_name(CapacitySource source);
CapacitySource parse_capacity_source(std::string_view text);

/// One (pairwise, ghz) pair per N in [n_min, n_max].
///
/// With CapacitySource::Simulated the bits come from brute-force capacity()
/// (round trip where feasible, else Gram); the whole range is checked for
/// feasibility before any work and CapacityLimitError is thrown if some N is
/// out of reach. A simulated count that differs from the closed form throws
/// VerificationFailure.
std::vector<std::pair<RateReport, RateReport>> compare_schemes(uint64_t n_min, uint64_t n_max,
                                                               const TimingModel &timing, CapacitySource source);

}  // namespace densecode

#endif
