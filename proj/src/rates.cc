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

#include "densecode/rates.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "densecode/errors.h"
#include "densecode/verification.h"

namespace densecode {

namespace {

void check_n(uint64_t n) {
    if (n < 1) {
        throw DomainError("N must be >= 1");
    }
}

}  // namespace

double rate_eq1(Scheme scheme, uint64_t n, const TimingModel &timing) {
    check_n(n);
    const auto nd = static_cast<double>(n);
    if (scheme == Scheme::Pairwise) {
        return (2 * nd) / (nd * (timing.t_h() + timing.t_c()));
    }
    return (nd + 1) / (timing.t_h() + nd * timing.t_c());
}

double rate_eq2(Scheme scheme, uint64_t n, const TimingModel &timing) {
    return rate_eq1(scheme, n, timing) / static_cast<double>(n);
}

double erroneous_rate(uint64_t n, const TimingModel &timing) {
    check_n(n);
    if (n > kMaxClaimedRateN) {
        throw DomainError("2^N is not representable for N=" + std::to_string(n));
    }
    const auto nd = static_cast<double>(n);
    return std::ldexp(1.0, static_cast<int>(n)) / (nd * (timing.t_h() + timing.t_c()));
}

double pairwise_ratio_limit(const TimingModel &timing) {
    return 2 * timing.t_c() / (timing.t_h() + timing.t_c());
}

double pairwise_ratio_supremum(const TimingModel &timing) {
    return std::max(1.0, pairwise_ratio_limit(timing));
}

RateReport make_rate_report(const SchemeConfig &config, double bits, const TimingModel &timing) {
    RateReport r;
    r.scheme = config.scheme();
    r.n = config.n();
    r.bits = bits;
    r.particles_sent = config.particles_sent();
    r.ledger = expected_ledger(config);
    r.total_time = decoding_time(config, r.ledger, timing);
    r.rate_per_time = bits / r.total_time;
    r.rate_per_time_per_particle = r.rate_per_time / static_cast<double>(r.particles_sent);
    if (config.scheme() == Scheme::Pairwise && config.n() <= kMaxClaimedRateN) {
        r.erroneous_rate_per_time = erroneous_rate(config.n(), timing);
    }
    return r;
}

std::string_view capacity_source_name(CapacitySource source) {
    return source == CapacitySource::Formula ? "formula" : "simulated";
}

CapacitySource parse_capacity_source(std::string_view text) {
    if (text == "formula") {
        return CapacitySource::Formula;
    }
    if (text == "simulated") {
        return CapacitySource::Simulated;
    }
    throw DomainError("unknown capacity source '" + std::string(text) + "' (expected formula or simulated)");
}

namespace {

CapacityMethod cheapest_method(const SchemeConfig &config) {
    if (is_feasible(config, CapacityMethod::RoundTrip)) {
        return CapacityMethod::RoundTrip;
    }
    if (is_feasible(config, CapacityMethod::Gram)) {
        return CapacityMethod::Gram;
    }
    uint64_t bound = std::max(max_feasible_n(config.scheme(), CapacityMethod::RoundTrip),
                              max_feasible_n(config.scheme(), CapacityMethod::Gram));
    throw CapacityLimitError("simulated capacity of " + std::string(scheme_name(config.scheme())) +
                                 " supports N <= " + std::to_string(bound) + ", got N=" + std::to_string(config.n()),
                             bound);
}

double bits_for(const SchemeConfig &config, CapacitySource source) {
    const auto formula = static_cast<double>(config.capacity_bits());
    if (source == CapacitySource::Formula) {
        return formula;
    }
    CapacityReport report = capacity(config, cheapest_method(config));
    if (report.bits != formula) {
        throw VerificationFailure("simulated " + std::string(scheme_name(config.scheme())) + " N=" +
                                  std::to_string(config.n()) + " carries " + std::to_string(report.bits) +
                                  " bits, closed form says " + std::to_string(formula));
    }
    return report.bits;
}

}  // namespace

std::vector<std::pair<RateReport, RateReport>> compare_schemes(uint64_t n_min, uint64_t n_max,
                                                               const TimingModel &timing, CapacitySource source) {
    if (n_min < 1 || n_min > n_max) {
        throw DomainError("need 1 <= n_min <= n_max, got [" + std::to_string(n_min) + ", " + std::to_string(n_max) +
                          "]");
    }
    if (source == CapacitySource::Simulated) {
        for (uint64_t n = n_min; n <= n_max; n++) {
            cheapest_method(SchemeConfig(Scheme::Pairwise, n));
            cheapest_method(SchemeConfig(Scheme::MaxEntangled, n));
        }
    }
    std::vector<std::pair<RateReport, RateReport>> rows;
    rows.reserve(n_max - n_min + 1);
    for (uint64_t n = n_min; n <= n_max; n++) {
        SchemeConfig pairwise(Scheme::Pairwise, n);
        SchemeConfig ghz(Scheme::MaxEntangled, n);
        rows.emplace_back(make_rate_report(pairwise, bits_for(pairwise, source), timing),
                          make_rate_report(ghz, bits_for(ghz, source), timing));
    }
    return rows;
}

}  // namespace densecode
