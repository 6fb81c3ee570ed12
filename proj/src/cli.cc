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

#include "densecode/cli.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "densecode/errors.h"
#include "densecode/protocols.h"
#include "densecode/rates.h"
#include "densecode/verification.h"
#include "json.hpp"

namespace densecode::cli {

using nlohmann::ordered_json;

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

namespace {

enum class Format { Json, Csv, Table };

struct RunRequest {
    std::string scheme;
    uint64_t n = 0;
    std::optional<uint64_t> message;
    uint64_t n_min = 1;
    uint64_t n_max = 10;
    double t_h = 1.0;
    double t_c = 1.0;
    std::string method = "roundtrip";
    std::string capacity_source = "formula";
    Format format = Format::Table;
    std::string output_path;
    std::optional<uint64_t> seed;  // accepted, unused: every computation is deterministic
};

/// Integral values become JSON integers; everything else is rounded to the
/// 12-significant-digit text form first.
ordered_json json_real(double value) {
    if (std::isfinite(value) && value == std::floor(value) && std::fabs(value) < 9007199254740992.0) {
        return static_cast<int64_t>(value);
    }
    return std::strtod(format_real(value).c_str(), nullptr);
}

ordered_json json_optional(const std::optional<double> &value) {
    return value ? json_real(*value) : ordered_json(nullptr);
}

std::string csv_optional(const std::optional<double> &value) {
    return value ? format_real(*value) : std::string();
}

// ---------------------------------------------------------------- simulate

struct SimulationRecord {
    uint64_t message;
    std::optional<uint64_t> decoded;
    bool pass;
    GateLedger ledger;
    double decoding_time;
};

int run_simulate(const RunRequest &req, std::ostream &out) {
    const SchemeConfig config(parse_scheme(req.scheme), req.n);
    const TimingModel timing(req.t_h, req.t_c);

    if (req.message) {
        if (config.num_qubits() > kMaxSimulateQubits) {
            throw CapacityLimitError(std::string(scheme_name(config.scheme())) + " N=" + std::to_string(req.n) +
                                         " needs " + std::to_string(config.num_qubits()) + " qubits; simulate supports " +
                                         std::to_string(kMaxSimulateQubits),
                                     config.scheme() == Scheme::Pairwise ? kMaxSimulateQubits / 2
                                                                         : kMaxSimulateQubits - 1);
        }
    } else if (!is_feasible(config, CapacityMethod::RoundTrip)) {
        uint64_t bound = max_feasible_n(config.scheme(), CapacityMethod::RoundTrip);
        throw CapacityLimitError("simulating every message of " + std::string(scheme_name(config.scheme())) +
                                     " supports N <= " + std::to_string(bound) + "; pass --message for larger N",
                                 bound);
    }

    const StateVector initial = prepare_initial_state(config);
    std::vector<uint64_t> messages;
    if (req.message) {
        messages.push_back(req.message.value());
    } else {
        for (uint64_t m = 0; m < config.message_capacity(); m++) {
            messages.push_back(m);
        }
    }

    std::vector<SimulationRecord> records;
    records.reserve(messages.size());
    for (uint64_t m : messages) {
        const Message message(config, m);
        StateVector received = encode(config, initial, message);
        SimulationRecord rec{m, std::nullopt, false, {}, 0.0};
        try {
            DecodeResult d = decode(config, received);
            rec.decoded = d.message_value;
            rec.ledger = d.ledger;
            rec.pass = d.message_value == m;
            rec.decoding_time = decoding_time(config, d.ledger, timing);
        } catch (const NonDeterministicOutcome &) {
            rec.pass = false;
        }
        records.push_back(rec);
    }
    size_t passed = 0;
    for (const auto &r : records) {
        passed += r.pass ? 1 : 0;
    }

    const std::string scheme(scheme_name(config.scheme()));
    switch (req.format) {
        case Format::Json: {
            ordered_json doc;
            doc["scheme"] = scheme;
            doc["n"] = config.n();
            doc["t_h"] = json_real(req.t_h);
            doc["t_c"] = json_real(req.t_c);
            ordered_json rows = ordered_json::array();
            for (const auto &r : records) {
                ordered_json row;
                row["message"] = r.message;
                row["decoded"] = r.decoded ? ordered_json(*r.decoded) : ordered_json(nullptr);
                row["pass"] = r.pass;
                row["hadamard_count"] = r.ledger.hadamard_count;
                row["cnot_count"] = r.ledger.cnot_count;
                row["decoding_time"] = json_real(r.decoding_time);
                rows.push_back(std::move(row));
            }
            doc["messages"] = std::move(rows);
            doc["passed"] = passed;
            doc["total"] = records.size();
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            out << kSimulateCsvHeader << "\n";
            for (const auto &r : records) {
                out << scheme << ',' << config.n() << ',' << r.message << ','
                    << (r.decoded ? std::to_string(*r.decoded) : std::string()) << ','
                    << (r.pass ? "true" : "false") << ',' << r.ledger.hadamard_count << ',' << r.ledger.cnot_count
                    << ',' << format_real(r.decoding_time) << "\n";
            }
            break;
        case Format::Table:
            out << "scheme " << scheme << ", N=" << config.n() << ", t_h=" << format_real(req.t_h)
                << ", t_c=" << format_real(req.t_c) << "\n";
            for (const auto &r : records) {
                out << "  message " << std::setw(6) << r.message << " -> "
                    << (r.decoded ? std::to_string(*r.decoded) : std::string("?")) << "  "
                    << (r.pass ? "PASS" : "FAIL") << "  H=" << r.ledger.hadamard_count
                    << " CNOT=" << r.ledger.cnot_count << "  time=" << format_real(r.decoding_time) << "\n";
            }
            out << passed << "/" << records.size() << " pass\n";
            break;
    }
    return passed == records.size() ? kExitOk : kExitVerificationFailed;
}

// ------------------------------------------------------------------ verify

int run_verify(const RunRequest &req, std::ostream &out) {
    const SchemeConfig config(parse_scheme(req.scheme), req.n);
    const CapacityMethod method = parse_method(req.method);
    const CapacityReport report = capacity(config, method);
    const auto expected = static_cast<double>(config.capacity_bits());
    const bool pass = report.bits == expected;
    const std::string scheme(scheme_name(config.scheme()));

    switch (req.format) {
        case Format::Json: {
            ordered_json doc;
            doc["scheme"] = scheme;
            doc["n"] = report.n;
            doc["method"] = std::string(method_name(method));
            doc["message_count"] = report.message_count;
            doc["bits"] = json_real(report.bits);
            doc["expected_bits"] = json_real(expected);
            doc["max_off_diagonal"] = json_optional(report.max_off_diagonal);
            doc["min_readout_probability"] = json_optional(report.min_readout_probability);
            doc["pass"] = pass;
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            out << kVerifyCsvHeader << "\n"
                << scheme << ',' << report.n << ',' << method_name(method) << ',' << report.message_count << ','
                << format_real(report.bits) << ',' << format_real(expected) << ','
                << csv_optional(report.max_off_diagonal) << ',' << (pass ? "true" : "false") << "\n";
            break;
        case Format::Table:
            out << "scheme            " << scheme << "\n"
                << "N                 " << report.n << "\n"
                << "method            " << method_name(method) << "\n"
                << "message_count     " << report.message_count << "\n"
                << "bits              " << format_real(report.bits) << "\n"
                << "expected_bits     " << format_real(expected) << "\n";
            if (report.max_off_diagonal) {
                out << "max_off_diagonal  " << format_real(*report.max_off_diagonal) << "\n";
            }
            if (report.min_readout_probability) {
                out << "min_readout_prob  " << format_real(*report.min_readout_probability) << "\n";
            }
            out << (pass ? "PASS" : "FAIL") << "\n";
            break;
    }
    return pass ? kExitOk : kExitVerificationFailed;
}

// ------------------------------------------------------------------- rates

int run_rates(const RunRequest &req, std::ostream &out) {
    const TimingModel timing(req.t_h, req.t_c);
    const CapacitySource source = parse_capacity_source(req.capacity_source);
    std::optional<Scheme> only;
    if (!req.scheme.empty()) {
        only = parse_scheme(req.scheme);
    }
    const auto pairs = compare_schemes(req.n_min, req.n_max, timing, source);

    // Ordered by (scheme, N).
    std::vector<RateReport> rows;
    for (Scheme s : {Scheme::Pairwise, Scheme::MaxEntangled}) {
        if (only && *only != s) {
            continue;
        }
        for (const auto &[p, g] : pairs) {
            rows.push_back(s == Scheme::Pairwise ? p : g);
        }
    }

    switch (req.format) {
        case Format::Json: {
            ordered_json doc = ordered_json::array();
            for (const auto &r : rows) {
                ordered_json row;
                row["scheme"] = std::string(scheme_name(r.scheme));
                row["N"] = r.n;
                row["bits"] = json_real(r.bits);
                row["particles"] = r.particles_sent;
                row["total_time"] = json_real(r.total_time);
                row["rate_eq1"] = json_real(r.rate_per_time);
                row["rate_eq2"] = json_real(r.rate_per_time_per_particle);
                row["erroneous_rate"] = json_optional(r.erroneous_rate_per_time);
                doc.push_back(std::move(row));
            }
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            out << kRatesCsvHeader << "\n";
            for (const auto &r : rows) {
                out << scheme_name(r.scheme) << ',' << r.n << ',' << format_real(r.bits) << ',' << r.particles_sent
                    << ',' << format_real(r.total_time) << ',' << format_real(r.rate_per_time) << ','
                    << format_real(r.rate_per_time_per_particle) << ',' << csv_optional(r.erroneous_rate_per_time)
                    << "\n";
            }
            break;
        case Format::Table:
            out << std::left << std::setw(10) << "scheme" << std::right << std::setw(8) << "N" << std::setw(8)
                << "bits" << std::setw(10) << "particles" << std::setw(14) << "total_time" << std::setw(16)
                << "rate_eq1" << std::setw(16) << "rate_eq2" << std::setw(20) << "erroneous_rate" << "\n";
            for (const auto &r : rows) {
                out << std::left << std::setw(10) << scheme_name(r.scheme) << std::right << std::setw(8) << r.n
                    << std::setw(8) << format_real(r.bits) << std::setw(10) << r.particles_sent << std::setw(14)
                    << format_real(r.total_time) << std::setw(16) << format_real(r.rate_per_time) << std::setw(16)
                    << format_real(r.rate_per_time_per_particle) << std::setw(20)
                    << (r.erroneous_rate_per_time ? format_real(*r.erroneous_rate_per_time) : std::string("-"))
                    << "\n";
            }
            out << "erroneous_rate: pairwise rate under the incorrect 2^N-bit count (not physical)\n";
            break;
    }
    return kExitOk;
}

void add_common_options(CLI::App *sub, RunRequest &req) {
    const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"table", Format::Table}};
    sub->add_option("--th", req.t_h, "Hadamard operation time")->check(CLI::PositiveNumber);
    sub->add_option("--tc", req.t_c, "CNOT operation time")->check(CLI::PositiveNumber);
    sub->add_option("--format", req.format, "Output format: json, csv or table")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output", req.output_path, "Write the report to this file instead of stdout");
    sub->add_option("--seed", req.seed, "Accepted for compatibility; results are deterministic");
}

CLI::Option *add_scheme_option(CLI::App *sub, RunRequest &req) {
    return sub->add_option("--scheme", req.scheme, "pairwise or ghz")
        ->check(CLI::IsMember({"pairwise", "ghz", "max-entangled"}));
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Multiqubit dense-coding simulator and rate calculator", "densecode"};
    app.require_subcommand(1);
    RunRequest req;
    constexpr uint64_t kMaxN = 1000000;

    CLI::App *simulate = app.add_subcommand("simulate", "Encode and decode messages, report round-trip status");
    add_scheme_option(simulate, req)->required();
    simulate->add_option("--n", req.n, "Scheme parameter N")->required()->check(CLI::Range(uint64_t{1}, kMaxN));
    simulate->add_option("--message", req.message, "Single message value (default: all messages)");
    add_common_options(simulate, req);

    CLI::App *verify = app.add_subcommand("verify", "Count distinguishable messages by brute force");
    add_scheme_option(verify, req)->required();
    verify->add_option("--n", req.n, "Scheme parameter N")->required()->check(CLI::Range(uint64_t{1}, kMaxN));
    verify->add_option("--method", req.method, "gram or roundtrip")->check(CLI::IsMember({"gram", "roundtrip"}));
    add_common_options(verify, req);

    CLI::App *rates = app.add_subcommand("rates", "Tabulate information rates for both schemes");
    add_scheme_option(rates, req);
    rates->add_option("--n-min", req.n_min, "Smallest N")->check(CLI::Range(uint64_t{1}, kMaxN));
    rates->add_option("--n-max", req.n_max, "Largest N")->check(CLI::Range(uint64_t{1}, kMaxN));
    rates->add_option("--capacity-source", req.capacity_source, "formula or simulated")
        ->check(CLI::IsMember({"formula", "simulated"}));
    add_common_options(rates, req);

    std::vector<const char *> argv{"densecode"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        if (simulate->parsed()) {
            code = run_simulate(req, buffer);
        } else if (verify->parsed()) {
            code = run_verify(req, buffer);
        } else {
            if (req.n_min > req.n_max) {
                err << "error: --n-min must not exceed --n-max\n";
                return kExitUsage;
            }
            code = run_rates(req, buffer);
        }
    } catch (const CapacityLimitError &e) {
        err << "capacity limit: " << e.what() << "\n";
        return kExitCapacityLimit;
    } catch (const VerificationFailure &e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (req.output_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(req.output_path, std::ios::binary);
        if (!file || !(file << buffer.str())) {
            err << "error: cannot write " << req.output_path << "\n";
            return kExitUsage;
        }
    }
    return code;
}

}  // namespace densecode::cli
