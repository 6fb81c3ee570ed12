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
 * Command-line front end, callable in-process.
 *
 * Subcommands: simulate, verify, rates. Exit codes:
 *   0 success, 1 verification failure, 2 usage error, 3 size beyond the
 *   brute-force bounds.
 *
 * Reals are written with 12 significant digits. Integral values are written
 * without a fractional part in every format.
 */
#ifndef DENSECODE_CLI_H
#define DENSECODE_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace densecode::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitCapacityLimit = 3,
};

/// Column order of `rates --format csv`; also the JSON field names.
inline constexpr const char *kRatesCsvHeader = "scheme,N,bits,particles,total_time,rate_eq1,rate_eq2,erroneous_rate";
inline constexpr const char *kSimulateCsvHeader = "scheme,N,message,decoded,pass,hadamard_count,cnot_count,decoding_time";
inline constexpr const char *kVerifyCsvHeader = "scheme,N,method,message_count,bits,expected_bits,max_off_diagonal,pass";

/// Largest register `simulate --message` will allocate.
inline constexpr unsigned kMaxSimulateQubits = 20;

/// %.12g.
std::string format_real(double value);

/// args excludes the program name. Report goes to `out` (or --output),
/// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace densecode::cli

#endif
