/*
   Copyright 2026 olfsr contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OLFSR_ANALYSIS_HPP
#define OLFSR_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "olfsr/gf2poly.hpp"
#include "olfsr/u128.hpp"

namespace olfsr {

inline constexpr double kSecondsPerYear = 3.1557e7;  // Julian year

/// Attacker-side assumptions: wiretapped flow length, per-guess decryption
/// cost, and (for the dimensioning boundary) the required attack duration.
struct ThreatParams {
    std::uint64_t flow_bits = 1'250'000'000;  // L_M
    double tau_seconds = 1e-18;               // one decryption trial
    double target_seconds = 1e13 * kSecondsPerYear;

    static ThreatParams with_target_years(double years) {
        ThreatParams t;
        t.target_seconds = years * kSecondsPerYear;
        return t;
    }
};

/// Key search space description. Range mode counts every primitive
/// polynomial of each degree in [g_min, g_max] with its nonzero seeds;
/// fixed mode is a bank of P polynomials of one degree.
struct KeyspaceSpec {
    enum class Mode { range, fixed };
    Mode mode = Mode::range;
    unsigned g_min = 10, g_max = 45;  // range mode
    std::uint64_t bank_size = 2;      // fixed mode P
    unsigned degree = 10;             // fixed mode g
    std::uint64_t key_factor = 1;     // fixed mode n in L_k = n*g

    static KeyspaceSpec range(unsigned g_min, unsigned g_max);
    static KeyspaceSpec fixed(std::uint64_t bank_size, unsigned degree, std::uint64_t key_factor = 1);
    void validate() const;
};

struct KeyspaceSize {
    bool exact = false;
    u128 value = 0;      // valid when exact
    double log2_value = 0.0;
};

/// Total number of (polynomial, seed) pairs the attacker must consider.
/// Exact 128-bit arithmetic through degree 64, log2 domain beyond.
KeyspaceSize keyspace_size(const KeyspaceSpec& spec);

/// Largest key length with guessing equivocation at least the key entropy:
/// floor(log2(keyspace)).
unsigned optimal_key_length(const KeyspaceSpec& spec);

/// Number of reseeds needed to cover flow_bits with L_k-bit segments
/// (ceiling division).
std::uint64_t reseed_count(std::uint64_t flow_bits, std::uint64_t key_len);

/// Worst-case brute-force duration in seconds: N * tau * keyspace.
double bfa_seconds(const KeyspaceSpec& spec, const ThreatParams& threat);
double bfa_years(const KeyspaceSpec& spec, const ThreatParams& threat);

/// Polynomial storage footprint: count * (g+1) bits summed over the range,
/// or P * (g+1) for a fixed bank.
u128 storage_bits(const KeyspaceSpec& spec);
double storage_gbyte(const KeyspaceSpec& spec);  // decimal GByte = 8e9 bits

/// Smallest degree avoiding key repetition within one segment:
/// ceil(log2(L_M/N + 1)).
unsigned min_degree_bound(std::uint64_t flow_bits, std::uint64_t reseeds);

/// Smallest degree g satisfying the practical-security boundary
/// (2^g - 1)/g >= n * T_target / (tau * L_M * P), evaluated in the log2
/// domain; also requires n <= (2^g - 1)/g at the returned degree. Throws
/// std::domain_error when no g <= 4096 works.
unsigned boundary_min_g(std::uint64_t bank_size, std::uint64_t key_factor, const ThreatParams& threat);

struct SecurityReport {
    unsigned swept_degree = 0;  // the variable bound of a sweep row
    KeyspaceSize keyspace;
    unsigned key_len = 0;            // L_k
    std::uint64_t reseeds = 0;       // N
    double bfa_time_seconds = 0.0;
    double bfa_time_years = 0.0;
    u128 storage = 0;                // bits
    double storage_gb = 0.0;
    unsigned g_min_bound = 0;
};

SecurityReport evaluate(const KeyspaceSpec& spec, const ThreatParams& threat);

enum class CaseStudy { C1, C2 };

/// C1 pins g_min=10 and sweeps g_max; C2 pins g_max=45 and sweeps g_min.
/// One row per swept value in [lo, hi].
std::vector<SecurityReport> run_case_study(CaseStudy cs, unsigned lo, unsigned hi, const ThreatParams& threat);

/// CSV with header g,L_k,N,T_bfa_years,storage_GB.
std::string case_study_csv(const std::vector<SecurityReport>& rows);

}  // namespace olfsr

#endif
