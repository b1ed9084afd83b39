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

#include "olfsr/analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace olfsr {

KeyspaceSpec KeyspaceSpec::range(unsigned g_min, unsigned g_max) {
    KeyspaceSpec s;
    s.mode = Mode::range;
    s.g_min = g_min;
    s.g_max = g_max;
    s.validate();
    return s;
}

KeyspaceSpec KeyspaceSpec::fixed(std::uint64_t bank_size, unsigned degree, std::uint64_t key_factor) {
    KeyspaceSpec s;
    s.mode = Mode::fixed;
    s.bank_size = bank_size;
    s.degree = degree;
    s.key_factor = key_factor;
    s.validate();
    return s;
}

void KeyspaceSpec::validate() const {
    if (mode == Mode::range) {
        if (g_min < 10 || g_min > g_max || g_max > 64)
            throw std::invalid_argument("KeyspaceSpec: range mode needs 10 <= g_min <= g_max <= 64");
    } else {
        if (bank_size == 0) throw std::invalid_argument("KeyspaceSpec: bank size must be positive");
        if (degree == 0) throw std::invalid_argument("KeyspaceSpec: degree must be positive");
        if (key_factor == 0) throw std::invalid_argument("KeyspaceSpec: key factor n must be >= 1");
        if (degree <= 64) {
            const PrimitiveCount pc = count_primitive(degree);
            if (bank_size > pc.count)
                throw std::invalid_argument("KeyspaceSpec: bank exceeds the primitive polynomials of this degree");
            // n is capped by the sequence period per polynomial
            const long double cap = to_long_double(u128{mersenne(degree)}) / degree;
            if (static_cast<long double>(key_factor) > cap)
                throw std::invalid_argument("KeyspaceSpec: key factor n exceeds (2^g-1)/g");
        }
    }
}

KeyspaceSize keyspace_size(const KeyspaceSpec& spec) {
    spec.validate();
    KeyspaceSize out;
    if (spec.mode == KeyspaceSpec::Mode::range) {
        u128 total = 0;
        for (unsigned g = spec.g_min; g <= spec.g_max; ++g)
            total += u128{count_primitive(g).count} * mersenne(g);
        out.exact = true;
        out.value = total;
        out.log2_value = log2_u128(total);
        return out;
    }
    if (spec.degree <= 64) {
        out.exact = true;
        out.value = u128{spec.bank_size} * mersenne(spec.degree);
        out.log2_value = log2_u128(out.value);
    } else {
        out.exact = false;
        out.log2_value = std::log2(static_cast<double>(spec.bank_size)) + static_cast<double>(spec.degree);
    }
    return out;
}

unsigned optimal_key_length(const KeyspaceSpec& spec) {
    const KeyspaceSize k = keyspace_size(spec);
    if (k.exact) return bit_width_u128(k.value) - 1;  // floor(log2)
    return static_cast<unsigned>(std::floor(k.log2_value));
}

std::uint64_t reseed_count(std::uint64_t flow_bits, std::uint64_t key_len) {
    if (flow_bits == 0 || key_len == 0)
        throw std::invalid_argument("reseed_count: lengths must be positive");
    return (flow_bits + key_len - 1) / key_len;
}

double bfa_seconds(const KeyspaceSpec& spec, const ThreatParams& threat) {
    const KeyspaceSize k = keyspace_size(spec);
    const std::uint64_t n = reseed_count(threat.flow_bits, optimal_key_length(spec));
    const long double keyspace =
        k.exact ? to_long_double(k.value) : std::exp2(static_cast<long double>(k.log2_value));
    return static_cast<double>(static_cast<long double>(n) * threat.tau_seconds * keyspace);
}

double bfa_years(const KeyspaceSpec& spec, const ThreatParams& threat) {
    return bfa_seconds(spec, threat) / kSecondsPerYear;
}

u128 storage_bits(const KeyspaceSpec& spec) {
    spec.validate();
    if (spec.mode == KeyspaceSpec::Mode::range) {
        u128 total = 0;
        for (unsigned g = spec.g_min; g <= spec.g_max; ++g)
            total += u128{count_primitive(g).count} * (g + 1);
        return total;
    }
    return u128{spec.bank_size} * (spec.degree + 1);
}

double storage_gbyte(const KeyspaceSpec& spec) {
    return static_cast<double>(to_long_double(storage_bits(spec)) / 8e9L);
}

unsigned min_degree_bound(std::uint64_t flow_bits, std::uint64_t reseeds) {
    if (flow_bits == 0 || reseeds == 0)
        throw std::invalid_argument("min_degree_bound: inputs must be positive");
    const double per_segment = static_cast<double>(flow_bits) / static_cast<double>(reseeds) + 1.0;
    return static_cast<unsigned>(std::ceil(std::log2(per_segment)));
}

namespace {

// log2((2^g - 1) / g); exact through 64 bits, asymptotic beyond (the -1 is
// below double precision there)
double period_per_degree_log2(unsigned g) {
    if (g <= 64) return log2_u128(u128{mersenne(g)}) - std::log2(static_cast<double>(g));
    return static_cast<double>(g) - std::log2(static_cast<double>(g));
}

}  // namespace

unsigned boundary_min_g(std::uint64_t bank_size, std::uint64_t key_factor, const ThreatParams& threat) {
    if (bank_size < 2) throw std::invalid_argument("boundary_min_g: at least two parallel registers required");
    if (key_factor == 0) throw std::invalid_argument("boundary_min_g: key factor n must be >= 1");
    const double rhs_log2 = std::log2(static_cast<double>(key_factor)) + std::log2(threat.target_seconds) -
                            std::log2(threat.tau_seconds) - std::log2(static_cast<double>(threat.flow_bits)) -
                            std::log2(static_cast<double>(bank_size));
    const double n_log2 = std::log2(static_cast<double>(key_factor));
    for (unsigned g = 2; g <= 4096; ++g) {
        const double lhs = period_per_degree_log2(g);
        if (lhs >= rhs_log2 && lhs >= n_log2) return g;
    }
    throw std::domain_error("boundary_min_g: no degree up to 4096 satisfies the boundary condition");
}

SecurityReport evaluate(const KeyspaceSpec& spec, const ThreatParams& threat) {
    SecurityReport r;
    r.keyspace = keyspace_size(spec);
    r.key_len = optimal_key_length(spec);
    r.reseeds = reseed_count(threat.flow_bits, r.key_len);
    r.bfa_time_seconds = bfa_seconds(spec, threat);
    r.bfa_time_years = r.bfa_time_seconds / kSecondsPerYear;
    r.storage = storage_bits(spec);
    r.storage_gb = storage_gbyte(spec);
    r.g_min_bound = min_degree_bound(threat.flow_bits, r.reseeds);
    r.swept_degree = spec.mode == KeyspaceSpec::Mode::range ? spec.g_max : spec.degree;
    return r;
}

std::vector<SecurityReport> run_case_study(CaseStudy cs, unsigned lo, unsigned hi, const ThreatParams& threat) {
    if (lo > hi) throw std::invalid_argument("run_case_study: empty sweep range");
    std::vector<SecurityReport> rows;
    for (unsigned g = lo; g <= hi; ++g) {
        const KeyspaceSpec spec =
            cs == CaseStudy::C1 ? KeyspaceSpec::range(10, g) : KeyspaceSpec::range(g, 45);
        SecurityReport r = evaluate(spec, threat);
        r.swept_degree = g;
        rows.push_back(r);
    }
    return rows;
}

std::string case_study_csv(const std::vector<SecurityReport>& rows) {
    std::ostringstream out;
    out << "g,L_k,N,T_bfa_years,storage_GB\n";
    for (const SecurityReport& r : rows) {
        out << r.swept_degree << ',' << r.key_len << ',' << r.reseeds << ',';
        out.precision(9);
        out << r.bfa_time_years << ',' << r.storage_gb << '\n';
    }
    return out.str();
}

}  // namespace olfsr
