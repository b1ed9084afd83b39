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

#ifndef OLFSR_FACTORED_HPP
#define OLFSR_FACTORED_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace olfsr {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

/// A positive integer together with its complete prime factorization,
/// primes ascending. value == product of prime^exponent.
struct FactoredInt {
    std::uint64_t value = 1;
    std::vector<PrimePower> factors;

    bool operator==(const FactoredInt&) const = default;
};

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_probable_prime(std::uint64_t n);

/// Complete factorization: trial division by primes up to 10^6, then
/// Brent-cycle Pollard rho on the remaining cofactors. Handles 2^g-1 for
/// g <= 64 in well under a second. factor(1) has an empty factor list.
FactoredInt factor(std::uint64_t n);

std::uint64_t euler_phi(const FactoredInt& f);

/// 2^g - 1 for 1 <= g <= 64 (all 64 bits set at g=64).
std::uint64_t mersenne(unsigned g);

/// Memoized factor(2^g - 1); thread-safe.
FactoredInt mersenne_factors(unsigned g);

/// Text cache for the Mersenne factor table, one line per degree:
///   g: p1^e1 p2^e2 ...
std::map<unsigned, FactoredInt> parse_factor_table(const std::string& text);
std::string format_factor_table(const std::map<unsigned, FactoredInt>& table);
void load_mersenne_cache(const std::filesystem::path& file);
void save_mersenne_cache(const std::filesystem::path& file, unsigned g_max);

}  // namespace olfsr

#endif
