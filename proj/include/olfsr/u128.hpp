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

#ifndef OLFSR_U128_HPP
#define OLFSR_U128_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

namespace olfsr {

// 128-bit unsigned arithmetic covers every exact-mode quantity in this
// project: factoring targets up to 2^64-1 and keyspace sums below 2^123.
using u128 = unsigned __int128;

constexpr unsigned bit_width_u128(u128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi != 0) return 64u + static_cast<unsigned>(std::bit_width(hi));
    return static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(v)));
}

inline double log2_u128(u128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    const auto lo = static_cast<std::uint64_t>(v);
    if (hi == 0) return std::log2(static_cast<double>(lo));
    const long double x = std::ldexp(static_cast<long double>(hi), 64) + static_cast<long double>(lo);
    return static_cast<double>(std::log2(x));
}

inline long double to_long_double(u128 v) {
    return std::ldexp(static_cast<long double>(static_cast<std::uint64_t>(v >> 64)), 64) +
           static_cast<long double>(static_cast<std::uint64_t>(v));
}

inline std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v != 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return out;
}

}  // namespace olfsr

#endif
