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

#ifndef OLFSR_GF2POLY_HPP
#define OLFSR_GF2POLY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "olfsr/factored.hpp"
#include "olfsr/u128.hpp"

namespace olfsr {

/// Binary generator polynomial of degree 1..64. Coefficient of x^i sits at
/// bit i, so the low `degree` bits double as the LFSR tap mask. Hex text
/// form prints the whole coefficient word most-significant-first
/// (x^4 + x + 1 -> "13").
class GenPoly {
  public:
    GenPoly() = default;
    static GenPoly from_bits(u128 bits);
    static GenPoly from_hex(std::string_view hex);

    unsigned degree() const { return bit_width_u128(bits_) - 1; }
    u128 bits() const { return bits_; }
    bool constant_term() const { return (bits_ & 1) != 0; }
    /// Taps for the Fibonacci LFSR: coefficients c_0..c_{g-1}.
    std::uint64_t tap_mask() const {
        const unsigned g = degree();
        return static_cast<std::uint64_t>(bits_) & (g >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g) - 1);
    }
    /// Usable as an LFSR generator polynomial: degree >= 1 and c_0 = 1.
    bool is_valid_generator() const { return bits_ > 1 && constant_term(); }

    std::string to_hex() const;
    std::string to_monomials() const;  // "x^4 + x + 1"

    bool operator==(const GenPoly&) const = default;
    auto operator<=>(const GenPoly&) const = default;

  private:
    u128 bits_ = 0;
};

/// (a * b) mod modulus over GF(2)[x]. Operands must have degree strictly
/// below the modulus degree.
u128 poly_mod_mul(u128 a, u128 b, const GenPoly& modulus);

/// base^exp mod modulus by square-and-multiply.
u128 poly_pow_mod(u128 base, std::uint64_t exp, const GenPoly& modulus);

u128 poly_gcd(u128 a, u128 b);

/// Irreducibility over GF(2) by the distinct-degree (Rabin) criterion:
/// x^(2^g) == x mod p and gcd(x^(2^(g/q)) - x, p) = 1 for each prime q | g.
bool is_irreducible(const GenPoly& p);

/// Primitive iff irreducible and ord(x) = 2^g-1 in GF(2)[x]/(p):
/// x^((2^g-1)/q) != 1 for every prime q | 2^g-1. factors_of_order must be
/// the factorization of 2^g-1 for g = degree(p).
bool is_primitive(const GenPoly& p, const FactoredInt& factors_of_order);
bool is_primitive(const GenPoly& p);  // factors looked up internally

struct PrimitiveCount {
    std::uint64_t count = 0;   // phi(2^g-1)/g, valid when exact
    double log2_count = 0.0;
    bool exact = false;        // false above degree 64: log2 of (2^g-1)/g only
};

/// Number of primitive polynomials of the given degree. Exact through
/// degree 64; beyond that only the log2-domain bound (2^g-1)/g is
/// available and the result is flagged inexact.
PrimitiveCount count_primitive(unsigned degree);

/// Exactly `limit` distinct primitive polynomials of the given degree.
/// Degrees up to 32 scan candidates in ascending numeric order; larger
/// degrees draw random candidates from the search seed, so results are
/// reproducible either way. Throws std::length_error when limit exceeds
/// count_primitive(degree).
std::vector<GenPoly> enumerate_primitive(unsigned degree, std::uint64_t limit,
                                         std::string_view search_seed = "olfsr.enumerate");

}  // namespace olfsr

#endif
