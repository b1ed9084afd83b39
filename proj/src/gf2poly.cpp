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

#include "olfsr/gf2poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "olfsr/sync_rng.hpp"

namespace olfsr {

GenPoly GenPoly::from_bits(u128 bits) {
    if (bits < 2) throw std::invalid_argument("GenPoly: degree must be at least 1");
    if (bit_width_u128(bits) > 65) throw std::invalid_argument("GenPoly: degree must be at most 64");
    GenPoly p;
    p.bits_ = bits;
    return p;
}

GenPoly GenPoly::from_hex(std::string_view hex) {
    if (hex.empty() || hex.size() > 17) throw std::invalid_argument("GenPoly: bad hex length");
    u128 bits = 0;
    for (char c : hex) {
        unsigned nibble = 0;
        if (c >= '0' && c <= '9')
            nibble = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            nibble = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            nibble = static_cast<unsigned>(c - 'A' + 10);
        else
            throw std::invalid_argument("GenPoly: bad hex digit");
        bits = bits << 4 | nibble;
    }
    return from_bits(bits);
}

std::string GenPoly::to_hex() const {
    std::string out;
    u128 v = bits_;
    do {
        out.insert(out.begin(), "0123456789abcdef"[static_cast<unsigned>(v & 0xf)]);
        v >>= 4;
    } while (v != 0);
    return out;
}

std::string GenPoly::to_monomials() const {
    std::string out;
    for (int i = static_cast<int>(degree()); i >= 0; --i) {
        if (!((bits_ >> i) & 1)) continue;
        if (!out.empty()) out += " + ";
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += "x";
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

u128 poly_mod_mul(u128 a, u128 b, const GenPoly& modulus) {
    const unsigned g = modulus.degree();
    if ((a != 0 && bit_width_u128(a) > g) || (b != 0 && bit_width_u128(b) > g))
        throw std::invalid_argument("poly_mod_mul: operand degree must be below the modulus degree");
    const u128 top = u128{1} << g;
    u128 r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= modulus.bits();
    }
    return r;
}

u128 poly_pow_mod(u128 base, std::uint64_t exp, const GenPoly& modulus) {
    u128 r = 1, b = base;
    while (exp != 0) {
        if (exp & 1u) r = poly_mod_mul(r, b, modulus);
        b = poly_mod_mul(b, b, modulus);
        exp >>= 1;
    }
    return r;
}

u128 poly_gcd(u128 a, u128 b) {
    while (b != 0) {
        while (a != 0 && bit_width_u128(a) >= bit_width_u128(b))
            a ^= b << (bit_width_u128(a) - bit_width_u128(b));
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const GenPoly& p) {
    const unsigned g = p.degree();
    if (g == 1) return true;  // x and x+1
    if (!p.constant_term()) return false;  // divisible by x
    // frobenius[i] = x^(2^i) mod p
    u128 frob = 2;  // x
    std::vector<u128> at_checkpoint(g + 1, 0);
    at_checkpoint[0] = frob;
    for (unsigned i = 1; i <= g; ++i) {
        frob = poly_mod_mul(frob, frob, p);
        at_checkpoint[i] = frob;
    }
    if (at_checkpoint[g] != 2) return false;  // x^(2^g) != x
    const FactoredInt deg_factors = factor(g);
    for (const auto& [q, e] : deg_factors.factors) {
        const u128 h = at_checkpoint[g / static_cast<unsigned>(q)] ^ 2;  // x^(2^(g/q)) - x
        if (poly_gcd(h, p.bits()) != 1) return false;
    }
    return true;
}

bool is_primitive(const GenPoly& p, const FactoredInt& factors_of_order) {
    const unsigned g = p.degree();
    if (factors_of_order.value != mersenne(g))
        throw std::invalid_argument("is_primitive: factorization is not of 2^g-1 for this degree");
    if (!p.constant_term()) return false;  // x is not a unit mod p
    if (!is_irreducible(p)) return false;
    const std::uint64_t order = factors_of_order.value;
    for (const auto& [q, e] : factors_of_order.factors) {
        if (poly_pow_mod(2, order / q, p) == 1) return false;
    }
    return true;
}

bool is_primitive(const GenPoly& p) { return is_primitive(p, mersenne_factors(p.degree())); }

PrimitiveCount count_primitive(unsigned degree) {
    if (degree == 0) throw std::invalid_argument("count_primitive: degree must be positive");
    PrimitiveCount out;
    if (degree <= 64) {
        const std::uint64_t phi = euler_phi(mersenne_factors(degree));
        if (phi % degree != 0) throw std::logic_error("count_primitive: phi(2^g-1) not divisible by g");
        out.count = phi / degree;
        out.log2_count = std::log2(static_cast<double>(out.count));
        out.exact = true;
    } else {
        // only the (2^g-1)/g magnitude is needed in this regime
        out.log2_count = static_cast<double>(degree) - std::log2(static_cast<double>(degree));
        out.exact = false;
    }
    return out;
}

std::vector<GenPoly> enumerate_primitive(unsigned degree, std::uint64_t limit, std::string_view search_seed) {
    if (degree == 0 || degree > 64)
        throw std::invalid_argument("enumerate_primitive: degree must be 1..64");
    const PrimitiveCount total = count_primitive(degree);
    if (limit > total.count)
        throw std::length_error("enumerate_primitive: limit exceeds the number of primitive polynomials");
    std::vector<GenPoly> found;
    if (limit == 0) return found;
    const FactoredInt order = mersenne_factors(degree);
    if (degree == 1) {
        found.push_back(GenPoly::from_bits(3));  // x + 1
        return found;
    }
    const u128 top = u128{1} << degree;
    if (degree <= 32) {
        // ascending scan over candidates with c_g = c_0 = 1
        for (u128 middle = 0; middle < (u128{1} << (degree - 1)); ++middle) {
            const GenPoly cand = GenPoly::from_bits(top | middle << 1 | 1);
            if (is_primitive(cand, order)) {
                found.push_back(cand);
                if (found.size() == limit) return found;
            }
        }
        throw std::logic_error("enumerate_primitive: exhaustive scan disagrees with count_primitive");
    }
    // randomized search, reproducible from the seed
    SyncRng rng(search_seed);
    while (found.size() < limit) {
        const std::uint64_t middle = rng.uniform(std::uint64_t{1} << (degree - 1));
        const GenPoly cand = GenPoly::from_bits(top | u128{middle} << 1 | 1);
        if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
        if (is_primitive(cand, order)) found.push_back(cand);
    }
    return found;
}

}  // namespace olfsr
