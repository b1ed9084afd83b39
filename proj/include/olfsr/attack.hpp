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

#ifndef OLFSR_ATTACK_HPP
#define OLFSR_ATTACK_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "olfsr/bitvec.hpp"
#include "olfsr/keygen.hpp"

namespace olfsr {

/// Output of Berlekamp-Massey. Project-wide convention: `poly` is the
/// characteristic polynomial (bit i = coefficient of x^i, bit L always
/// set), i.e. the reciprocal of the textbook connection polynomial. This
/// makes the result directly comparable to GenPoly tap masks: the stream
/// obeys s[j] = parity(poly[0..L) AND s[j-L..j)).
struct BmResult {
    BitVec poly;                    // length linear_complexity + 1
    std::size_t linear_complexity;  // L
    BitVec seed;                    // first L bits of the input
};

/// Minimal LFSR generating the sequence; O(n^2 / 64) bit operations.
BmResult berlekamp_massey(const BitVec& seq);

/// Extends a prefix by the recurrence of a characteristic polynomial, to
/// total_bits. Works for any linear complexity, not just register widths.
BitVec lfsr_extend(const BitVec& char_poly, const BitVec& prefix, std::size_t total_bits);

/// Linear complexity after every prefix length 1..n; non-decreasing, and
/// jumps mark where the previous minimal LFSR first fails.
struct ProfilePoint {
    std::size_t prefix_len;
    std::size_t complexity;
};
std::vector<ProfilePoint> linear_complexity_profile(const BitVec& seq);

/// Splice analysis of a reseeded stream: overall linear complexity plus,
/// for each reseed boundary, whether the new segment merely continues the
/// previous register trajectory (checked by simulating the prior LFSR
/// forward across the boundary).
struct SpliceReport {
    std::size_t linear_complexity = 0;
    unsigned max_degree = 0;
    std::vector<bool> continuation;  // one flag per boundary (segments-1 entries)

    bool any_noncontinuation() const {
        for (bool c : continuation)
            if (!c) return true;
        return false;
    }
};

SpliceReport analyze_splice(const OkgConfig& cfg, const KeystreamResult& stream);
SpliceReport splice_complexity(const OkgConfig& cfg, SyncRng& rng, std::size_t segments);

/// Known-plaintext brute force over the (polynomial, seed) space, segment
/// by segment. A guess "works" when it reproduces the first
/// min(4g, segment_len) known keystream bits of its segment.
struct BfaProblem {
    BitVec ciphertext;
    BitVec known_plaintext;  // prefix of the pre-cipher (interleaved) stream
    std::vector<GenPoly> polys;
    std::uint64_t segment_len = 0;
    unsigned threads = 1;
    bool tau_probe = false;  // measure per-try cost before searching
};

struct BfaResult {
    std::uint64_t tried = 0;
    bool found = false;
    double elapsed_seconds = 0.0;
    double per_try_seconds = 0.0;  // median over >= 10^4 probe tries when tau_probe
    std::vector<std::optional<Selection>> recovered;  // per segment
};

BfaResult brute_force_attack(const BfaProblem& problem);

}  // namespace olfsr

#endif
