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

#ifndef OLFSR_CIPHER_HPP
#define OLFSR_CIPHER_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "olfsr/bitvec.hpp"
#include "olfsr/keygen.hpp"

namespace olfsr {

/// File-level integrity problems (bad magic, truncation, missing units).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// End-to-end session: stream length, unit length, interleaver secret and
/// the key generator configuration. The operating point is
/// unit_len == okg.segment_len (one key segment per unit), but the two may
/// be decoupled for experiments.
struct SessionParams {
    std::uint64_t total_len = 0;  // L_M in bits
    std::uint64_t unit_len = 0;   // L_m in bits
    std::string interleave_seed;
    OkgConfig okg;

    std::uint64_t unit_count() const { return (total_len + unit_len - 1) / unit_len; }
    void validate() const;
};

struct CipherUnit {
    std::uint64_t index;
    BitVec payload;
};

/// Full-length bit permutation seeded from the shared secret (Fisher-Yates
/// over a SyncRng stream). perm[i] is the position bit i moves to.
std::vector<std::uint64_t> interleave_permutation(std::uint64_t nbits, std::string_view seed);

BitVec interleave(const BitVec& m, std::string_view seed);
BitVec deinterleave(const BitVec& m, std::string_view seed);

/// Bitwise XOR; its own inverse. Lengths must match.
BitVec xor_encrypt(const BitVec& m, const BitVec& k);

struct EncryptResult {
    std::vector<CipherUnit> units;
    std::vector<ReseedEvent> reseeds;
};

/// Interleave, split into units of unit_len, XOR each against the
/// keystream. Deterministic in (M, params).
EncryptResult encrypt_session(const BitVec& m, const SessionParams& params);

/// Inverse path; units may arrive out of order and are sorted by index.
/// A missing or duplicate index raises DataError.
BitVec decrypt_session(std::vector<CipherUnit> units, const SessionParams& params);

std::vector<CipherUnit> split_units(const BitVec& stream, std::uint64_t unit_len);
BitVec join_units(std::span<const CipherUnit> units);

/// Ciphertext container: 16-byte header (magic "OLFS", u32 version,
/// u64 little-endian bit count) followed by the packed units.
void write_ciphertext_file(const std::filesystem::path& file, const BitVec& stream);
BitVec read_ciphertext_file(const std::filesystem::path& file);

}  // namespace olfsr

#endif
