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

#ifndef OLFSR_SYNC_RNG_HPP
#define OLFSR_SYNC_RNG_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "olfsr/bitvec.hpp"

namespace olfsr {

/// ChaCha20 block function (RFC 8439 layout: 256-bit key, 32-bit block
/// counter, 96-bit nonce). Exposed for test vectors.
void chacha20_block(const std::array<std::uint32_t, 8>& key, std::uint32_t counter,
                    const std::array<std::uint32_t, 3>& nonce, std::span<std::uint8_t, 64> out);

/// Deterministic keyed byte stream shared by both endpoints of a session.
/// Two instances built from the same seed emit identical streams; there is
/// no ambient entropy anywhere. Seeds up to 32 bytes key the cipher
/// directly (zero-padded); longer seeds fold in by XOR, and the seed length
/// goes into the nonce.
class SyncRng {
  public:
    explicit SyncRng(std::string_view seed);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform draw from [0, bound), bound >= 1. Rejection-sampled, unbiased.
    std::uint64_t uniform(std::uint64_t bound);

    /// Uniform nonzero value of `width` bits (1 <= width <= 64); the
    /// all-zero pattern is rejection-sampled away.
    std::uint64_t nonzero_bits(unsigned width);

    void fill_bytes(std::span<std::uint8_t> out);

  private:
    std::array<std::uint32_t, 8> key_{};
    std::array<std::uint32_t, 3> nonce_{};
    std::uint64_t block_index_ = 0;
    std::array<std::uint8_t, 64> block_{};
    unsigned pos_ = 64;

    void refill();
};

BitVec random_bits(SyncRng& rng, std::size_t nbits);

}  // namespace olfsr

#endif
