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

#include "olfsr/sync_rng.hpp"

#include <bit>
#include <stdexcept>

namespace olfsr {

namespace {

inline void quarter_round(std::uint32_t& a, std::uint32_t& b, std::uint32_t& c, std::uint32_t& d) {
    a += b; d ^= a; d = std::rotl(d, 16);
    c += d; b ^= c; b = std::rotl(b, 12);
    a += b; d ^= a; d = std::rotl(d, 8);
    c += d; b ^= c; b = std::rotl(b, 7);
}

}  // namespace

void chacha20_block(const std::array<std::uint32_t, 8>& key, std::uint32_t counter,
                    const std::array<std::uint32_t, 3>& nonce, std::span<std::uint8_t, 64> out) {
    std::array<std::uint32_t, 16> st = {0x61707865u, 0x3320646eu, 0x79622d32u, 0x6b206574u,
                                        key[0], key[1], key[2], key[3],
                                        key[4], key[5], key[6], key[7],
                                        counter, nonce[0], nonce[1], nonce[2]};
    std::array<std::uint32_t, 16> x = st;
    for (int round = 0; round < 10; ++round) {
        quarter_round(x[0], x[4], x[8], x[12]);
        quarter_round(x[1], x[5], x[9], x[13]);
        quarter_round(x[2], x[6], x[10], x[14]);
        quarter_round(x[3], x[7], x[11], x[15]);
        quarter_round(x[0], x[5], x[10], x[15]);
        quarter_round(x[1], x[6], x[11], x[12]);
        quarter_round(x[2], x[7], x[8], x[13]);
        quarter_round(x[3], x[4], x[9], x[14]);
    }
    for (std::size_t i = 0; i < 16; ++i) {
        const std::uint32_t v = x[i] + st[i];
        out[4 * i + 0] = static_cast<std::uint8_t>(v);
        out[4 * i + 1] = static_cast<std::uint8_t>(v >> 8);
        out[4 * i + 2] = static_cast<std::uint8_t>(v >> 16);
        out[4 * i + 3] = static_cast<std::uint8_t>(v >> 24);
    }
}

SyncRng::SyncRng(std::string_view seed) {
    std::array<std::uint8_t, 32> kb{};
    for (std::size_t i = 0; i < seed.size(); ++i) kb[i % 32] ^= static_cast<std::uint8_t>(seed[i]);
    for (std::size_t i = 0; i < 8; ++i)
        key_[i] = std::uint32_t{kb[4 * i]} | std::uint32_t{kb[4 * i + 1]} << 8 |
                  std::uint32_t{kb[4 * i + 2]} << 16 | std::uint32_t{kb[4 * i + 3]} << 24;
    nonce_ = {0, 0, static_cast<std::uint32_t>(seed.size())};
}

void SyncRng::refill() {
    std::array<std::uint32_t, 3> nonce = nonce_;
    nonce[0] = static_cast<std::uint32_t>(block_index_ >> 32);
    chacha20_block(key_, static_cast<std::uint32_t>(block_index_), nonce, block_);
    ++block_index_;
    pos_ = 0;
}

std::uint32_t SyncRng::next_u32() {
    if (pos_ + 4 > 64) refill();
    const std::uint32_t v = std::uint32_t{block_[pos_]} | std::uint32_t{block_[pos_ + 1]} << 8 |
                            std::uint32_t{block_[pos_ + 2]} << 16 | std::uint32_t{block_[pos_ + 3]} << 24;
    pos_ += 4;
    return v;
}

std::uint64_t SyncRng::next_u64() {
    const std::uint64_t lo = next_u32();
    return lo | std::uint64_t{next_u32()} << 32;
}

std::uint64_t SyncRng::uniform(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SyncRng::uniform: bound must be positive");
    if ((bound & (bound - 1)) == 0) return next_u64() & (bound - 1);
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

std::uint64_t SyncRng::nonzero_bits(unsigned width) {
    if (width == 0 || width > 64) throw std::invalid_argument("SyncRng::nonzero_bits: width must be 1..64");
    const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    for (;;) {
        const std::uint64_t r = next_u64() & mask;
        if (r != 0) return r;
    }
}

void SyncRng::fill_bytes(std::span<std::uint8_t> out) {
    for (auto& b : out) {
        if (pos_ >= 64) refill();
        b = block_[pos_++];
    }
}

BitVec random_bits(SyncRng& rng, std::size_t nbits) {
    BitVec out(nbits);
    for (std::size_t i = 0; i < nbits; i += 64) {
        const std::size_t n = std::min<std::size_t>(64, nbits - i);
        std::uint64_t w = rng.next_u64();
        if (n < 64) w &= (std::uint64_t{1} << n) - 1;
        for (std::size_t b = 0; b < n; ++b)
            if ((w >> b) & 1u) out.set(i + b, true);
    }
    return out;
}

}  // namespace olfsr
