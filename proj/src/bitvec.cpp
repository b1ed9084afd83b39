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

#include "olfsr/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace olfsr {

BitVec BitVec::from_string(std::string_view s) {
    BitVec out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            out.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("BitVec::from_string: expected only '0'/'1'");
    }
    return out;
}

BitVec BitVec::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits) {
    if (bytes.size() * 8 < nbits) throw std::invalid_argument("BitVec::from_bytes: not enough bytes");
    BitVec out(nbits);
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
        std::uint64_t v = 0;
        for (std::size_t b = 0; b < 8; ++b) {
            const std::size_t idx = w * 8 + b;
            if (idx < bytes.size()) v |= std::uint64_t{bytes[idx]} << (8 * b);
        }
        out.words_[w] = v;
    }
    // clear any padding bits beyond nbits
    if ((nbits & 63) != 0 && !out.words_.empty())
        out.words_.back() &= (std::uint64_t{1} << (nbits & 63)) - 1;
    return out;
}

std::uint64_t BitVec::word_at(std::size_t pos) const {
    if (pos >= size_) return 0;
    const std::size_t w = pos >> 6;
    const unsigned off = pos & 63;
    std::uint64_t v = words_[w] >> off;
    if (off != 0 && w + 1 < words_.size()) v |= words_[w + 1] << (64 - off);
    return v;
}

void BitVec::append(const BitVec& other) {
    for (std::size_t i = 0; i < other.size_; i += 64) {
        const std::uint64_t chunk = other.word_at(i);
        const std::size_t n = std::min<std::size_t>(64, other.size_ - i);
        for (std::size_t b = 0; b < n; ++b) push_back((chunk >> b) & 1u);
    }
}

BitVec BitVec::slice(std::size_t pos, std::size_t len) const {
    if (pos + len > size_) throw std::out_of_range("BitVec::slice: range past end");
    BitVec out(len);
    for (std::size_t i = 0; i < len; i += 64) {
        const std::size_t n = std::min<std::size_t>(64, len - i);
        std::uint64_t chunk = word_at(pos + i);
        if (n < 64) chunk &= (std::uint64_t{1} << n) - 1;
        out.words_[i >> 6] = chunk;
    }
    return out;
}

std::size_t BitVec::count_ones() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BitVec& BitVec::operator^=(const BitVec& rhs) {
    if (size_ != rhs.size_) throw std::invalid_argument("BitVec: xor operands differ in length");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
    return *this;
}

std::string BitVec::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::vector<std::uint8_t> BitVec::to_bytes() const {
    std::vector<std::uint8_t> out((size_ + 7) / 8, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(word_at(i * 8) & 0xffu);
    return out;
}

}  // namespace olfsr
