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

#ifndef OLFSR_BITVEC_HPP
#define OLFSR_BITVEC_HPP

#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace olfsr {

/// Dense bit sequence. Bit i of the stream lives at word i/64, bit i%64;
/// when packed to bytes, bit i goes to byte i/8 at in-byte position i%8
/// (LSB-first within each byte). Unused bits of the last word are kept zero.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : words_((nbits + 63) / 64, 0), size_(nbits) {}

    static BitVec from_string(std::string_view zeros_and_ones);
    static BitVec from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(std::size_t i) const {
        assert(i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        assert(i < size_);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void push_back(bool v) {
        if ((size_ & 63) == 0) words_.push_back(0);
        ++size_;
        if (v) set(size_ - 1, true);
    }

    /// 64 bits starting at `pos`, zero-padded past the end.
    std::uint64_t word_at(std::size_t pos) const;

    void append(const BitVec& other);
    BitVec slice(std::size_t pos, std::size_t len) const;

    std::size_t count_ones() const;

    BitVec& operator^=(const BitVec& rhs);
    friend BitVec operator^(BitVec lhs, const BitVec& rhs) {
        lhs ^= rhs;
        return lhs;
    }
    bool operator==(const BitVec& rhs) const { return size_ == rhs.size_ && words_ == rhs.words_; }

    std::string to_string() const;
    std::vector<std::uint8_t> to_bytes() const;

    std::span<const std::uint64_t> words() const { return words_; }

  private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

}  // namespace olfsr

#endif
