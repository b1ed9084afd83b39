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

#include "olfsr/cipher.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <numeric>

namespace olfsr {

namespace {
constexpr char kMagic[4] = {'O', 'L', 'F', 'S'};
constexpr std::uint32_t kVersion = 1;
}  // namespace

void SessionParams::validate() const {
    if (unit_len == 0) throw std::invalid_argument("SessionParams: unit_len must be positive");
    okg.validate();
}

std::vector<std::uint64_t> interleave_permutation(std::uint64_t nbits, std::string_view seed) {
    std::vector<std::uint64_t> perm(nbits);
    std::iota(perm.begin(), perm.end(), 0);
    SyncRng rng(seed);
    for (std::uint64_t i = nbits; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.uniform(i)]);
    return perm;
}

BitVec interleave(const BitVec& m, std::string_view seed) {
    const auto perm = interleave_permutation(m.size(), seed);
    BitVec out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.get(i)) out.set(perm[i], true);
    return out;
}

BitVec deinterleave(const BitVec& m, std::string_view seed) {
    const auto perm = interleave_permutation(m.size(), seed);
    BitVec out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.get(perm[i])) out.set(i, true);
    return out;
}

BitVec xor_encrypt(const BitVec& m, const BitVec& k) {
    if (m.size() != k.size()) throw std::invalid_argument("xor_encrypt: message and key lengths differ");
    BitVec out = m;
    out ^= k;
    return out;
}

std::vector<CipherUnit> split_units(const BitVec& stream, std::uint64_t unit_len) {
    if (unit_len == 0) throw std::invalid_argument("split_units: unit_len must be positive");
    std::vector<CipherUnit> units;
    for (std::uint64_t off = 0; off < stream.size(); off += unit_len) {
        const std::uint64_t n = std::min<std::uint64_t>(unit_len, stream.size() - off);
        units.push_back({off / unit_len, stream.slice(off, n)});
    }
    return units;
}

BitVec join_units(std::span<const CipherUnit> units) {
    BitVec out;
    for (const CipherUnit& u : units) out.append(u.payload);
    return out;
}

EncryptResult encrypt_session(const BitVec& m, const SessionParams& params) {
    params.validate();
    if (m.size() != params.total_len)
        throw std::invalid_argument("encrypt_session: message length does not match total_len");
    const BitVec shuffled = interleave(m, params.interleave_seed);
    SyncRng rng(params.okg.rng_seed);
    KeystreamResult key = keystream(params.okg, rng, m.size());
    EncryptResult out;
    out.reseeds = std::move(key.reseeds);
    out.units = split_units(xor_encrypt(shuffled, key.bits), params.unit_len);
    return out;
}

BitVec decrypt_session(std::vector<CipherUnit> units, const SessionParams& params) {
    params.validate();
    std::sort(units.begin(), units.end(),
              [](const CipherUnit& a, const CipherUnit& b) { return a.index < b.index; });
    for (std::size_t i = 0; i < units.size(); ++i)
        if (units[i].index != i)
            throw DataError("decrypt_session: unit " + std::to_string(i) + " missing from the session");
    const BitVec stream = join_units(units);
    SyncRng rng(params.okg.rng_seed);
    const KeystreamResult key = keystream(params.okg, rng, stream.size());
    return deinterleave(xor_encrypt(stream, key.bits), params.interleave_seed);
}

void write_ciphertext_file(const std::filesystem::path& file, const BitVec& stream) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + file.string());
    char header[16] = {};
    std::memcpy(header, kMagic, 4);
    const std::uint32_t version = kVersion;
    std::memcpy(header + 4, &version, 4);
    const std::uint64_t nbits = stream.size();
    std::memcpy(header + 8, &nbits, 8);
    out.write(header, sizeof header);
    const auto bytes = stream.to_bytes();
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw DataError("short write: " + file.string());
}

BitVec read_ciphertext_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw DataError("cannot open: " + file.string());
    char header[16];
    in.read(header, sizeof header);
    if (in.gcount() != sizeof header) throw DataError("truncated header: " + file.string());
    if (std::memcmp(header, kMagic, 4) != 0) throw DataError("bad magic: " + file.string());
    std::uint32_t version = 0;
    std::memcpy(&version, header + 4, 4);
    if (version != kVersion)
        throw DataError("unsupported container version " + std::to_string(version) + ": " + file.string());
    std::uint64_t nbits = 0;
    std::memcpy(&nbits, header + 8, 8);
    std::vector<std::uint8_t> bytes((nbits + 7) / 8);
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (static_cast<std::size_t>(in.gcount()) != bytes.size())
        throw DataError("truncated payload: " + file.string());
    return BitVec::from_bytes(bytes, nbits);
}

}  // namespace olfsr
