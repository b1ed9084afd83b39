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

#include "doctest.h"

#include <stdexcept>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "olfsr/cipher.hpp"

using namespace olfsr;

namespace {

SessionParams demo_session(std::uint64_t total, std::uint64_t unit, std::uint64_t segment) {
    SessionParams p;
    p.total_len = total;
    p.unit_len = unit;
    p.interleave_seed = "interleave secret";
    p.okg = OkgConfig{enumerate_primitive(8, 2), segment, "okg secret", 0};
    return p;
}

}  // namespace

TEST_SUITE("cipher") {

TEST_CASE("interleave golden vector, seed \"golden\", 16 bits") {
    const auto perm = interleave_permutation(16, "golden");
    const std::vector<std::uint64_t> frozen{14, 5, 12, 6, 2, 10, 8, 13, 0, 1, 15, 4, 11, 7, 3, 9};
    CHECK(perm == frozen);

    BitVec one_hot(16);
    one_hot.set(0, true);
    const BitVec mixed = interleave(one_hot, "golden");
    for (std::size_t i = 0; i < 16; ++i) CHECK(mixed.get(i) == (i == frozen[0]));
}

TEST_CASE("deinterleave inverts interleave") {
    SyncRng rng("cipher.perm");
    for (std::size_t n : {0u, 1u, 2u, 63u, 64u, 65u, 1000u, 1000000u}) {
        const BitVec m = random_bits(rng, n);
        CHECK(deinterleave(interleave(m, "s"), "s") == m);
    }
    // permutation is a bijection: ones are conserved
    const BitVec m = random_bits(rng, 4096);
    CHECK(interleave(m, "s2").count_ones() == m.count_ones());
}

TEST_CASE("xor_encrypt basics") {
    CHECK(xor_encrypt(BitVec::from_string("1010"), BitVec::from_string("0110")).to_string() == "1100");
    const BitVec k = BitVec::from_string("110101");
    CHECK(xor_encrypt(k, k).count_ones() == 0);
    SyncRng rng("cipher.xor");
    const BitVec m = random_bits(rng, 100000), key = random_bits(rng, 100000);
    CHECK(xor_encrypt(xor_encrypt(m, key), key) == m);
    CHECK_THROWS_AS(xor_encrypt(m, k), std::invalid_argument);
}

TEST_CASE("session: 24 bits in units of 8") {
    const SessionParams p = demo_session(24, 8, 8);
    SyncRng rng("cipher.m24");
    const BitVec m = random_bits(rng, 24);
    const EncryptResult enc = encrypt_session(m, p);
    REQUIRE(enc.units.size() == 3);
    REQUIRE(enc.reseeds.size() == 3);
    CHECK(join_units(enc.units).size() == 24);  // length preservation
    CHECK(decrypt_session(enc.units, p) == m);

    SUBCASE("unit order does not matter") {
        std::vector<CipherUnit> shuffled{enc.units[2], enc.units[0], enc.units[1]};
        CHECK(decrypt_session(shuffled, p) == m);
    }
    SUBCASE("missing unit is an integrity error") {
        std::vector<CipherUnit> partial{enc.units[0], enc.units[2]};
        CHECK_THROWS_AS(decrypt_session(partial, p), DataError);
    }
    SUBCASE("two endpoints produce the same ciphertext") {
        const EncryptResult again = encrypt_session(m, p);
        CHECK(join_units(again.units) == join_units(enc.units));
    }
}

TEST_CASE("session: single unit when L_M = L_m") {
    const SessionParams p = demo_session(16, 16, 16);
    SyncRng rng("cipher.single");
    const BitVec m = random_bits(rng, 16);
    const EncryptResult enc = encrypt_session(m, p);
    CHECK(enc.units.size() == 1);
    CHECK(decrypt_session(enc.units, p) == m);
}

TEST_CASE("round trip over awkward lengths") {
    SyncRng rng("cipher.lengths");
    for (std::uint64_t total : {1u, 7u, 8u, 9u, 63u, 129u, 1000u, 2047u}) {
        SessionParams p = demo_session(total, 64, 64);
        const BitVec m = random_bits(rng, total);
        CHECK(decrypt_session(encrypt_session(m, p).units, p) == m);
    }
}

TEST_CASE("round trip at a megabit") {
    SessionParams p = demo_session(1'000'000, 1024, 1024);
    SyncRng rng("cipher.megabit");
    const BitVec m = random_bits(rng, 1'000'000);
    CHECK(decrypt_session(encrypt_session(m, p).units, p) == m);
}

TEST_CASE("unit length may differ from the reseed period") {
    // decoupled operating point: 48-bit units over 64-bit key segments
    SessionParams p = demo_session(1000, 48, 64);
    SyncRng rng("cipher.decoupled");
    const BitVec m = random_bits(rng, 1000);
    const EncryptResult enc = encrypt_session(m, p);
    CHECK(enc.units.size() == 21);    // ceil(1000/48)
    CHECK(enc.reseeds.size() == 16);  // ceil(1000/64)
    CHECK(decrypt_session(enc.units, p) == m);
}

TEST_CASE("tampering one ciphertext bit flips exactly the permuted plaintext bit") {
    const SessionParams p = demo_session(16, 16, 16);
    p.validate();
    SessionParams golden = p;
    golden.interleave_seed = "golden";
    SyncRng rng("cipher.tamper");
    const BitVec m = random_bits(rng, 16);
    EncryptResult enc = encrypt_session(m, golden);
    const std::size_t hit = 3;  // flip ciphertext bit 3
    enc.units[0].payload.set(hit, !enc.units[0].payload.get(hit));
    const BitVec recovered = decrypt_session(enc.units, golden);
    const auto perm = interleave_permutation(16, "golden");
    for (std::size_t i = 0; i < 16; ++i) {
        const bool flipped = perm[i] == hit;
        CHECK(recovered.get(i) == (m.get(i) ^ flipped));
    }
}

TEST_CASE("ciphertext of random data stays balanced") {
    SessionParams p = demo_session(100000, 512, 512);
    SyncRng rng("cipher.balance");
    const BitVec m = random_bits(rng, 100000);
    const double ones =
        static_cast<double>(join_units(encrypt_session(m, p).units).count_ones()) / 100000.0;
    CHECK(ones > 0.49);
    CHECK(ones < 0.51);
}

TEST_CASE("wrong selector seed scrambles roughly half of the bits") {
    SessionParams p = demo_session(100000, 512, 512);
    SyncRng rng("cipher.wrongseed");
    const BitVec m = random_bits(rng, 100000);
    const EncryptResult enc = encrypt_session(m, p);
    SessionParams wrong = p;
    wrong.okg.rng_seed = "not the secret";
    const BitVec garbled = decrypt_session(enc.units, wrong);
    const double ber = static_cast<double>((garbled ^ m).count_ones()) / 100000.0;
    CHECK(ber > 0.45);
    CHECK(ber < 0.55);
}

TEST_CASE("container file round trip and corruption detection") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = dir / "olfsr_cipher_test.olfs";
    SyncRng rng("cipher.file");
    const BitVec stream = random_bits(rng, 1003);
    write_ciphertext_file(path, stream);
    CHECK(read_ciphertext_file(path) == stream);
    CHECK(std::filesystem::file_size(path) == 16 + (1003 + 7) / 8);

    SUBCASE("bad magic") {
        auto bytes = stream.to_bytes();
        std::ofstream out(path, std::ios::binary);
        out.write("JUNK", 4);
        out.write(reinterpret_cast<const char*>(bytes.data()), 12);
        out.close();
        CHECK_THROWS_AS(read_ciphertext_file(path), DataError);
    }
    SUBCASE("truncated payload") {
        write_ciphertext_file(path, stream);
        std::filesystem::resize_file(path, 20);
        CHECK_THROWS_AS(read_ciphertext_file(path), DataError);
    }
    SUBCASE("missing file") { CHECK_THROWS_AS(read_ciphertext_file(dir / "olfsr_nope.olfs"), DataError); }
    std::filesystem::remove(path);
}

TEST_CASE("empty message is a no-op") {
    SessionParams p = demo_session(0, 8, 8);
    const EncryptResult enc = encrypt_session(BitVec{}, p);
    CHECK(enc.units.empty());
    CHECK(decrypt_session(enc.units, p).empty());
    CHECK(interleave(BitVec{}, "s").empty());
}

}  // TEST_SUITE
