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

// End-to-end acceptance suite. Each test case is one numbered criterion
// with its thresholds pinned in code; it prints a single PASS/FAIL line
// with the measured values. Run the whole binary or filter one criterion
// with -tc="criterion 07*".

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "olfsr/analysis.hpp"
#include "olfsr/attack.hpp"
#include "olfsr/cipher.hpp"

using namespace olfsr;

namespace {

struct Verdict {
    bool ok = true;
    void require(bool cond) { ok = ok && cond; }
};

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("[criterion %02d] %s: %s\n", criterion, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    CHECK_MESSAGE(ok, "criterion ", criterion, ": ", detail);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BitVec pure_stream(const GenPoly& p, std::uint64_t seed, std::size_t n) {
    Lfsr l(p, seed);
    BitVec out;
    l.generate(out, n);
    return out;
}

}  // namespace

TEST_CASE("criterion 01: round-trip correctness, 1000 random sessions") {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::vector<GenPoly>> banks(17);
    for (unsigned g = 8; g <= 16; ++g) banks[g] = enumerate_primitive(g, 4);

    SyncRng rng("acceptance.c1");
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint64_t total = rng.uniform(100000) + 1;
        const unsigned g = 8 + static_cast<unsigned>(rng.uniform(9));
        const unsigned p_count = 2 + static_cast<unsigned>(rng.uniform(3));
        SessionParams params;
        params.total_len = total;
        params.unit_len = rng.uniform(1024) + 1;
        params.interleave_seed = "c1.il." + std::to_string(trial);
        params.okg.polys.assign(banks[g].begin(), banks[g].begin() + p_count);
        params.okg.segment_len = params.unit_len;
        params.okg.rng_seed = "c1.okg." + std::to_string(trial);
        const BitVec m = random_bits(rng, total);
        if (decrypt_session(encrypt_session(m, params).units, params) != m) ++failures;
    }
    const double elapsed = seconds_since(t0);
    const bool ok = failures == 0 && elapsed < 10.0;
    report(1, ok, "failures=" + std::to_string(failures) + "/1000, elapsed=" + std::to_string(elapsed) + "s (limit 10s)");
}

TEST_CASE("criterion 02: period law for all generator polynomials to degree 12") {
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t primitive_checked = 0, irreducible_checked = 0;
    bool ok = true;
    for (unsigned g = 1; g <= 12; ++g) {
        const std::uint64_t full = mersenne(g);
        const FactoredInt order = mersenne_factors(g);
        for (u128 mid = 0; mid < u128{1} << (g == 1 ? 0 : g - 1); ++mid) {
            const GenPoly p = GenPoly::from_bits(u128{1} << g | (g == 1 ? u128{0} : mid << 1) | 1);
            if (!is_irreducible(p)) continue;
            // direct cycle detection on the register
            Lfsr l(p, 1);
            std::uint64_t period = 0;
            do {
                l.step();
                ++period;
            } while (l.state() != 1 && period <= full);
            if (is_primitive(p, order)) {
                ++primitive_checked;
                ok = ok && period == full;
            } else {
                ++irreducible_checked;
                ok = ok && period < full && full % period == 0;
            }
        }
    }
    const double elapsed = seconds_since(t0);
    ok = ok && elapsed < 60.0;
    report(2, ok,
           "primitive=" + std::to_string(primitive_checked) + ", other irreducible=" +
               std::to_string(irreducible_checked) + ", elapsed=" + std::to_string(elapsed) + "s (limit 60s)");
}

TEST_CASE("criterion 03: primitive counts match exhaustive enumeration to degree 16") {
    bool ok = true;
    std::string detail;
    for (unsigned g = 1; g <= 16; ++g) {
        const FactoredInt order = mersenne_factors(g);
        std::uint64_t found = 0;
        if (g == 1) {
            found = is_primitive(GenPoly::from_bits(0b11), order) ? 1 : 0;
        } else {
            for (u128 mid = 0; mid < u128{1} << (g - 1); ++mid)
                found += is_primitive(GenPoly::from_bits(u128{1} << g | mid << 1 | 1), order);
        }
        const std::uint64_t predicted = count_primitive(g).count;
        ok = ok && found == predicted;
        if (g == 10) detail = "g=10: enumerated " + std::to_string(found) + ", phi/g " + std::to_string(predicted);
    }
    report(3, ok, detail + ", exact match for g=1..16");
}

TEST_CASE("criterion 04: berlekamp-massey breaks every primitive LFSR to degree 10 from 2g bits") {
    SyncRng rng("acceptance.c4");
    std::uint64_t runs = 0, failures = 0;
    for (unsigned g = 1; g <= 10; ++g) {
        const std::uint64_t full = mersenne(g);
        for (const GenPoly& p : enumerate_primitive(g, count_primitive(g).count)) {
            for (int i = 0; i < 100; ++i) {
                const std::uint64_t seed = rng.nonzero_bits(g);
                const BitVec truth = pure_stream(p, seed, full + 2 * g);
                const BmResult bm = berlekamp_massey(truth.slice(0, 2 * g));
                ++runs;
                if (lfsr_extend(bm.poly, bm.seed, truth.size()) != truth) ++failures;
            }
        }
    }
    report(4, failures == 0,
           std::to_string(runs) + " reconstructions over all primitive g<=10, failures=" + std::to_string(failures));
}

TEST_CASE("criterion 05: reseeding pushes spliced complexity past g, 100/100 per degree") {
    std::string detail;
    bool ok = true;
    for (unsigned g = 8; g <= 12; ++g) {
        OkgConfig cfg{enumerate_primitive(g, 2), 2 * g, "", 0};
        int wins = 0;
        int trial = 0;
        for (int valid = 0; valid < 100; ++trial) {
            REQUIRE(trial < 1000);  // non-continuing draws are overwhelmingly likely
            cfg.rng_seed = "c5." + std::to_string(g) + "." + std::to_string(trial);
            SyncRng rng(cfg.rng_seed);
            const SpliceReport rep = splice_complexity(cfg, rng, 4);
            if (!rep.any_noncontinuation()) continue;  // skip the degenerate continuation draw
            ++valid;
            if (rep.linear_complexity > g) ++wins;
        }
        ok = ok && wins == 100;
        detail += "g" + std::to_string(g) + ":" + std::to_string(wins) + "/100 ";
    }
    report(5, ok, detail);
}

TEST_CASE("criterion 06: optimal key length is 84 bits for every g_min in [10,44]") {
    unsigned lo = 999, hi = 0;
    for (unsigned g_min = 10; g_min <= 44; ++g_min) {
        const unsigned lk = optimal_key_length(KeyspaceSpec::range(g_min, 45));
        lo = std::min(lo, lk);
        hi = std::max(hi, lk);
    }
    const bool ok = lo >= 83 && hi <= 85;  // 84 +- 1
    report(6, ok, "L_k range over the sweep: [" + std::to_string(lo) + ", " + std::to_string(hi) + "], target 84 +-1");
}

TEST_CASE("criterion 07: C1 brute-force time at g_max=37 exceeds 200 years") {
    ThreatParams threat;  // 1.25e9 bits, tau = 1e-18 s
    const double years = bfa_years(KeyspaceSpec::range(10, 37), threat);
    const bool ok = years > 200.0 && years < 1e4;
    report(7, ok, "T_bfa(C1, g_max=37) = " + std::to_string(years) + " years, target (200, 1e4)");
}

TEST_CASE("criterion 08: C2 brute-force time exceeds 1.8e8 years, constant across g_min") {
    ThreatParams threat;
    double lo = 1e308, hi = 0.0;
    for (unsigned g_min = 10; g_min <= 44; ++g_min) {
        const double years = bfa_years(KeyspaceSpec::range(g_min, 45), threat);
        lo = std::min(lo, years);
        hi = std::max(hi, years);
    }
    const double variation = (hi - lo) / hi;
    const bool ok = lo > 1.8e8 && variation < 0.01;
    report(8, ok,
           "T_bfa(C2) in [" + std::to_string(lo) + ", " + std::to_string(hi) + "] years (target > 1.8e8), variation " +
               std::to_string(100.0 * variation) + "% (target < 1%)");
}

TEST_CASE("criterion 09: storage bands for both case studies") {
    const double c1 = storage_gbyte(KeyspaceSpec::range(10, 37));
    const double c2 = storage_gbyte(KeyspaceSpec::range(10, 45));
    const bool ok = c1 >= 15.0 && c1 <= 35.0 && c2 >= 3e3 && c2 <= 3e4;
    report(9, ok,
           "C1 g_max=37: " + std::to_string(c1) + " GB (band [15,35]); C2: " + std::to_string(c2) +
               " GB (band [3e3,3e4])");
}

TEST_CASE("criterion 10: dimensioning boundary gives g=106 for both design points") {
    const ThreatParams threat = ThreatParams::with_target_years(1e13);
    const unsigned g38 = boundary_min_g(3, 8, threat);
    const unsigned g25 = boundary_min_g(2, 5, threat);
    const std::uint64_t key_bits = 8ull * g38;
    const bool ok = g38 >= 105 && g38 <= 107 && g25 >= 105 && g25 <= 107 && key_bits == 848;
    report(10, ok,
           "P=3,n=8 -> g=" + std::to_string(g38) + "; P=2,n=5 -> g=" + std::to_string(g25) +
               "; L_k = " + std::to_string(key_bits) + " bits (target 106/106/848, g +-1)");
}

TEST_CASE("criterion 11: exhaustive search trial count and timing skeleton") {
    // g=10, P=2 candidate polynomials, N=3 segments, true pair excluded
    const auto bank = enumerate_primitive(10, 4);
    OkgConfig cfg{{bank[0], bank[1]}, 64, "acceptance.c11", 0};
    SyncRng rng(cfg.rng_seed);
    const KeystreamResult key = keystream(cfg, rng, 3 * 64);

    BfaProblem pr;
    pr.ciphertext = key.bits;
    pr.known_plaintext = BitVec(key.bits.size());  // all-zero plaintext: attack the keystream
    pr.segment_len = 64;
    pr.polys = {bank[2], bank[3]};
    pr.tau_probe = true;

    // the search window is a millisecond; take medians to shed scheduler noise
    std::vector<double> elapsed, per_try;
    BfaResult res;
    for (int r = 0; r < 7; ++r) {
        res = brute_force_attack(pr);
        elapsed.push_back(res.elapsed_seconds);
        per_try.push_back(res.per_try_seconds);
    }
    std::nth_element(elapsed.begin(), elapsed.begin() + 3, elapsed.end());
    std::nth_element(per_try.begin(), per_try.begin() + 3, per_try.end());

    const std::uint64_t expected = 3ull * 2 * 1023;
    const double predicted = static_cast<double>(res.tried) * per_try[3];
    const bool count_ok = !res.found && res.tried == expected;
    const bool time_ok = elapsed[3] < 2.0 * predicted && elapsed[3] > 0.5 * predicted;
    report(11, count_ok && time_ok,
           "tried=" + std::to_string(res.tried) + " (expected " + std::to_string(expected) + "), elapsed=" +
               std::to_string(elapsed[3]) + "s vs tried*tau=" + std::to_string(predicted) + "s (2x band)");
}

TEST_CASE("criterion 12: wrong selector seed looks like a coin flip") {
    SessionParams params;
    params.total_len = 120000;
    params.unit_len = 512;
    params.interleave_seed = "c12.il";
    params.okg = OkgConfig{enumerate_primitive(12, 3), 512, "c12.okg", 0};
    SyncRng rng("acceptance.c12");
    const BitVec m = random_bits(rng, params.total_len);
    const EncryptResult enc = encrypt_session(m, params);
    SessionParams wrong = params;
    wrong.okg.rng_seed = "c12.wrong";
    const double ber =
        static_cast<double>((decrypt_session(enc.units, wrong) ^ m).count_ones()) / static_cast<double>(m.size());
    const bool ok = ber >= 0.45 && ber <= 0.55;
    report(12, ok, "bit error rate with the wrong seed: " + std::to_string(100.0 * ber) + "% (band [45,55])");
}
