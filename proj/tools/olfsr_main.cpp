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

// Command-line front end. Every command is deterministic given its flags:
// all randomness flows through explicit seeds, and timing fields are the
// only non-reproducible outputs. Exit codes: 0 success, 2 configuration
// error, 3 data/file error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "olfsr/analysis.hpp"
#include "olfsr/attack.hpp"
#include "olfsr/cipher.hpp"
#include "olfsr/keygen.hpp"

namespace {

using nlohmann::json;
using namespace olfsr;

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw DataError("cannot open: " + file.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return bytes;
}

void write_file_bytes(const std::filesystem::path& file, std::span<const std::uint8_t> bytes) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + file.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw DataError("short write: " + file.string());
}

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw DataError("cannot open for writing: " + out_path);
    out << text;
}

/// Key material flags shared by keygen/encrypt/decrypt/attack-bfa.
struct BankOptions {
    std::vector<std::string> poly_hex;
    unsigned degree = 0;
    unsigned bank_size = 0;
    std::string enum_seed = "olfsr.enumerate";

    void attach(CLI::App* cmd) {
        cmd->add_option("--polys", poly_hex, "explicit generator polynomials (hex, e.g. 13,19)")
            ->delimiter(',');
        cmd->add_option("--g", degree, "polynomial degree for an auto-enumerated bank");
        cmd->add_option("--P", bank_size, "bank size for an auto-enumerated bank");
        cmd->add_option("--enum-seed", enum_seed, "search seed for randomized enumeration (degree > 32)");
    }

    std::vector<GenPoly> resolve() const {
        std::vector<GenPoly> polys;
        if (!poly_hex.empty()) {
            for (const std::string& h : poly_hex) polys.push_back(GenPoly::from_hex(h));
            return polys;
        }
        if (degree == 0 || bank_size == 0)
            throw std::invalid_argument("either --polys or both --g and --P are required");
        return enumerate_primitive(degree, bank_size, enum_seed);
    }
};

struct ThreatOptions {
    double flow_bits = 1'250'000'000.0;
    double tau = 1e-18;
    std::string target = "1e13yr";

    void attach(CLI::App* cmd) {
        cmd->add_option("--lm", flow_bits, "data flow length L_M in bits")->capture_default_str();
        cmd->add_option("--tau", tau, "seconds per decryption trial")->capture_default_str();
        cmd->add_option("--T", target, "required attack duration, with yr or s suffix")->capture_default_str();
    }

    ThreatParams resolve() const {
        ThreatParams t;
        if (flow_bits < 1.0) throw std::invalid_argument("--lm must be at least one bit");
        t.flow_bits = static_cast<std::uint64_t>(flow_bits);
        t.tau_seconds = tau;
        std::string v = target;
        double scale = 1.0;
        if (v.size() > 2 && v.substr(v.size() - 2) == "yr") {
            scale = kSecondsPerYear;
            v.resize(v.size() - 2);
        } else if (!v.empty() && v.back() == 's') {
            v.pop_back();
        }
        std::size_t used = 0;
        t.target_seconds = std::stod(v, &used) * scale;
        if (used != v.size()) throw std::invalid_argument("--T: cannot parse duration: " + target);
        return t;
    }
};

json report_to_json(const SecurityReport& r) {
    json j;
    j["keyspace_log2"] = r.keyspace.log2_value;
    j["keyspace_exact"] = r.keyspace.exact;
    if (r.keyspace.exact) j["keyspace"] = to_string_u128(r.keyspace.value);
    j["L_k"] = r.key_len;
    j["N"] = r.reseeds;
    j["T_bfa_seconds"] = r.bfa_time_seconds;
    j["T_bfa_years"] = r.bfa_time_years;
    j["storage_bits"] = to_string_u128(r.storage);
    j["storage_GB"] = r.storage_gb;
    j["g_min_bound"] = r.g_min_bound;
    return j;
}

std::string hex_u64(std::uint64_t v) {
    std::string out;
    do {
        out.insert(out.begin(), "0123456789abcdef"[v & 0xf]);
        v >>= 4;
    } while (v != 0);
    return out;
}

BitVec cap_bits(const BitVec& bits, std::uint64_t cap) {
    if (cap != 0 && bits.size() > cap) return bits.slice(0, cap);
    return bits;
}

int run(int argc, char** argv) {
    CLI::App app{"parallel-LFSR stream cipher emulator and security dimensioning toolkit"};
    app.set_version_flag("--version", "olfsr 0.1.0");
    app.set_config("--config", "", "TOML-style key=value config file; flags override");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);

    // ---- keygen ------------------------------------------------------
    auto* keygen_cmd = app.add_subcommand("keygen", "generate a keystream file plus its reseed log");
    BankOptions kg_bank;
    kg_bank.attach(keygen_cmd);
    std::uint64_t kg_segment = 0, kg_bits = 0, kg_skip = 0;
    std::string kg_rng_seed, kg_out, kg_log;
    keygen_cmd->add_option("--segment", kg_segment, "reseed period L_k in bits")->required();
    keygen_cmd->add_option("--bits", kg_bits, "total key bits to emit")->required();
    keygen_cmd->add_option("--rng-seed", kg_rng_seed, "shared selector seed")->required();
    keygen_cmd->add_option("--skip-bits", kg_skip, "bits discarded after each reseed");
    keygen_cmd->add_option("--out", kg_out, "keystream output file (packed bits)")->required();
    keygen_cmd->add_option("--log", kg_log, "reseed log output (JSON lines)");
    keygen_cmd->callback([&] {
        OkgConfig cfg{kg_bank.resolve(), kg_segment, kg_rng_seed, kg_skip};
        SyncRng rng(cfg.rng_seed);
        const KeystreamResult ks = keystream(cfg, rng, kg_bits);
        write_file_bytes(kg_out, ks.bits.to_bytes());
        if (!kg_log.empty()) write_text(reseed_log_to_jsonl(ks.reseeds, cfg), kg_log);
        std::cerr << "keygen: " << ks.bits.size() << " bits, " << ks.reseeds.size() << " segments\n";
    });

    // ---- encrypt / decrypt -------------------------------------------
    struct CipherArgs {
        BankOptions bank;
        std::uint64_t segment = 0, unit = 0, skip = 0;
        std::string rng_seed, il_seed, in, out, log;
    };
    auto attach_cipher = [](CLI::App* cmd, CipherArgs& a, bool with_log) {
        a.bank.attach(cmd);
        cmd->add_option("--segment", a.segment, "reseed period L_k in bits")->required();
        cmd->add_option("--unit", a.unit, "unit length L_m in bits (default: segment length)");
        cmd->add_option("--skip-bits", a.skip, "bits discarded after each reseed");
        cmd->add_option("--rng-seed", a.rng_seed, "shared selector seed")->required();
        cmd->add_option("--interleave-seed", a.il_seed, "shared interleaver seed")->required();
        cmd->add_option("--in", a.in, "input file")->required();
        cmd->add_option("--out", a.out, "output file")->required();
        if (with_log) cmd->add_option("--log", a.log, "reseed log output (JSON lines)");
    };
    auto session_for = [](const CipherArgs& a, std::uint64_t total_bits) {
        SessionParams p;
        p.total_len = total_bits;
        p.unit_len = a.unit == 0 ? a.segment : a.unit;
        p.interleave_seed = a.il_seed;
        p.okg = OkgConfig{a.bank.resolve(), a.segment, a.rng_seed, a.skip};
        return p;
    };

    auto* encrypt_cmd = app.add_subcommand("encrypt", "interleave, split and XOR a file into a ciphertext container");
    CipherArgs enc;
    attach_cipher(encrypt_cmd, enc, true);
    encrypt_cmd->callback([&] {
        const auto bytes = read_file_bytes(enc.in);
        const BitVec m = BitVec::from_bytes(bytes, bytes.size() * 8);
        const SessionParams params = session_for(enc, m.size());
        const EncryptResult res = encrypt_session(m, params);
        write_ciphertext_file(enc.out, join_units(res.units));
        if (!enc.log.empty()) write_text(reseed_log_to_jsonl(res.reseeds, params.okg), enc.log);
        std::cerr << "encrypt: " << m.size() << " bits in " << res.units.size() << " units\n";
    });

    auto* decrypt_cmd = app.add_subcommand("decrypt", "recover the original file from a ciphertext container");
    CipherArgs dec;
    attach_cipher(decrypt_cmd, dec, false);
    decrypt_cmd->callback([&] {
        const BitVec stream = read_ciphertext_file(dec.in);
        const SessionParams params = session_for(dec, stream.size());
        const BitVec m = decrypt_session(split_units(stream, params.unit_len), params);
        write_file_bytes(dec.out, m.to_bytes());
        std::cerr << "decrypt: " << m.size() << " bits\n";
    });

    // ---- attack -------------------------------------------------------
    auto* attack_cmd = app.add_subcommand("attack", "cryptanalysis of captured streams");
    attack_cmd->require_subcommand(1);

    auto* bm_cmd = attack_cmd->add_subcommand("bm", "Berlekamp-Massey on a captured bit stream");
    std::string bm_in, bm_out;
    std::uint64_t bm_bits = 0;
    bm_cmd->add_option("--in", bm_in, "raw packed bit file")->required();
    bm_cmd->add_option("--bits", bm_bits, "use only this many leading bits (default 65536 cap)");
    bm_cmd->add_option("--out", bm_out, "JSON output file (default stdout)");
    bm_cmd->callback([&] {
        const auto bytes = read_file_bytes(bm_in);
        const BitVec seq = cap_bits(BitVec::from_bytes(bytes, bytes.size() * 8),
                                          bm_bits != 0 ? bm_bits : 65536);
        const BmResult res = berlekamp_massey(seq);
        json j;
        j["bits_used"] = seq.size();
        j["linear_complexity"] = res.linear_complexity;
        j["poly"] = res.poly.to_string();   // characteristic form, x^0 first
        j["seed"] = res.seed.to_string();
        write_text(j.dump(2) + "\n", bm_out);
    });

    auto* prof_cmd = attack_cmd->add_subcommand("profile", "linear complexity profile as CSV");
    std::string prof_in, prof_out;
    std::uint64_t prof_bits = 0;
    prof_cmd->add_option("--in", prof_in, "raw packed bit file")->required();
    prof_cmd->add_option("--bits", prof_bits, "use only this many leading bits (default 65536 cap)");
    prof_cmd->add_option("--out", prof_out, "CSV output file (default stdout)");
    prof_cmd->callback([&] {
        const auto bytes = read_file_bytes(prof_in);
        const BitVec seq = cap_bits(BitVec::from_bytes(bytes, bytes.size() * 8),
                                          prof_bits != 0 ? prof_bits : 65536);
        std::ostringstream csv;
        csv << "prefix_len,L\n";
        for (const ProfilePoint& p : linear_complexity_profile(seq))
            csv << p.prefix_len << ',' << p.complexity << '\n';
        write_text(csv.str(), prof_out);
    });

    auto* bfa_cmd = attack_cmd->add_subcommand("bfa", "known-plaintext brute force over (polynomial, seed) pairs");
    BankOptions bfa_bank;
    bfa_bank.attach(bfa_cmd);
    std::string bfa_cipher, bfa_known, bfa_out;
    std::uint64_t bfa_segment = 0;
    unsigned bfa_threads = 1;
    bool bfa_probe = false;
    bfa_cmd->add_option("--cipher", bfa_cipher, "ciphertext container (wiretap)")->required();
    bfa_cmd->add_option("--known", bfa_known, "known prefix of the pre-cipher stream (raw packed bits)")->required();
    bfa_cmd->add_option("--segment", bfa_segment, "reseed period L_k in bits")->required();
    bfa_cmd->add_option("--threads", bfa_threads, "worker threads")->capture_default_str();
    bfa_cmd->add_flag("--tau-probe", bfa_probe, "measure the per-try cost before searching");
    bfa_cmd->add_option("--out", bfa_out, "JSON output file (default stdout)");
    bfa_cmd->callback([&] {
        BfaProblem pr;
        pr.ciphertext = read_ciphertext_file(bfa_cipher);
        const auto kb = read_file_bytes(bfa_known);
        const std::uint64_t kbits = std::min<std::uint64_t>(kb.size() * 8, pr.ciphertext.size());
        pr.known_plaintext = BitVec::from_bytes(kb, kbits);
        pr.polys = bfa_bank.resolve();
        pr.segment_len = bfa_segment;
        pr.threads = bfa_threads;
        pr.tau_probe = bfa_probe;
        const BfaResult res = brute_force_attack(pr);
        json j;
        j["tried"] = res.tried;
        j["found"] = res.found;
        j["elapsed_seconds"] = res.elapsed_seconds;
        if (bfa_probe) j["per_try_seconds"] = res.per_try_seconds;
        json segs = json::array();
        for (const auto& sel : res.recovered) {
            if (sel)
                segs.push_back({{"poly", pr.polys[sel->poly_index].to_hex()}, {"seed", hex_u64(sel->seed)}});
            else
                segs.push_back(nullptr);
        }
        j["segments"] = segs;
        write_text(j.dump(2) + "\n", bfa_out);
    });

    // ---- analyze ------------------------------------------------------
    auto* analyze_cmd = app.add_subcommand("analyze", "security equations, case studies and dimensioning");
    analyze_cmd->require_subcommand(1);
    std::string factor_cache;
    analyze_cmd->add_option("--factor-cache", factor_cache,
                            "factor table file; loaded when present, otherwise computed and saved");
    auto prime_cache = [&] {
        if (factor_cache.empty()) return;
        if (std::filesystem::exists(factor_cache))
            load_mersenne_cache(factor_cache);
        else
            save_mersenne_cache(factor_cache, 64);
    };

    auto* case_cmd = analyze_cmd->add_subcommand("case", "C1/C2 sweep tables (CSV)");
    std::string case_name, case_out;
    unsigned case_from = 0, case_to = 0, case_gmax = 0, case_gmin = 0;
    ThreatOptions case_threat;
    case_threat.attach(case_cmd);
    case_cmd->add_option("--case", case_name, "C1 (g_min=10 fixed) or C2 (g_max=45 fixed)")->required();
    case_cmd->add_option("--from", case_from, "sweep start");
    case_cmd->add_option("--to", case_to, "sweep end");
    case_cmd->add_option("--gmax", case_gmax, "single C1 point");
    case_cmd->add_option("--gmin", case_gmin, "single C2 point");
    case_cmd->add_option("--out", case_out, "CSV output file (default stdout)");
    case_cmd->callback([&] {
        prime_cache();
        CaseStudy cs;
        unsigned lo, hi;
        if (case_name == "C1") {
            cs = CaseStudy::C1;
            lo = 10;
            hi = 45;
            if (case_gmax != 0) lo = hi = case_gmax;
        } else if (case_name == "C2") {
            cs = CaseStudy::C2;
            lo = 10;
            hi = 44;
            if (case_gmin != 0) lo = hi = case_gmin;
        } else {
            throw std::invalid_argument("--case must be C1 or C2");
        }
        if (case_from != 0) lo = case_from;
        if (case_to != 0) hi = case_to;
        write_text(case_study_csv(run_case_study(cs, lo, hi, case_threat.resolve())), case_out);
    });

    auto* boundary_cmd = analyze_cmd->add_subcommand("boundary", "minimal degree for the practical-security boundary");
    std::uint64_t bd_p = 0, bd_n = 0;
    unsigned bd_pmax = 0, bd_nmax = 0;
    std::string bd_out;
    ThreatOptions bd_threat;
    bd_threat.attach(boundary_cmd);
    boundary_cmd->add_option("--P", bd_p, "number of parallel registers")->required();
    boundary_cmd->add_option("--n", bd_n, "key bits per reseed as a multiple of g")->required();
    boundary_cmd->add_option("--pmax", bd_pmax, "emit a CSV grid for P=2..pmax, n=1..nmax instead");
    boundary_cmd->add_option("--nmax", bd_nmax, "grid upper bound for n");
    boundary_cmd->add_option("--out", bd_out, "output file (default stdout)");
    boundary_cmd->callback([&] {
        prime_cache();
        const ThreatParams threat = bd_threat.resolve();
        if (bd_pmax != 0 || bd_nmax != 0) {
            if (bd_pmax < 2 || bd_nmax < 1) throw std::invalid_argument("--pmax/--nmax grid must cover P>=2, n>=1");
            std::ostringstream csv;
            csv << "P,n,g_min\n";
            for (std::uint64_t p = 2; p <= bd_pmax; ++p)
                for (std::uint64_t n = 1; n <= bd_nmax; ++n)
                    csv << p << ',' << n << ',' << boundary_min_g(p, n, threat) << '\n';
            write_text(csv.str(), bd_out);
            return;
        }
        const unsigned g = boundary_min_g(bd_p, bd_n, threat);
        json j;
        j["P"] = bd_p;
        j["n"] = bd_n;
        j["g_min"] = g;
        j["L_k_bits"] = bd_n * g;
        j["T_target_years"] = threat.target_seconds / kSecondsPerYear;
        write_text(j.dump(2) + "\n", bd_out);
    });

    auto* report_cmd = analyze_cmd->add_subcommand("report", "single security report (JSON)");
    unsigned rp_gmin = 10, rp_gmax = 45, rp_g = 0;
    std::uint64_t rp_p = 0, rp_n = 1;
    std::string rp_out;
    ThreatOptions rp_threat;
    rp_threat.attach(report_cmd);
    report_cmd->add_option("--gmin", rp_gmin, "range mode: lowest degree")->capture_default_str();
    report_cmd->add_option("--gmax", rp_gmax, "range mode: highest degree")->capture_default_str();
    report_cmd->add_option("--fixed-p", rp_p, "fixed mode: bank size (switches mode on)");
    report_cmd->add_option("--g", rp_g, "fixed mode: degree");
    report_cmd->add_option("--n", rp_n, "fixed mode: key bits per reseed as a multiple of g");
    report_cmd->add_option("--out", rp_out, "JSON output file (default stdout)");
    report_cmd->callback([&] {
        prime_cache();
        const KeyspaceSpec spec = rp_p != 0 ? KeyspaceSpec::fixed(rp_p, rp_g, rp_n)
                                            : KeyspaceSpec::range(rp_gmin, rp_gmax);
        json j = report_to_json(evaluate(spec, rp_threat.resolve()));
        if (rp_p != 0) {
            j["mode"] = "fixed";
            j["P"] = rp_p;
            j["g"] = rp_g;
            j["n"] = rp_n;
        } else {
            j["mode"] = "range";
            j["g_min"] = rp_gmin;
            j["g_max"] = rp_gmax;
        }
        write_text(j.dump(2) + "\n", rp_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
