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

#include "olfsr/keygen.hpp"

#include <bit>
#include <stdexcept>

#include "json.hpp"

namespace olfsr {

Lfsr::Lfsr(const GenPoly& poly, std::uint64_t seed) : poly_(poly), degree_(poly.degree()) {
    if (!poly.is_valid_generator())
        throw std::invalid_argument("Lfsr: polynomial must have degree >= 1 and constant term 1");
    const std::uint64_t mask = degree_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << degree_) - 1;
    if (seed == 0 || (seed & ~mask) != 0)
        throw std::invalid_argument("Lfsr: seed must be a nonzero value of g bits");
    taps_ = poly.tap_mask();
    reg_ = seed;
}

bool Lfsr::step() {
    if (reg_ == 0) throw std::logic_error("Lfsr: register went all-zero");
    const bool out = reg_ & 1u;
    const std::uint64_t fb = static_cast<std::uint64_t>(std::popcount(reg_ & taps_) & 1);
    reg_ = (reg_ >> 1) | (fb << (degree_ - 1));
    ++emitted_;
    return out;
}

void Lfsr::generate(BitVec& out, std::uint64_t nbits) {
    for (std::uint64_t i = 0; i < nbits; ++i) out.push_back(step());
}

void Lfsr::skip(std::uint64_t nbits) {
    for (std::uint64_t i = 0; i < nbits; ++i) step();
}

void OkgConfig::validate() const {
    if (polys.empty()) throw std::invalid_argument("OkgConfig: polynomial bank is empty");
    for (const GenPoly& p : polys)
        if (!p.is_valid_generator())
            throw std::invalid_argument("OkgConfig: " + p.to_hex() + " is not a valid generator polynomial");
    if (segment_len == 0) throw std::invalid_argument("OkgConfig: segment_len must be positive");
}

Selection next_selection(SyncRng& rng, const OkgConfig& cfg) {
    cfg.validate();
    Selection sel;
    sel.poly_index = static_cast<std::uint32_t>(rng.uniform(cfg.polys.size()));
    sel.seed = rng.nonzero_bits(cfg.polys[sel.poly_index].degree());
    return sel;
}

KeystreamResult keystream(const OkgConfig& cfg, SyncRng& rng, std::uint64_t total_bits) {
    cfg.validate();
    KeystreamResult out;
    std::uint64_t produced = 0;
    while (produced < total_bits) {
        const Selection sel = next_selection(rng, cfg);
        out.reseeds.push_back({produced, sel.poly_index, sel.seed});
        Lfsr lfsr(cfg.polys[sel.poly_index], sel.seed);
        lfsr.skip(cfg.skip_bits);
        const std::uint64_t n = std::min(cfg.segment_len, total_bits - produced);
        lfsr.generate(out.bits, n);
        produced += n;
    }
    return out;
}

BitVec replay_segment(const OkgConfig& cfg, const ReseedEvent& ev, std::uint64_t nbits) {
    if (ev.poly_index >= cfg.polys.size())
        throw std::invalid_argument("replay_segment: polynomial index outside the bank");
    Lfsr lfsr(cfg.polys[ev.poly_index], ev.seed);
    lfsr.skip(cfg.skip_bits);
    BitVec out;
    lfsr.generate(out, nbits);
    return out;
}

namespace {

std::string hex_u64(std::uint64_t v) {
    std::string out;
    do {
        out.insert(out.begin(), "0123456789abcdef"[v & 0xf]);
        v >>= 4;
    } while (v != 0);
    return out;
}

std::uint64_t parse_hex_u64(const std::string& s) {
    if (s.empty() || s.size() > 16) throw std::invalid_argument("reseed log: bad hex field");
    std::uint64_t v = 0;
    for (char c : s) {
        v <<= 4;
        if (c >= '0' && c <= '9')
            v |= static_cast<std::uint64_t>(c - '0');
        else if (c >= 'a' && c <= 'f')
            v |= static_cast<std::uint64_t>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            v |= static_cast<std::uint64_t>(c - 'A' + 10);
        else
            throw std::invalid_argument("reseed log: bad hex digit");
    }
    return v;
}

}  // namespace

std::string reseed_log_to_jsonl(std::span<const ReseedEvent> log, const OkgConfig& cfg) {
    std::string out;
    for (const ReseedEvent& ev : log) {
        nlohmann::json j;
        j["offset"] = ev.offset;
        j["poly"] = cfg.polys.at(ev.poly_index).to_hex();
        j["seed"] = hex_u64(ev.seed);
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::vector<ReseedEvent> reseed_log_from_jsonl(std::string_view text, const OkgConfig& cfg) {
    std::vector<ReseedEvent> log;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (line.empty()) continue;
        const auto j = nlohmann::json::parse(line);
        ReseedEvent ev;
        ev.offset = j.at("offset").get<std::uint64_t>();
        const GenPoly poly = GenPoly::from_hex(j.at("poly").get<std::string>());
        ev.seed = parse_hex_u64(j.at("seed").get<std::string>());
        std::uint32_t idx = 0;
        for (; idx < cfg.polys.size(); ++idx)
            if (cfg.polys[idx] == poly) break;
        if (idx == cfg.polys.size())
            throw std::invalid_argument("reseed log: polynomial " + poly.to_hex() + " not in the bank");
        ev.poly_index = idx;
        log.push_back(ev);
    }
    return log;
}

}  // namespace olfsr
