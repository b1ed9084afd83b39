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

#ifndef OLFSR_KEYGEN_HPP
#define OLFSR_KEYGEN_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "olfsr/bitvec.hpp"
#include "olfsr/gf2poly.hpp"
#include "olfsr/sync_rng.hpp"

namespace olfsr {

// Hardware context of the emulated system; descriptive only, nothing here
// is simulated.
inline constexpr double kSelectorLineRateBitsPerSec = 1.3e9;   // electronic RNG feeding the bank
inline constexpr double kKeygenLineRateBitsPerSec = 250e9;     // optical key output
inline constexpr double kXorGateLineRateBitsPerSec = 160e9;    // optical XOR stage

/// One Fibonacci-configuration LFSR. The register holds the next g output
/// bits: bit 0 is emitted first, the feedback bit (parity of register AND
/// tap mask) enters at position g-1. With seed h, the first g outputs are
/// exactly the bits of h from index 0 upward.
class Lfsr {
  public:
    Lfsr(const GenPoly& poly, std::uint64_t seed);

    bool step();
    void generate(BitVec& out, std::uint64_t nbits);
    void skip(std::uint64_t nbits);

    const GenPoly& poly() const { return poly_; }
    std::uint64_t state() const { return reg_; }
    std::uint64_t emitted() const { return emitted_; }

  private:
    GenPoly poly_;
    std::uint64_t taps_;
    std::uint64_t reg_;
    unsigned degree_;
    std::uint64_t emitted_ = 0;
};

/// Configuration of the parallel-LFSR key generator: the polynomial bank,
/// the reseed period in bits, and the shared selector seed. Polynomials may
/// mix degrees; the seed width always follows the selected polynomial.
struct OkgConfig {
    std::vector<GenPoly> polys;
    std::uint64_t segment_len = 0;
    std::string rng_seed;
    std::uint64_t skip_bits = 0;  // discarded after each reseed; hardware fidelity knob

    void validate() const;
};

struct Selection {
    std::uint32_t poly_index;
    std::uint64_t seed;
};

/// Draws the next (polynomial, seed) pair: index uniform over the bank,
/// seed uniform over the nonzero g-bit strings. Source and destination
/// stay in lockstep because both advance identical SyncRng streams.
Selection next_selection(SyncRng& rng, const OkgConfig& cfg);

struct ReseedEvent {
    std::uint64_t offset;  // position in the emitted stream where the segment starts
    std::uint32_t poly_index;
    std::uint64_t seed;

    bool operator==(const ReseedEvent&) const = default;
};

struct KeystreamResult {
    BitVec bits;
    std::vector<ReseedEvent> reseeds;
};

/// Emits total_bits key bits, reseeding every segment_len bits; the final
/// segment may be truncated. One log entry per segment.
KeystreamResult keystream(const OkgConfig& cfg, SyncRng& rng, std::uint64_t total_bits);

/// Regenerates one segment from its log entry.
BitVec replay_segment(const OkgConfig& cfg, const ReseedEvent& ev, std::uint64_t nbits);

/// Reseed log serialization, JSON lines: {"offset":0,"poly":"13","seed":"1"}.
std::string reseed_log_to_jsonl(std::span<const ReseedEvent> log, const OkgConfig& cfg);
std::vector<ReseedEvent> reseed_log_from_jsonl(std::string_view text, const OkgConfig& cfg);

}  // namespace olfsr

#endif
