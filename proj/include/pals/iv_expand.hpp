#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pals/bits.hpp"
#include "pals/galois.hpp"
#include "pals/keyschedule.hpp"

namespace pals {

using Sbox8 = std::array<std::uint8_t, 256>;
using Sbox8Set = std::array<Sbox8, 4>;

void validate_sboxes8(const Sbox8Set& s);

// fixture format: four blocks of 256 hex bytes, 16 bytes per line
Sbox8Set read_sboxes8(std::istream& in);
void write_sboxes8(std::ostream& out, const Sbox8Set& s);

// Byte-at-a-time expansion register. Per byte-clock: the two selector stages
// pick one of four S-boxes, the next eight bits of the plain linear
// recurrence form a feedback byte, the S-box image of that byte is what
// actually shifts in (first feedback bit to the most significant position),
// and the image is also the output byte.
struct IvParams {
    FeedbackPoly poly;
    const Sbox8Set* sboxes = nullptr;   // null disables substitution (test hook)
    int discard_bytes = 40;
    int selector_stage_hi = 128;        // high bit of the 2-bit S-box index
    int selector_stage_lo = 129;
};

struct IvExpansion {
    std::vector<std::uint8_t> bytes;
    long byte_clocks = 0;
    std::array<long, 4> selector_counts{};
};

IvExpansion iv_expand_bytes(const BitVec& seed, const IvParams& params, int out_bytes);

// 1600-bit initial vector from a 256-bit session key; rejects the all-zero
// session key.
BitVec generate_iv(const SessionKey& sk, const IvParams& params);

} // namespace pals
