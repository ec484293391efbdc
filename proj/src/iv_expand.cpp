#include "pals/iv_expand.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace pals {

void validate_sboxes8(const Sbox8Set& sboxes) {
    for (const Sbox8& s : sboxes) {
        std::array<bool, 256> hit{};
        for (std::uint8_t v : s) {
            if (hit[v]) throw Error(ErrorKind::Validation, "8-bit S-box is not a bijection");
            hit[v] = true;
        }
    }
}

Sbox8Set read_sboxes8(std::istream& in) {
    Sbox8Set out;
    std::string hex, line;
    while (std::getline(in, line)) hex += line;
    std::vector<std::uint8_t> raw = hex_to_bytes(hex);
    if (raw.size() != 4 * 256) throw Error(ErrorKind::Format, "S-box fixture needs 4x256 bytes");
    for (int k = 0; k < 4; ++k)
        std::copy(raw.begin() + 256 * k, raw.begin() + 256 * (k + 1), out[k].begin());
    validate_sboxes8(out);
    return out;
}

void write_sboxes8(std::ostream& out, const Sbox8Set& sboxes) {
    for (const Sbox8& s : sboxes) {
        for (int row = 0; row < 16; ++row)
            out << bytes_to_hex(s.data() + 16 * row, 16) << "\n";
    }
}

IvExpansion iv_expand_bytes(const BitVec& seed, const IvParams& params, int out_bytes) {
    const int L = params.poly.degree;
    if (static_cast<int>(seed.size()) != L)
        throw Error(ErrorKind::Validation, "seed length must match register degree");
    if (seed.popcount() == 0)
        throw Error(ErrorKind::Validation, "all-zero seed cannot initialize the expander");
    if (params.selector_stage_hi < 1 || params.selector_stage_lo < 1 ||
        params.selector_stage_hi > L || params.selector_stage_lo > L)
        throw Error(ErrorKind::Validation, "selector stages out of range");

    Lfsr reg(params.poly, seed);
    IvExpansion out;
    out.bytes.reserve(out_bytes);
    for (int c = 0; c < params.discard_bytes + out_bytes; ++c) {
        const int sel = (reg.stage(params.selector_stage_hi) << 1) | reg.stage(params.selector_stage_lo);
        ++out.selector_counts[sel];
        ++out.byte_clocks;
        // eight plain recurrence steps; the new bit lands in stage 1 each time
        std::uint8_t fb = 0;
        for (int k = 0; k < 8; ++k) {
            reg.clock();
            fb = static_cast<std::uint8_t>((fb << 1) | reg.stage(1));
        }
        const std::uint8_t s = params.sboxes ? (*params.sboxes)[sel][fb] : fb;
        // replace the eight freshly inserted stages with the substituted
        // byte: first feedback bit's slot (stage 8) takes the high bit
        for (int k = 0; k < 8; ++k) reg.set_stage(k + 1, (s >> k) & 1);
        if (c >= params.discard_bytes) out.bytes.push_back(s);
    }
    return out;
}

BitVec generate_iv(const SessionKey& sk, const IvParams& params) {
    if (params.poly.degree != 256)
        throw Error(ErrorKind::Validation, "initial-vector register must have degree 256");
    // session-key bit 1 seeds stage 1
    IvExpansion e = iv_expand_bytes(sk.bits(), params, 200);
    return BitVec::from_bytes(e.bytes, 1600);
}

} // namespace pals
