#include "pals/fixtures.hpp"

#include <sstream>

namespace pals {

FeedbackPoly message_key_poly() {
    return FeedbackPoly(32, {32, 29, 24, 23, 21, 19, 17, 16, 14, 13, 11, 9, 6, 3, 0});
}

// Monomials over index bits 0..8; bit i carries filter output i+1, bit 8 the
// previous memory value.
Anf memory_update_anf() {
    static const std::uint32_t monos[33] = {
        0x002, 0x004, 0x020, 0x028, 0x050, 0x081, 0x082, 0x0a0, 0x101,
        0x104, 0x181, 0x182, 0x18c, 0x194, 0x19c, 0x1a4, 0x1ac, 0x1b4,
        0x1bc, 0x1c4, 0x1cc, 0x1d0, 0x1d4, 0x1d8, 0x1dc, 0x1e0, 0x1e4,
        0x1e8, 0x1ec, 0x1f0, 0x1f4, 0x1f8, 0x1fc,
    };
    return Anf(9, std::vector<std::uint32_t>(monos, monos + 33));
}

TruthTable memory_update_table() {
    return anf_to_tt(memory_update_anf());
}

TruthTable output_combiner_table() {
    TruthTable t(9);
    for (unsigned idx = 0; idx < 512; ++idx) t.set(idx, parity64(idx));
    return t;
}

namespace {

std::map<int, FeedbackPoly> parse_polys(const char* text) {
    std::istringstream in(text);
    return parse_poly_table(in);
}

ProductionFixtures build_production() {
    ProductionFixtures fx;
    {
        std::istringstream in(fixture_text::kFactors);
        fx.factors = parse_factor_table(in);
    }
    fx.polys = parse_polys(fixture_text::kPolynomials);
    {
        std::istringstream in(fixture_text::kSpn);
        fx.spn = SpnParams::read(in);
    }
    {
        std::istringstream in(fixture_text::kSboxes8);
        fx.sboxes8 = read_sboxes8(in);
    }
    for (int i = 0; i < 8; ++i) {
        std::istringstream in(fixture_text::kFTables[i]);
        fx.f_tts[i] = TruthTable::read(in);
    }
    fx.h_tt = memory_update_table();
    fx.g_tt = output_combiner_table();

    for (int r = 0; r < 8; ++r) {
        auto it = fx.polys.find(kRegisterLengths[r]);
        if (it == fx.polys.end())
            throw Error(ErrorKind::Validation, "missing register polynomial fixture");
        fx.generator.polys[r] = it->second;
        fx.generator.f_tables[r] = Table9::from_tt(fx.f_tts[r]);
    }
    fx.generator.sboxes8 = &fx.sboxes8;
    fx.generator.h_table = Table9::from_tt(fx.h_tt);

    fx.iv_params.poly = fx.polys.at(kIvDegree);
    fx.iv_params.sboxes = &fx.sboxes8;
    fx.iv_params.discard_bytes = 40;
    fx.iv_params.selector_stage_hi = 128;
    fx.iv_params.selector_stage_lo = 129;
    return fx;
}

ToyFixtures build_toy() {
    const ProductionFixtures& prod = production();
    ToyFixtures fx;
    fx.polys = parse_polys(fixture_text::kToyPolynomials);
    for (int r = 0; r < 8; ++r) {
        auto it = fx.polys.find(kToyRegisterLengths[r]);
        if (it == fx.polys.end())
            throw Error(ErrorKind::Validation, "missing toy polynomial fixture");
        fx.generator.polys[r] = it->second;
    }
    fx.generator.sboxes8 = &prod.sboxes8;
    fx.generator.f_tables = prod.generator.f_tables;
    fx.generator.h_table = prod.generator.h_table;

    fx.iv_params.poly = fx.polys.at(16);
    fx.iv_params.sboxes = &prod.sboxes8;
    fx.iv_params.discard_bytes = 2;
    fx.iv_params.selector_stage_hi = 8;
    fx.iv_params.selector_stage_lo = 9;
    return fx;
}

}  // namespace

const ProductionFixtures& production() {
    static const ProductionFixtures fx = build_production();
    return fx;
}

const ToyFixtures& toy() {
    static const ToyFixtures fx = build_toy();
    return fx;
}

} // namespace pals
