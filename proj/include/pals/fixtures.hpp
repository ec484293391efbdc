#pragma once

#include <array>
#include <map>

#include "pals/boolefn.hpp"
#include "pals/galois.hpp"
#include "pals/iv_expand.hpp"
#include "pals/keyschedule.hpp"
#include "pals/keystream.hpp"

namespace pals {

// Seeds for every derived constant, taken from consecutive 64-bit chunks of
// the fractional part of pi. Regenerating the fixtures from these seeds
// reproduces the shipped tables bit for bit (tools/pals_fixgen).
namespace seeds {
constexpr std::uint64_t kSbox4Stream = 0x243f6a8885a308d3ull;   // pi chunk 1
constexpr std::uint64_t kSbox8Stream = 0x13198a2e03707344ull;   // pi chunk 2
constexpr std::uint64_t kPolySearchBase = 0xa4093822299f31d0ull; // pi chunk 3, + degree
constexpr std::uint64_t kFilterBase = 0x082efa98ec4e6c89ull;    // pi chunk 4, + table index
constexpr std::uint64_t kSboxSearchMc = 0x452821e638d01377ull;  // pi chunk 5
}

// register lengths, front to back
constexpr std::array<int, 8> kRegisterLengths = {239, 163, 223, 181, 199, 173, 193, 229};
constexpr std::array<int, 8> kToyRegisterLengths = {5, 7, 11, 13, 17, 19, 23, 29};
constexpr int kIvDegree = 256;
constexpr int kMessageKeyDegree = 32;

// the 32-bit message-key feedback polynomial
FeedbackPoly message_key_poly();

// 9-input memory-update function as an ANF constant (33 monomials), and the
// linear 9-input output combiner
Anf memory_update_anf();
TruthTable memory_update_table();
TruthTable output_combiner_table();

struct ProductionFixtures {
    std::map<int, FeedbackPoly> polys;    // 8 register degrees + 256 + 32
    std::map<int, FactorSet> factors;     // every bundled degree
    SpnParams spn;
    Sbox8Set sboxes8;
    std::array<TruthTable, 8> f_tts;
    TruthTable h_tt;
    TruthTable g_tt;
    GeneratorFixtures generator;
    IvParams iv_params;
};

struct ToyFixtures {
    std::map<int, FeedbackPoly> polys;    // small degrees for tests
    GeneratorFixtures generator;          // lengths 5..29, shared tables
    IvParams iv_params;                   // degree 16, 2-byte discard
};

const ProductionFixtures& production();
const ToyFixtures& toy();

// raw embedded fixture text (same bytes as the files under fixtures/)
namespace fixture_text {
extern const char* const kFactors;
extern const char* const kPolynomials;
extern const char* const kToyPolynomials;
extern const char* const kSpn;
extern const char* const kSboxes8;
extern const std::array<const char*, 8> kFTables;
}

} // namespace pals
