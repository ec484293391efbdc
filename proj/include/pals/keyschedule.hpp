#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "pals/bits.hpp"
#include "pals/error.hpp"
#include "pals/galois.hpp"

namespace pals {

// 256-bit long-term secret; never all-zero.
struct MainKey {
    std::array<std::uint8_t, 32> bytes{};

    MainKey() = default;
    explicit MainKey(const std::array<std::uint8_t, 32>& b);
    static MainKey from_hex(const std::string& hex);
    std::string to_hex() const { return bytes_to_hex(bytes.data(), bytes.size()); }
};

struct SessionKey {
    std::array<std::uint8_t, 32> bytes{};
    BitVec bits() const { return BitVec::from_bytes(bytes.data(), 256); }
    std::string to_hex() const { return bytes_to_hex(bytes.data(), bytes.size()); }
};

// Substitution-permutation parameters for the 32-bit scrambler: one bit
// permutation, eight 4-bit bijections (S-box k substitutes nibble k, nibble 0
// least significant), five rounds of permute-then-substitute.
struct SpnParams {
    std::array<std::uint8_t, 32> pbox{};  // output position of input bit i (LSB-first numbering)
    std::array<std::array<std::uint8_t, 16>, 8> sboxes4{};
    int rounds = 5;

    void validate() const;

    // fixture format: line 1 the 32 destination indices, then eight lines of
    // 16 hex digits, one S-box each
    static SpnParams read(std::istream& in);
    void write(std::ostream& out) const;
};

std::uint32_t scram5(std::uint32_t w, const SpnParams& p);
std::uint32_t scram5_inverse(std::uint32_t w, const SpnParams& p);

// Expand one 32-bit message key to 256 bits by chaining the scrambler with
// round constants 1..8, then mask with the main key.
SessionKey derive_session_key(std::uint32_t message_key, const MainKey& main, const SpnParams& p);

// Message-key source: a maximal-period register stepped a full register width
// per draw, with a persistent draw counter so keys never repeat within one
// main-key lifetime. The draw value is the register state, stage 1 = bit 0.
class MessageKeyScheduler {
public:
    MessageKeyScheduler(const FeedbackPoly& poly, std::uint64_t seed, std::uint64_t counter = 0);

    std::uint64_t next();  // throws Error(Rekey) when the counter is exhausted
    std::uint64_t counter() const { return counter_; }
    std::uint64_t seed() const { return seed_; }
    int width() const { return reg_.degree(); }

private:
    Lfsr reg_;
    std::uint64_t seed_;
    std::uint64_t counter_;
    std::uint64_t limit_;
};

// Key file: three text lines, mainkey / mkseed (hex) and mkcounter (decimal).
struct KeyFile {
    MainKey main_key;
    std::uint32_t mk_seed = 0;
    std::uint64_t mk_counter = 0;

    static KeyFile parse(std::istream& in);
    void serialize(std::ostream& out) const;
    static KeyFile load(const std::string& path);
    void save(const std::string& path) const;
};

} // namespace pals
