#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pals/bits.hpp"
#include "pals/boolefn.hpp"
#include "pals/galois.hpp"
#include "pals/iv_expand.hpp"
#include "pals/keyschedule.hpp"

namespace pals {

// 512-entry lookup table for a 9-input Boolean function, packed.
struct Table9 {
    std::array<std::uint64_t, 8> words{};
    int get(unsigned idx) const { return static_cast<int>((words[idx >> 6] >> (idx & 63)) & 1); }
    static Table9 from_tt(const TruthTable& t);
};

// Immutable tables shared by all generator instances: the eight register
// polynomials, the four 8-bit S-boxes reused from the expansion stage, the
// eight filter tables, and the memory-update table.
struct GeneratorFixtures {
    std::array<FeedbackPoly, 8> polys;
    const Sbox8Set* sboxes8 = nullptr;
    std::array<Table9, 8> f_tables;
    Table9 h_table;

    int total_length() const;
    // filter taps: stage ceil(k*L/9) of register r feeds input k (1..8)
    std::array<std::array<int, 8>, 8> tap_stages() const;
};

// which register indices (1..8) clock for a given control byte: the majority
// bit value wins, ties clock everyone; control bit 7 is register 1, control
// bit 0 is register 8
std::array<bool, 8> clock_control(std::uint8_t control);

// S-box index from the eight register output bits: odd registers XOR to the
// high selector bit, even registers to the low one
int select_sbox(const std::array<int, 8>& out_bits);

struct PlacementEntry {
    int register_index;  // 0-based
    int stage;           // 1-based
};

// Distribution plan for the first 163 initial-vector bits: overlapping 3-bit
// windows of the session key choose the register, stages fill bottom-up.
struct PlacementPlan {
    std::array<PlacementEntry, 163> assignments;
};

PlacementPlan plan_placement(const SessionKey& sk);

struct InitReport {
    std::array<bool, 8> repaired{};  // registers whose all-zero state was patched
    int repair_count = 0;
};

class GeneratorState {
public:
    // direct construction from per-register stage bits (toy variants, tests)
    GeneratorState(const GeneratorFixtures& fx, const std::array<BitVec, 8>& register_bits);

    // production initialization from session key and initial vector
    static GeneratorState load_initial_state(const GeneratorFixtures& fx, const SessionKey& sk,
                                             const BitVec& iv, PlacementPlan* plan_out = nullptr,
                                             InitReport* report_out = nullptr);

    // re-synchronization for a fresh message key: XOR the vector into the
    // registers front to back, reset the memory bit
    InitReport resync(const BitVec& iv);

    int next_bit();
    BitVec keystream(std::size_t n);
    void keystream_bytes(std::uint8_t* out, std::size_t n_bytes);

    int memory_bit() const { return h_prev_; }
    const std::array<std::uint64_t, 8>& clock_counts() const { return clock_counts_; }
    std::uint64_t steps() const { return steps_; }
    BitVec register_bits(int r) const;

private:
    struct Register {
        std::array<std::uint64_t, 4> state{};
        std::array<std::uint64_t, 4> fb_mask{};
        std::uint64_t top_clear = 0;
        int words = 0;
        int degree = 0;
        std::array<int, 8> taps{};  // 1-based stages feeding the filter

        int bit(int stage1based) const {
            const int b = stage1based - 1;
            return static_cast<int>((state[b >> 6] >> (b & 63)) & 1);
        }
        int output() const { return bit(degree); }
        void clock();
        bool zero() const;
        unsigned filter_index(int control_bit) const;
    };

    GeneratorState(const GeneratorFixtures& fx);
    void force_nonzero(InitReport& rep);

    const GeneratorFixtures* fx_;
    std::array<Register, 8> regs_;
    int h_prev_ = 0;
    std::array<std::uint64_t, 8> clock_counts_{};
    std::uint64_t steps_ = 0;
};

} // namespace pals
