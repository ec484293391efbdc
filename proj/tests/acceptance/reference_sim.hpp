#pragma once

// Independent step-by-step simulator of the keystream generator, kept
// deliberately naive: one byte per stage, taps walked as plain loops. It is
// the cross-check oracle for the optimized core and must not share any
// machinery with it beyond the fixture tables fed in.

#include <array>
#include <cstdint>
#include <vector>

namespace refsim {

struct RefRegister {
    std::vector<int> stages;      // index 0 unused; stages[1..L]
    std::vector<int> taps;        // feedback exponents, including 0 and L
    int length = 0;
};

struct RefGenerator {
    std::array<RefRegister, 8> regs;
    std::array<std::array<std::uint8_t, 256>, 4> sboxes;
    std::array<std::array<int, 512>, 8> f_tables;  // table[i][index] in {0,1}
    std::array<int, 512> h_table;
    int memory = 0;

    static RefGenerator build(const std::array<std::vector<int>, 8>& poly_taps,
                              const std::array<std::vector<int>, 8>& start_bits,
                              const std::array<std::array<std::uint8_t, 256>, 4>& sboxes,
                              const std::array<std::array<int, 512>, 8>& f_tables,
                              const std::array<int, 512>& h_table);

    int step();
    std::vector<int> run(int n);
};

} // namespace refsim
