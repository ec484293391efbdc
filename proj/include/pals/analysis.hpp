#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pals/bits.hpp"
#include "pals/galois.hpp"

namespace pals {

struct LinearComplexityProfile {
    std::size_t final_lc = 0;
    // (prefix length, new complexity) at every jump
    std::vector<std::pair<std::size_t, std::size_t>> profile;
};

// shortest LFSR generating the sequence, with the jump profile
LinearComplexityProfile berlekamp_massey(const BitVec& bits);

struct TestVerdict {
    double statistic = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// monobit / runs / poker at significance 0.01; needs at least 20000 bits
struct RandomnessReport {
    TestVerdict monobit;  // |z| against the two-sided normal quantile
    TestVerdict runs;     // |z| from the transition count
    TestVerdict poker;    // 4-bit chi-square against the upper 0.99 quantile
    bool all_pass() const { return monobit.pass && runs.pass && poker.pass; }
};

RandomnessReport randomness_suite(const BitVec& bits);

// attack-cost calculators -----------------------------------------------

struct TmtoCost {
    double log2_time = 0.0;
    double log2_memory = 0.0;
};

// birthday-bound tradeoff with m = n/2:
//   T = (n + m^2)(2^m + 2^(n-m)),  M = (n + m) 2^m
TmtoCost tmto_cost(int state_bits);

// low-degree key-recovery cost 2^(d-1) n + n^2, as log2
double cube_cost_log2(int degree, int secret_vars);

struct KeyspaceReport {
    // exact count of primitive feedback polynomials per register: phi(2^L-1)/L
    std::vector<double> log2_primitive_polys;
    double log2_product_form = 0.0;    // product over registers of U_i (2^L_i - 1)
    double log2_sum_form = 0.0;        // sum over registers of U_i (2^L_i - 1)
    // same sum with every degree-L polynomial with nonzero constant term
    // counted (2^(L-1) per register) instead of only the primitive ones
    double log2_sum_form_all_polys = 0.0;
};

// exact big-integer evaluation from the factor tables; throws on a missing
// or inconsistent factorization
KeyspaceReport keyspace_log2(const std::vector<int>& lengths,
                             const std::map<int, FactorSet>& factors);

// avalanche ---------------------------------------------------------------

using BitTransform = std::function<BitVec(const BitVec&)>;

struct AvalancheMatrix {
    int in_bits = 0;
    int out_bits = 0;
    int trials = 0;
    std::vector<std::uint32_t> counts;  // row = input bit, column = output bit

    double prob(int i, int j) const { return double(counts[std::size_t(i) * out_bits + j]) / trials; }
    double min_prob() const;
    double max_prob() const;
    std::vector<double> row_means() const;  // per input bit
    std::vector<double> col_means() const;  // per output bit
};

// entry (i,j): empirical probability that flipping input bit i flips output
// bit j, over `trials` shared-base trials. The OpenMP version partitions
// trials across threads and is count-identical to the serial one.
AvalancheMatrix avalanche_matrix(const BitTransform& fn, int in_bits, int out_bits, int trials,
                                 std::uint64_t seed);
AvalancheMatrix avalanche_matrix_serial(const BitTransform& fn, int in_bits, int out_bits,
                                        int trials, std::uint64_t seed);

// counting kernels (serial reference + OpenMP), used by the randomness suite
// and the benchmark tool
std::size_t count_ones(const std::vector<std::uint64_t>& words);
std::size_t count_ones_serial(const std::vector<std::uint64_t>& words);

// upper tail of the chi-square distribution (regularized incomplete gamma)
double chi_square_upper_tail(double x, int dof);

} // namespace pals
