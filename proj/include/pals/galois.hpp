#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pals/bits.hpp"
#include "pals/error.hpp"

namespace pals {

using bigint = boost::multiprecision::cpp_int;

// Feedback polynomial over GF(2). Taps are exponents with coefficient 1;
// x^L and x^0 are always present (non-singular recurrence).
struct FeedbackPoly {
    int degree = 0;
    std::vector<int> taps;  // strictly decreasing, taps.front()==degree, taps.back()==0

    FeedbackPoly() = default;
    FeedbackPoly(int deg, std::vector<int> tap_exps);

    int weight() const { return static_cast<int>(taps.size()); }
    bool has_tap(int e) const;

    // text form "degree: e1,e2,...,ek" with exponents in decreasing order
    static FeedbackPoly from_line(const std::string& line);
    std::string to_line() const;
};

// Prime factorization of 2^L - 1, with multiplicity. Required to certify
// primitivity; validated against the modulus on construction.
struct FactorSet {
    int modulus_exponent = 0;
    std::vector<bigint> prime_factors;

    FactorSet() = default;
    FactorSet(int L, std::vector<bigint> factors, bool check = true);

    bigint modulus() const;      // 2^L - 1
    void validate() const;       // product with multiplicity == modulus

    // text form "L: q1,q2,..."
    static FactorSet from_line(const std::string& line);
    std::string to_line() const;
};

// parse one FactorSet per line, keyed by exponent; '#' starts a comment
std::map<int, FactorSet> parse_factor_table(std::istream& in);
std::map<int, FeedbackPoly> parse_poly_table(std::istream& in);

// Fibonacci-configuration shift register: stage 1 takes the feedback XOR,
// stage L is the output. Stage j is bit j-1 of the packed state words.
class Lfsr {
public:
    Lfsr(FeedbackPoly poly, const BitVec& initial_state);
    Lfsr(FeedbackPoly poly, std::uint64_t initial_state);  // degree <= 64

    // Output-stage bit before the shift; advances the state one step.
    int clock();

    int degree() const { return poly_.degree; }
    const FeedbackPoly& poly() const { return poly_; }
    int stage(int j) const {  // 1-based stage index
        return static_cast<int>((state_[(j - 1) >> 6] >> ((j - 1) & 63)) & 1);
    }
    int output_bit() const { return stage(poly_.degree); }
    bool is_zero() const;
    BitVec state_bits() const;                // stage 1 first
    std::uint64_t state_word() const { return state_[0]; }  // degree <= 64 only

    void set_stage(int j, int v);
    void xor_stage(int j, int v);

private:
    FeedbackPoly poly_;
    std::vector<std::uint64_t> state_;
    std::vector<std::uint64_t> fb_mask_;  // bit L-1-e set for each tap e < L
    std::uint64_t top_clear_;             // mask for the last state word
    int words_;
    friend class ByteLfsr;
};

// true iff poly is irreducible with x of maximal order 2^L - 1, certified
// against the complete factorization; throws Error(Validation) when the
// factor set is inconsistent or for the wrong modulus.
bool is_primitive(const FeedbackPoly& poly, const FactorSet& factors);

// Deterministic seeded search for a primitive polynomial of the given degree
// whose total term count is close to target_weight. Throws Error(NotFound)
// after a bounded number of candidates.
FeedbackPoly find_dense_primitive(int degree, int target_weight, const FactorSet& factors,
                                  std::uint64_t seed, int max_trials = 200000);

} // namespace pals
