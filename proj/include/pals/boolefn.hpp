#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pals/bits.hpp"
#include "pals/error.hpp"

namespace pals {

constexpr int kMaxVars = 20;

// Truth table of a Boolean function of n variables, packed 64 entries per
// word. Entry index encodes the input vector with variable 1 at bit 0.
class TruthTable {
public:
    TruthTable() = default;
    explicit TruthTable(int n_vars);

    int n_vars() const { return n_; }
    std::size_t size() const { return std::size_t(1) << n_; }

    int get(std::size_t idx) const { return static_cast<int>((words_[idx >> 6] >> (idx & 63)) & 1); }
    void set(std::size_t idx, int v) {
        if (v) words_[idx >> 6] |= 1ull << (idx & 63);
        else words_[idx >> 6] &= ~(1ull << (idx & 63));
    }

    std::size_t ones() const;
    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const TruthTable& o) const { return n_ == o.n_ && words_ == o.words_; }

    // fixture format: header "n=<n>", then 2^n bits as hex (entry 0 is the
    // most significant bit of the first digit); lines may wrap
    static TruthTable read(std::istream& in);
    void write(std::ostream& out) const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Algebraic normal form: XOR of monomials, each a bitmask of participating
// variables (variable v at mask bit v-1); mask 0 is the constant term.
struct Anf {
    int n_vars = 0;
    std::vector<std::uint32_t> monomials;  // sorted, unique

    Anf() = default;
    Anf(int n, std::vector<std::uint32_t> monos);
    int degree() const;  // 0 for the empty (zero) function
    bool operator==(const Anf& o) const { return n_vars == o.n_vars && monomials == o.monomials; }
};

// mutual inverses (binary Moebius transform)
TruthTable anf_to_tt(const Anf& a);
Anf tt_to_anf(const TruthTable& t);

// W(a) = sum_x (-1)^(f(x) xor a.x); satisfies Parseval sum W^2 = 2^(2n).
// walsh_spectrum runs the OpenMP kernel for large tables and is bit-identical
// to the serial version.
std::vector<std::int32_t> walsh_spectrum(const TruthTable& t);
std::vector<std::int32_t> walsh_spectrum_serial(const TruthTable& t);

struct SpectralReport {
    int nonlinearity = 0;
    int algebraic_degree = 0;
    int ci_order = 0;
    bool balanced = false;
    int resiliency_order = -1;  // ci_order when balanced, -1 otherwise
};

// Exhaustive certification via the Walsh spectrum (Xiao-Massey criterion for
// correlation immunity) plus the ANF degree.
SpectralReport certify(const TruthTable& t);

// Deterministic seeded construction of a 2-resilient 9-variable function of
// algebraic degree exactly 6 and nonlinearity >= min_nl, certified before
// return. Only the (n,m,d) = (9,2,6) family is supported.
TruthTable construct_resilient(int n, int m, int d, std::uint64_t seed, int min_nl = 224,
                               int max_trials = 1000);

} // namespace pals
