#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "pals/analysis.hpp"
#include "pals/fixtures.hpp"
#include "pals/galois.hpp"

using namespace pals;

namespace {

const std::map<int, FactorSet>& factors() {
    return production().factors;
}

// brute-force cycle length of the register from a given start state
std::uint64_t brute_period(const FeedbackPoly& p, std::uint64_t start) {
    Lfsr reg(p, start);
    const BitVec first = reg.state_bits();
    std::uint64_t n = 0;
    do {
        reg.clock();
        ++n;
    } while (reg.state_bits() != first);
    return n;
}

}  // namespace

TEST_CASE("degree-3 register walks all 7 nonzero states") {
    FeedbackPoly p(3, {3, 1, 0});
    Lfsr reg(p, std::uint64_t(0b100));  // only stage 3 set
    std::set<std::string> seen;
    for (int i = 0; i < 7; ++i) {
        seen.insert(reg.state_bits().to_hex());
        reg.clock();
    }
    CHECK(seen.size() == 7);
    CHECK(reg.state_bits() == Lfsr(p, std::uint64_t(0b100)).state_bits());
    CHECK(brute_period(p, 0b100) == 7);
}

TEST_CASE("x^4+x^3+x^2+x+1 has period 5, not maximal") {
    FeedbackPoly p(4, {4, 3, 2, 1, 0});
    CHECK(brute_period(p, 0b0001) == 5);
    CHECK(brute_period(p, 0b0011) == 5);
    CHECK_FALSE(is_primitive(p, factors().at(4)));
}

TEST_CASE("all-zero state rejected at construction") {
    FeedbackPoly p(4, {4, 1, 0});
    CHECK_THROWS_AS(Lfsr(p, std::uint64_t(0)), Error);
}

TEST_CASE("x^4+x+1 is primitive, full period by enumeration") {
    FeedbackPoly p(4, {4, 1, 0});
    CHECK(is_primitive(p, factors().at(4)));
    CHECK(brute_period(p, 0b1000) == 15);
}

TEST_CASE("32-bit message-key polynomial is primitive") {
    CHECK(is_primitive(message_key_poly(), factors().at(32)));
}

TEST_CASE("inconsistent factor set is rejected") {
    CHECK_THROWS_AS(FactorSet(4, {bigint(3), bigint(7)}), Error);
    FactorSet wrong_degree = factors().at(8);
    FeedbackPoly p(4, {4, 1, 0});
    CHECK_THROWS_AS(is_primitive(p, wrong_degree), Error);
}

TEST_CASE("find_dense_primitive at degree 7 gives a 3-4 term polynomial") {
    FeedbackPoly p = find_dense_primitive(7, 3, factors().at(7), 42);
    CHECK(p.degree == 7);
    CHECK(p.weight() >= 3);
    CHECK(p.weight() <= 4);
    CHECK(is_primitive(p, factors().at(7)));
    CHECK(brute_period(p, 1) == 127);
}

TEST_CASE("find_dense_primitive at degree 2 returns the only choice") {
    FeedbackPoly p = find_dense_primitive(2, 1, factors().at(2), 7);
    CHECK(p.to_line() == "2: 2,1,0");
}

TEST_CASE("find_dense_primitive at degree 163 is accepted by is_primitive") {
    FeedbackPoly p = find_dense_primitive(163, 82, factors().at(163), 99);
    CHECK(is_primitive(p, factors().at(163)));
    CHECK(p.weight() >= 74);
    CHECK(p.weight() <= 90);
}

TEST_CASE("search determinism: same seed, same polynomial") {
    FeedbackPoly a = find_dense_primitive(17, 9, factors().at(17), 1234);
    FeedbackPoly b = find_dense_primitive(17, 9, factors().at(17), 1234);
    CHECK(a.to_line() == b.to_line());
}

TEST_CASE("clocking is deterministic") {
    const FeedbackPoly& p = production().polys.at(163);
    SplitMix64 rng(5);
    BitVec st(163);
    for (int i = 0; i < 163; ++i) st.set(i, rng.bit());
    Lfsr a(p, st), b(p, st);
    for (int i = 0; i < 10000; ++i) CHECK(a.clock() == b.clock());
}

TEST_CASE("full period for every toy fixture polynomial, degree <= 16") {
    for (const auto& [L, p] : toy().polys) {
        if (L > 16) continue;
        SplitMix64 rng(100 + L);
        for (int s = 0; s < 5; ++s) {
            const std::uint64_t start = 1 + rng.below((1ull << L) - 1);
            CHECK(brute_period(p, start) == (1ull << L) - 1);
        }
    }
}

TEST_CASE("primitive implies Berlekamp-Massey recovers the degree") {
    for (int L : {5, 11, 16}) {
        const FeedbackPoly& p = toy().polys.at(L);
        Lfsr reg(p, std::uint64_t(1));
        BitVec seq(4 * L);
        for (int i = 0; i < 4 * L; ++i) seq.set(i, reg.clock());
        CHECK(berlekamp_massey(seq).final_lc == std::size_t(L));
    }
}

TEST_CASE("polynomial and factor line round trips") {
    FeedbackPoly p = FeedbackPoly::from_line("7: 7,3,0");
    CHECK(p.degree == 7);
    CHECK(p.to_line() == "7: 7,3,0");
    FactorSet f = FactorSet::from_line("11: 23,89");
    CHECK(f.to_line() == "11: 23,89");
    CHECK_THROWS_AS(FeedbackPoly::from_line("7: 7,3"), Error);      // no constant term
    CHECK_THROWS_AS(FeedbackPoly::from_line("7: 3,0"), Error);      // no leading term
    CHECK_THROWS_AS(FeedbackPoly::from_line("7: 7,3,3,0"), Error);  // duplicate
}

TEST_CASE("fixture files parse and agree with embedded data") {
    std::ifstream pf(std::string(PALS_FIXTURE_DIR) + "/polynomials.txt");
    REQUIRE(pf.good());
    auto from_file = parse_poly_table(pf);
    CHECK(from_file.size() == production().polys.size());
    for (const auto& [L, p] : production().polys) CHECK(from_file.at(L).to_line() == p.to_line());

    std::ifstream ff(std::string(PALS_FIXTURE_DIR) + "/factors.txt");
    REQUIRE(ff.good());
    auto ftab = parse_factor_table(ff);
    CHECK(ftab.size() == production().factors.size());
}
