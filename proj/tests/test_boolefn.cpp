#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <sstream>

#include "pals/boolefn.hpp"
#include "pals/fixtures.hpp"

using namespace pals;

namespace {

// direct-definition oracle: W(a) = sum over x of (-1)^(f(x) xor a.x)
std::vector<std::int32_t> walsh_direct(const TruthTable& t) {
    std::vector<std::int32_t> W(t.size(), 0);
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t x = 0; x < t.size(); ++x)
            W[a] += ((t.get(x) ^ parity64(a & x)) ? -1 : 1);
    return W;
}

// direct ANF evaluation: f(x) = xor of monomials contained in x
int eval_anf(const Anf& a, std::uint32_t x) {
    int v = 0;
    for (std::uint32_t m : a.monomials)
        if ((x & m) == m) v ^= 1;
    return v;
}

TruthTable random_table(int n, std::uint64_t seed) {
    TruthTable t(n);
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < t.size(); ++i) t.set(i, rng.bit());
    return t;
}

}  // namespace

TEST_CASE("constant-one ANF gives the all-ones table") {
    Anf a(3, {0});
    TruthTable t = anf_to_tt(a);
    CHECK(t.ones() == 8);
}

TEST_CASE("x1 xor x2 has table 0110") {
    Anf a(2, {0b01, 0b10});
    TruthTable t = anf_to_tt(a);
    CHECK(t.get(0) == 0);
    CHECK(t.get(1) == 1);
    CHECK(t.get(2) == 1);
    CHECK(t.get(3) == 0);
}

TEST_CASE("anf_to_tt agrees with direct monomial evaluation") {
    SplitMix64 rng(77);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(8));
        std::vector<std::uint32_t> monos;
        for (std::uint32_t m = 0; m < (1u << n); ++m)
            if (rng.below(4) == 0) monos.push_back(m);
        Anf a(n, monos);
        TruthTable t = anf_to_tt(a);
        for (std::size_t x = 0; x < t.size(); ++x)
            REQUIRE(t.get(x) == eval_anf(a, static_cast<std::uint32_t>(x)));
    }
}

TEST_CASE("round trip: tt_to_anf after anf_to_tt is the identity") {
    SplitMix64 rng(123);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 1 + static_cast<int>(rng.below(10));
        std::vector<std::uint32_t> monos;
        for (std::uint32_t m = 0; m < (1u << n); ++m)
            if (rng.bit()) monos.push_back(m);
        Anf a(n, monos);
        CHECK(tt_to_anf(anf_to_tt(a)) == a);
    }
}

TEST_CASE("memory-update ANF round-trips through its table") {
    const Anf a = memory_update_anf();
    CHECK(tt_to_anf(anf_to_tt(a)) == a);
    CHECK(a.monomials.size() == 33);
    CHECK(a.degree() == 7);
}

TEST_CASE("walsh spectrum of the zero function") {
    TruthTable t(3);
    const auto W = walsh_spectrum(t);
    CHECK(W[0] == 8);
    for (int a = 1; a < 8; ++a) CHECK(W[a] == 0);
}

TEST_CASE("walsh spectrum of x1+x2+x3 concentrates on the full mask") {
    Anf a(3, {0b001, 0b010, 0b100});
    const auto W = walsh_spectrum(anf_to_tt(a));
    for (int m = 0; m < 8; ++m)
        CHECK(W[m] == (m == 7 ? 8 : 0));
}

TEST_CASE("3-variable majority: max |W| 4, nonlinearity 2") {
    TruthTable t(3);
    for (int x = 0; x < 8; ++x) t.set(x, popcount64(static_cast<unsigned>(x)) >= 2);
    const auto W = walsh_spectrum(t);
    std::int32_t mx = 0;
    for (auto w : W) mx = std::max(mx, std::abs(w));
    CHECK(mx == 4);
    CHECK(certify(t).nonlinearity == 2);
}

TEST_CASE("fast transform matches the direct-definition oracle") {
    for (int n : {2, 4, 6, 8}) {
        TruthTable t = random_table(n, 1000 + n);
        CHECK(walsh_spectrum(t) == walsh_direct(t));
        CHECK(walsh_spectrum_serial(t) == walsh_direct(t));
    }
}

TEST_CASE("parallel and serial transforms are bit-identical on a large table") {
    TruthTable t = random_table(16, 999);
    CHECK(walsh_spectrum(t) == walsh_spectrum_serial(t));
}

TEST_CASE("Parseval identity on random spectra") {
    for (int n : {3, 5, 9, 11}) {
        TruthTable t = random_table(n, 555 + n);
        const auto W = walsh_spectrum(t);
        std::int64_t sum = 0;
        for (auto w : W) sum += std::int64_t(w) * w;
        CHECK(sum == (std::int64_t(1) << (2 * n)));
    }
}

TEST_CASE("certify: 9-input parity is 8-resilient linear") {
    const SpectralReport r = certify(output_combiner_table());
    CHECK(r.balanced);
    CHECK(r.ci_order == 8);
    CHECK(r.resiliency_order == 8);
    CHECK(r.nonlinearity == 0);
    CHECK(r.algebraic_degree == 1);
}

TEST_CASE("certify: memory-update table is balanced with degree 7") {
    const SpectralReport r = certify(memory_update_table());
    CHECK(r.balanced);
    CHECK(r.algebraic_degree == 7);
    CHECK(memory_update_table().ones() == 256);
}

TEST_CASE("certify: linear functions have nonlinearity 0 and ci weight-1") {
    for (std::uint32_t mask : {0x3u, 0x15u, 0x7fu}) {
        TruthTable t(7);
        for (std::size_t x = 0; x < t.size(); ++x) t.set(x, parity64(x & mask));
        const SpectralReport r = certify(t);
        CHECK(r.nonlinearity == 0);
        CHECK(r.ci_order == popcount64(mask) - 1);
    }
}

TEST_CASE("certify: unbalanced table reports resiliency -1") {
    TruthTable t(4);
    t.set(3, 1);
    const SpectralReport r = certify(t);
    CHECK_FALSE(r.balanced);
    CHECK(r.resiliency_order == -1);
}

TEST_CASE("construct_resilient meets the certified profile") {
    TruthTable t = construct_resilient(9, 2, 6, 0xabcdef);
    const SpectralReport r = certify(t);
    CHECK(r.balanced);
    CHECK(r.ci_order >= 2);
    CHECK(r.algebraic_degree == 6);
    CHECK(r.nonlinearity >= 224);
}

TEST_CASE("construct_resilient rejects a Siegenthaler violation") {
    CHECK_THROWS_AS(construct_resilient(9, 2, 7, 1), Error);
}

TEST_CASE("construct_resilient: distinct seeds give distinct certified tables") {
    TruthTable a = construct_resilient(9, 2, 6, 11);
    TruthTable b = construct_resilient(9, 2, 6, 12);
    CHECK_FALSE(a == b);
    CHECK(certify(a).balanced);
    CHECK(certify(b).balanced);
}

TEST_CASE("truth table text round trip") {
    TruthTable t = random_table(9, 31337);
    std::stringstream ss;
    t.write(ss);
    CHECK(TruthTable::read(ss) == t);
}
