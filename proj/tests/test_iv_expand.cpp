#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pals/analysis.hpp"
#include "pals/fixtures.hpp"
#include "pals/iv_expand.hpp"

using namespace pals;

namespace {

SessionKey sk_from_seed(std::uint64_t seed) {
    SessionKey sk;
    SplitMix64 rng(seed);
    for (auto& b : sk.bytes) b = static_cast<std::uint8_t>(rng.next());
    return sk;
}

BitVec random_bits(int n, std::uint64_t seed) {
    BitVec v(n);
    SplitMix64 rng(seed);
    for (int i = 0; i < n; ++i) v.set(i, rng.bit());
    return v;
}

}  // namespace

TEST_CASE("initial vector is exactly 1600 bits and deterministic") {
    const SessionKey sk = sk_from_seed(1);
    const BitVec a = generate_iv(sk, production().iv_params);
    const BitVec b = generate_iv(sk, production().iv_params);
    CHECK(a.size() == 1600);
    CHECK(a == b);
}

TEST_CASE("exactly 240 byte-clocks per initial vector") {
    const SessionKey sk = sk_from_seed(2);
    IvExpansion e = iv_expand_bytes(sk.bits(), production().iv_params, 200);
    CHECK(e.byte_clocks == 240);
    CHECK(e.bytes.size() == 200);
}

TEST_CASE("all-zero session key is rejected") {
    SessionKey sk;  // zero
    CHECK_THROWS_AS(generate_iv(sk, production().iv_params), Error);
}

TEST_CASE("selector index is close to uniform over a long run") {
    const SessionKey sk = sk_from_seed(3);
    IvParams p = production().iv_params;
    p.discard_bytes = 0;
    IvExpansion e = iv_expand_bytes(sk.bits(), p, 10000);
    double chi2 = 0.0;
    for (long c : e.selector_counts) {
        const double dev = double(c) - 2500.0;
        chi2 += dev * dev / 2500.0;
        CHECK(double(c) / 10000.0 == doctest::Approx(0.25).epsilon(0.08));  // 0.25 +- 0.02
    }
    CHECK(chi2 < 11.345);  // chi-square 0.99 quantile, 3 dof
}

TEST_CASE("identity substitution makes the expansion linear; S-boxes break it") {
    IvParams toy_p = toy().iv_params;  // degree 16, 2-byte discard
    const int out_bytes = 32;

    const BitVec a = random_bits(16, 10);
    const BitVec b = random_bits(16, 11);
    const BitVec c = random_bits(16, 12);
    BitVec abc = a;  // a ^ b ^ c as the third point, avoiding the zero seed
    abc.xor_with(b);
    abc.xor_with(c);
    REQUIRE(abc.popcount() > 0);

    auto run = [&](const BitVec& seed, bool with_sboxes) {
        IvParams p = toy_p;
        if (!with_sboxes) p.sboxes = nullptr;
        return iv_expand_bytes(seed, p, out_bytes).bytes;
    };

    // superposition: f(a) ^ f(b) == f(a^b^c) ^ f(c) for a linear pipeline
    for (bool with_sboxes : {false, true}) {
        auto ya = run(a, with_sboxes), yb = run(b, with_sboxes);
        auto yab = run(abc, with_sboxes), yc = run(c, with_sboxes);
        bool equal = true;
        for (int i = 0; i < out_bytes; ++i)
            equal = equal && ((ya[i] ^ yb[i]) == (yab[i] ^ yc[i]));
        CHECK(equal == !with_sboxes);
    }
}

TEST_CASE("session-key bit flips diffuse through the vector") {
    // marginal flip rates per input bit and per output bit; the per-cell
    // matrix at 500 trials is dominated by estimator noise, the marginals
    // are what the acceptance run pins down
    const int trials = 120;
    const auto av = avalanche_matrix(
        [](const BitVec& in) {
            SessionKey sk;
            for (int i = 0; i < 256; ++i)
                if (in.get(i)) sk.bytes[i >> 3] |= std::uint8_t(0x80u >> (i & 7));
            return generate_iv(sk, production().iv_params);
        },
        256, 1600, trials, 0x515);
    for (double r : av.row_means()) {
        CHECK(r > 0.47);
        CHECK(r < 0.53);
    }
    for (double c : av.col_means()) {
        CHECK(c > 0.45);
        CHECK(c < 0.55);
    }
}

TEST_CASE("parallel and serial avalanche kernels agree exactly") {
    auto fn = [](const BitVec& in) {
        BitVec out(16);
        std::uint32_t x = 0;
        for (int i = 0; i < 16; ++i) x |= static_cast<std::uint32_t>(in.get(i)) << i;
        std::uint32_t y = x * 2654435761u;
        for (int i = 0; i < 16; ++i) out.set(i, (y >> i) & 1);
        return out;
    };
    const auto a = avalanche_matrix(fn, 16, 16, 500, 77);
    const auto b = avalanche_matrix_serial(fn, 16, 16, 500, 77);
    CHECK(a.counts == b.counts);
}
