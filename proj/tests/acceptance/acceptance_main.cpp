// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Expected constants marked "frozen" were generated once
// from the shipped fixtures and committed.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "pals/analysis.hpp"
#include "pals/boolefn.hpp"
#include "pals/cipher.hpp"
#include "pals/fixtures.hpp"
#include "pals/galois.hpp"
#include "pals/keystream.hpp"
#include "reference_sim.hpp"

using namespace pals;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(const char* id, bool pass, const std::string& detail) {
    std::printf("[%s] %-4s %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

MainKey fixed_main_key() {
    return MainKey::from_hex(
        "3243f6a8885a308d313198a2e03707344a4093822299f31d0082efa98ec4e6c8");
}

// ---- C1: encrypt/decrypt round trip over the full size range ----
void criterion1() {
    const auto t0 = clock_type::now();
    KeyFile kf;
    kf.main_key = fixed_main_key();
    kf.mk_seed = 0x00c0ffee;
    kf.mk_counter = 0;

    SplitMix64 rng(0xc1);
    bool ok = true;
    std::size_t total = 0;
    for (int i = 0; i < 100 && ok; ++i) {
        std::size_t n;
        if (i == 0) n = 1;                      // smallest
        else if (i == 1) n = 1 << 20;           // largest, 1 MiB
        else n = std::size_t(1) << rng.below(21);  // log-uniform in between
        if (n > 1 && i > 1) n -= rng.below(n / 2);
        std::vector<std::uint8_t> pt(n);
        for (auto& b : pt) b = static_cast<std::uint8_t>(rng.next());
        total += n;
        const CipherFile cf = encrypt_bytes(kf, pt);
        ok = ok && (cf.payload.size() == n) && (decrypt_bytes(kf, cf) == pt);
    }
    const double dt = seconds_since(t0);
    report("C1", ok && dt < 60.0,
           "round trip of 100 plaintexts (" + std::to_string(total) + " bytes) in " +
               std::to_string(dt).substr(0, 5) + " s (< 60 s)");
}

// ---- C2: frozen known-answer vectors ----
void criterion2() {
    const ProductionFixtures& fx = production();

    // frozen: scrambler image of the zero word under the shipped fixtures
    const std::uint32_t scram_zero = scram5(0u, fx.spn);
    const bool ok1 = scram_zero == UINT32_C(0x314a4868);

    // frozen: session key for message key 0x13198a2e under the fixed main key
    const SessionKey sk = derive_session_key(0x13198a2eu, fixed_main_key(), fx.spn);
    const bool ok2 =
        sk.to_hex() == "3c74eaaf6a5e3c4fce0cb97199df5c9c76a8df0b74d67c46d08e4fbf96dba6e3";

    // frozen: first 64 keystream bits for (fixed main key, message key 1)
    GeneratorState gen = make_generator(fixed_main_key(), 0x00000001u);
    std::uint8_t first8[8];
    gen.keystream_bytes(first8, 8);
    const std::string first_hex = bytes_to_hex(first8, 8);
    const bool ok3 = first_hex == "6ebd8be1ded7c921";

    report("C2", ok1 && ok2 && ok3,
           "known-answer vectors reproduce (scrambler word, session key, first 64 bits)");
}

// ---- C3: clock control against a brute-force majority oracle ----
void criterion3() {
    const auto c = clock_control(0b10111001);
    std::set<int> on;
    for (int r = 0; r < 8; ++r)
        if (c[r]) on.insert(r + 1);
    bool ok = (on == std::set<int>{1, 3, 4, 5, 8});

    for (int b = 0; b < 256 && ok; ++b) {
        int ones = 0;
        for (int k = 0; k < 8; ++k) ones += (b >> k) & 1;
        const auto cc = clock_control(static_cast<std::uint8_t>(b));
        int clocked = 0;
        for (int r = 0; r < 8; ++r) {
            const int bit = (b >> (7 - r)) & 1;
            const bool expect = (ones == 4) || (ones > 4 ? bit == 1 : bit == 0);
            ok = ok && cc[r] == expect;
            clocked += cc[r];
        }
        ok = ok && (ones == 4 ? clocked == 8 : true);
    }
    report("C3", ok, "clock control matches the majority oracle on all 256 control bytes");
}

// ---- C4: combiner certification by exhaustive spectra ----
void criterion4() {
    const auto t0 = clock_type::now();
    const ProductionFixtures& fx = production();
    const SpectralReport h = certify(fx.h_tt);
    bool ok = h.balanced && h.algebraic_degree == 7;
    const SpectralReport g = certify(fx.g_tt);
    ok = ok && g.balanced && g.resiliency_order == 8 && g.algebraic_degree == 1 &&
         g.nonlinearity == 0;
    for (int i = 0; i < 8; ++i) {
        const SpectralReport f = certify(fx.f_tts[i]);
        ok = ok && f.balanced && f.ci_order >= 2 && f.algebraic_degree == 6 &&
             f.nonlinearity >= 224;
    }
    const double dt = seconds_since(t0);
    report("C4", ok && dt < 1.0,
           "memory update balanced deg 7; combiner 8-resilient linear; filters (bal, ci>=2, "
           "deg 6, nl>=224) in " + std::to_string(dt).substr(0, 5) + " s (< 1 s)");
}

// ---- C5: scrambler and session-key avalanche, per-cell band ----
void criterion5() {
    const ProductionFixtures& fx = production();
    const auto scram = avalanche_matrix(
        [&fx](const BitVec& in) {
            std::uint32_t w = 0;
            for (int i = 0; i < 32; ++i) w |= static_cast<std::uint32_t>(in.get(i)) << (31 - i);
            const std::uint32_t y = scram5(w, fx.spn);
            BitVec o(32);
            for (int i = 0; i < 32; ++i) o.set(i, (y >> (31 - i)) & 1);
            return o;
        },
        32, 32, 2000, 0xc5a);
    bool ok = scram.min_prob() >= 0.45 && scram.max_prob() <= 0.55;

    const MainKey main = fixed_main_key();
    const auto derive = avalanche_matrix(
        [&fx, &main](const BitVec& in) {
            std::uint32_t mk = 0;
            for (int i = 0; i < 32; ++i) mk |= static_cast<std::uint32_t>(in.get(i)) << (31 - i);
            return derive_session_key(mk, main, fx.spn).bits();
        },
        32, 256, 2000, 0xc5b);
    ok = ok && derive.min_prob() >= 0.45 && derive.max_prob() <= 0.55;

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "scrambler cells [%.3f, %.3f], session-key cells [%.3f, %.3f] within "
                  "[0.45, 0.55] at 2000 trials",
                  scram.min_prob(), scram.max_prob(), derive.min_prob(), derive.max_prob());
    report("C5", ok, buf);
}

// ---- C6: expansion diffusion marginals at 500 trials ----
void criterion6() {
    const auto av = avalanche_matrix(
        [](const BitVec& in) {
            SessionKey sk;
            for (int i = 0; i < 256; ++i)
                if (in.get(i)) sk.bytes[i >> 3] |= std::uint8_t(0x80u >> (i & 7));
            return generate_iv(sk, production().iv_params);
        },
        256, 1600, 500, 0xc6);
    double lo = 1.0, hi = 0.0;
    for (double r : av.row_means()) {
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    for (double c : av.col_means()) {
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    const bool ok = lo >= 0.45 && hi <= 0.55;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "per-key-bit and per-vector-bit flip rates in [%.4f, %.4f] within [0.45, 0.55] "
                  "at 500 trials",
                  lo, hi);
    report("C6", ok, buf);
}

// ---- C7: randomness battery on 10^6 keystream bits ----
void criterion7() {
    const auto t0 = clock_type::now();
    GeneratorState gen = make_generator(fixed_main_key(), 0x0000c7u);
    const BitVec ks = gen.keystream(1000000);
    const RandomnessReport rep = randomness_suite(ks);
    const double dt = seconds_since(t0);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "monobit z=%.3f runs z=%.3f poker chi2=%.2f all pass at 0.01 in %.2f s (< 10 s)",
                  rep.monobit.statistic, rep.runs.statistic, rep.poker.statistic, dt);
    report("C7", rep.all_pass() && dt < 10.0, buf);
}

// ---- C8: linear-complexity growth on a 4096-bit prefix ----
void criterion8() {
    GeneratorState gen = make_generator(fixed_main_key(), 0x0000c8u);
    const BitVec prefix = gen.keystream(4096);
    const auto lc = berlekamp_massey(prefix);
    report("C8", lc.final_lc > 1024,
           "linear complexity " + std::to_string(lc.final_lc) + " > 1024 on a 4096-bit prefix");
}

// ---- C9: cost formulas ----
void criterion9() {
    const TmtoCost tm = tmto_cost(1600);
    bool ok = tm.log2_time >= 818.5 && tm.log2_time <= 821.0;
    ok = ok && tm.log2_memory >= 809.0 && tm.log2_memory <= 812.0;

    const double cube = cube_cost_log2(163, 256);
    ok = ok && cube >= 162.0;

    std::vector<int> lens(kRegisterLengths.begin(), kRegisterLengths.end());
    const KeyspaceReport ks = keyspace_log2(lens, production().factors);
    // the nominal sum (every feedback polynomial with nonzero constant term)
    // carries the 477-bit bound; the exact primitive-only sum is reported
    ok = ok && ks.log2_sum_form_all_polys > 477.0;
    ok = ok && ks.log2_sum_form > 0.0 && ks.log2_product_form > ks.log2_sum_form;

    char buf[240];
    std::snprintf(buf, sizeof buf,
                  "tmto (%.2f, %.2f) in bands; cube %.1f >= 162; keyspace sum log2 %.2f nominal "
                  "/ %.2f exact-primitive, nominal > 477",
                  tm.log2_time, tm.log2_memory, cube, ks.log2_sum_form_all_polys,
                  ks.log2_sum_form);
    report("C9", ok, buf);
}

// ---- C10: dual-implementation oracle equivalence ----
void criterion10() {
    auto run_pair = [](const GeneratorFixtures& gfx, const std::array<int, 8>& lengths,
                       std::uint64_t seed, int nbits) {
        std::array<BitVec, 8> start;
        std::array<std::vector<int>, 8> start_ref;
        SplitMix64 rng(seed);
        for (int r = 0; r < 8; ++r) {
            start[r] = BitVec(lengths[r]);
            do {
                for (int i = 0; i < lengths[r]; ++i) start[r].set(i, rng.bit());
            } while (start[r].popcount() == 0);
            start_ref[r].assign(lengths[r], 0);
            for (int i = 0; i < lengths[r]; ++i) start_ref[r][i] = start[r].get(i);
        }
        GeneratorState core(gfx, start);

        std::array<std::vector<int>, 8> poly_taps;
        for (int r = 0; r < 8; ++r) poly_taps[r] = gfx.polys[r].taps;
        std::array<std::array<int, 512>, 8> ftabs{};
        std::array<int, 512> htab{};
        for (int i = 0; i < 8; ++i)
            for (int idx = 0; idx < 512; ++idx) ftabs[i][idx] = gfx.f_tables[i].get(idx);
        for (int idx = 0; idx < 512; ++idx) htab[idx] = gfx.h_table.get(idx);
        refsim::RefGenerator ref =
            refsim::RefGenerator::build(poly_taps, start_ref, *gfx.sboxes8, ftabs, htab);

        const BitVec a = core.keystream(nbits);
        const std::vector<int> b = ref.run(nbits);
        for (int i = 0; i < nbits; ++i)
            if (a.get(i) != b[i]) return false;
        return true;
    };

    const bool toy_ok = run_pair(toy().generator, kToyRegisterLengths, 0xc10a, 1000);
    const bool prod_ok = run_pair(production().generator, kRegisterLengths, 0xc10b, 1000);
    report("C10", toy_ok && prod_ok,
           "toy and production cores match the independent simulator over 1000 bits");
}

// ---- C11: component-scale periods and primitivity ----
void criterion11() {
    bool ok = true;
    for (const auto& [L, p] : toy().polys) {
        if (L > 16) continue;
        Lfsr reg(p, std::uint64_t(1));
        const BitVec first = reg.state_bits();
        std::uint64_t period = 0;
        do {
            reg.clock();
            ++period;
        } while (reg.state_bits() != first);
        ok = ok && period == (1ull << L) - 1;
    }
    for (int L : kRegisterLengths)
        ok = ok && is_primitive(production().polys.at(L), production().factors.at(L));
    ok = ok && is_primitive(production().polys.at(kIvDegree), production().factors.at(kIvDegree));
    ok = ok && is_primitive(production().polys.at(kMessageKeyDegree),
                            production().factors.at(kMessageKeyDegree));
    report("C11", ok,
           "toy registers reach full period by enumeration; production polynomials certify "
           "primitive with bundled factor tables");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
