#include "pals/analysis.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pals {

// ------------------------------------------------------------ Berlekamp-Massey

LinearComplexityProfile berlekamp_massey(const BitVec& bits) {
    const std::size_t n = bits.size();
    if (n == 0) throw Error(ErrorKind::Validation, "empty sequence");

    std::vector<std::uint8_t> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<std::uint8_t>(bits.get(i));

    std::vector<std::uint8_t> C(n + 1, 0), B(n + 1, 0);
    C[0] = B[0] = 1;
    std::size_t L = 0, m = 1;
    LinearComplexityProfile out;

    for (std::size_t i = 0; i < n; ++i) {
        int d = s[i];
        for (std::size_t k = 1; k <= L; ++k) d ^= C[k] & s[i - k];
        if (d == 0) {
            ++m;
        } else if (2 * L <= i) {
            std::vector<std::uint8_t> T = C;
            for (std::size_t k = 0; k + m <= n; ++k) C[k + m] ^= B[k];
            B = std::move(T);
            L = i + 1 - L;
            m = 1;
            out.profile.emplace_back(i + 1, L);
        } else {
            for (std::size_t k = 0; k + m <= n; ++k) C[k + m] ^= B[k];
            ++m;
        }
    }
    out.final_lc = L;
    return out;
}

// ---------------------------------------------------------------- randomness

std::size_t count_ones_serial(const std::vector<std::uint64_t>& words) {
    std::size_t c = 0;
    for (std::uint64_t w : words) c += static_cast<std::size_t>(popcount64(w));
    return c;
}

std::size_t count_ones(const std::vector<std::uint64_t>& words) {
    std::int64_t c = 0;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(words.size());
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : c) if (n >= 4096) schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) c += popcount64(words[i]);
    return static_cast<std::size_t>(c);
}

// regularized incomplete gamma Q(a, x), by series or continued fraction
static double gamma_q(double a, double x) {
    if (x < 0 || a <= 0) return 1.0;
    if (x == 0) return 1.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        // lower series P, return 1-P
        double term = 1.0 / a, sum = term, ap = a;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - lg);
    }
    // continued fraction for Q (Lentz)
    double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - lg);
}

double chi_square_upper_tail(double x, int dof) {
    return gamma_q(0.5 * dof, 0.5 * x);
}

RandomnessReport randomness_suite(const BitVec& bits) {
    const std::size_t n = bits.size();
    if (n < 20000) throw Error(ErrorKind::Validation, "randomness suite needs at least 20000 bits");
    RandomnessReport rep;
    // two-sided normal quantile at significance 0.01
    const double z_crit = 2.5758293035489004;

    std::vector<std::uint64_t> packed(n / 64 + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (bits.get(i)) packed[i >> 6] |= 1ull << (i & 63);

    const std::size_t ones = count_ones(packed);
    const double pi1 = double(ones) / double(n);
    rep.monobit.statistic = std::fabs(2.0 * double(ones) - double(n)) / std::sqrt(double(n));
    rep.monobit.threshold = z_crit;
    rep.monobit.pass = rep.monobit.statistic <= z_crit;

    // transition count: V = 1 + #(b_i != b_{i+1})
    std::size_t v = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) v += bits.get(i) != bits.get(i + 1);
    const double expected = 2.0 * n * pi1 * (1.0 - pi1);
    const double denom = 2.0 * std::sqrt(2.0 * n) * pi1 * (1.0 - pi1);
    rep.runs.statistic = denom > 0 ? std::fabs(double(v) - expected) / denom : 1e9;
    rep.runs.threshold = z_crit;
    // prerequisite on balance, as the normal approximation needs it
    rep.runs.pass = std::fabs(pi1 - 0.5) < 2.0 / std::sqrt(double(n)) && rep.runs.statistic <= z_crit;

    // poker: chi-square over 4-bit block frequencies, 15 degrees of freedom
    const std::size_t k = n / 4;
    std::array<std::size_t, 16> freq{};
    for (std::size_t b = 0; b < k; ++b) {
        unsigned v4 = 0;
        for (int j = 0; j < 4; ++j) v4 = (v4 << 1) | static_cast<unsigned>(bits.get(4 * b + j));
        ++freq[v4];
    }
    double x = 0.0;
    for (std::size_t f : freq) x += double(f) * double(f);
    x = x * 16.0 / double(k) - double(k);
    rep.poker.statistic = x;
    rep.poker.threshold = 30.57791416689249;  // chi-square 0.99 quantile, 15 dof
    rep.poker.pass = x <= rep.poker.threshold;
    return rep;
}

// --------------------------------------------------------------------- costs

static double log2_add_exp(double a, double b) {
    // log2(2^a + 2^b)
    if (a < b) std::swap(a, b);
    return a + std::log2(1.0 + std::exp2(b - a));
}

TmtoCost tmto_cost(int state_bits) {
    if (state_bits < 2 || state_bits % 2)
        throw Error(ErrorKind::Validation, "state size must be even and at least 2");
    const double n = state_bits;
    const double m = n / 2;
    TmtoCost c;
    c.log2_time = std::log2(n + m * m) + log2_add_exp(m, n - m);
    c.log2_memory = std::log2(n + m) + m;
    return c;
}

double cube_cost_log2(int degree, int secret_vars) {
    if (degree < 1 || secret_vars < 1)
        throw Error(ErrorKind::Validation, "degree and variable count must be positive");
    const double a = double(degree - 1) + std::log2(double(secret_vars));
    const double b = 2.0 * std::log2(double(secret_vars));
    return log2_add_exp(a, b);
}

static double log2_bigint(const bigint& v) {
    if (v <= 0) throw Error(ErrorKind::Validation, "log2 of non-positive value");
    const std::size_t bits = boost::multiprecision::msb(v);
    // take the top 128 bits for the mantissa
    const int shift = bits > 127 ? static_cast<int>(bits - 127) : 0;
    const double mant = static_cast<double>(bigint(v >> shift));
    return std::log2(mant) + shift;
}

KeyspaceReport keyspace_log2(const std::vector<int>& lengths,
                             const std::map<int, FactorSet>& factors) {
    KeyspaceReport rep;
    bigint sum = 0, sum_all = 0;
    double prod_log = 0.0;
    for (int L : lengths) {
        auto it = factors.find(L);
        if (it == factors.end())
            throw Error(ErrorKind::Validation, "missing factorization for degree " + std::to_string(L));
        const FactorSet& fs = it->second;
        fs.validate();
        // phi from the factorization with multiplicity
        bigint phi = 1;
        bigint prev = 0;
        for (const bigint& q : fs.prime_factors) {
            phi *= (q == prev) ? q : q - 1;
            prev = q;
        }
        if (phi % L != 0)
            throw Error(ErrorKind::Validation, "phi(2^L-1) not divisible by L; bad factor table");
        const bigint U = phi / L;
        const bigint states = fs.modulus();
        rep.log2_primitive_polys.push_back(log2_bigint(U));
        prod_log += log2_bigint(U * states);
        sum += U * states;
        sum_all += (bigint(1) << (L - 1)) * states;
    }
    rep.log2_product_form = prod_log;
    rep.log2_sum_form = log2_bigint(sum);
    rep.log2_sum_form_all_polys = log2_bigint(sum_all);
    return rep;
}

// ----------------------------------------------------------------- avalanche

double AvalancheMatrix::min_prob() const {
    return double(*std::min_element(counts.begin(), counts.end())) / trials;
}

double AvalancheMatrix::max_prob() const {
    return double(*std::max_element(counts.begin(), counts.end())) / trials;
}

std::vector<double> AvalancheMatrix::row_means() const {
    std::vector<double> r(in_bits, 0.0);
    for (int i = 0; i < in_bits; ++i) {
        double s = 0;
        for (int j = 0; j < out_bits; ++j) s += counts[std::size_t(i) * out_bits + j];
        r[i] = s / (double(trials) * out_bits);
    }
    return r;
}

std::vector<double> AvalancheMatrix::col_means() const {
    std::vector<double> c(out_bits, 0.0);
    for (int j = 0; j < out_bits; ++j) {
        double s = 0;
        for (int i = 0; i < in_bits; ++i) s += counts[std::size_t(i) * out_bits + j];
        c[j] = s / (double(trials) * in_bits);
    }
    return c;
}

static void avalanche_accumulate(const BitTransform& fn, int in_bits, int out_bits,
                                 int t0, int t1, std::uint64_t seed,
                                 std::vector<std::uint32_t>& counts) {
    BitVec base(in_bits);
    for (int t = t0; t < t1; ++t) {
        // per-trial generator keeps the partitioning thread-count invariant
        SplitMix64 rng(seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(t + 1));
        for (int i = 0; i < in_bits; ++i) base.set(i, rng.bit());
        const BitVec y0 = fn(base);
        for (int i = 0; i < in_bits; ++i) {
            base.flip(i);
            BitVec y1 = fn(base);
            base.flip(i);
            y1.xor_with(y0);
            for (int j = 0; j < out_bits; ++j)
                if (y1.get(j)) ++counts[std::size_t(i) * out_bits + j];
        }
    }
}

AvalancheMatrix avalanche_matrix_serial(const BitTransform& fn, int in_bits, int out_bits,
                                        int trials, std::uint64_t seed) {
    if (trials < 100) throw Error(ErrorKind::Validation, "avalanche needs at least 100 trials");
    AvalancheMatrix m;
    m.in_bits = in_bits;
    m.out_bits = out_bits;
    m.trials = trials;
    m.counts.assign(std::size_t(in_bits) * out_bits, 0);
    avalanche_accumulate(fn, in_bits, out_bits, 0, trials, seed, m.counts);
    return m;
}

AvalancheMatrix avalanche_matrix(const BitTransform& fn, int in_bits, int out_bits, int trials,
                                 std::uint64_t seed) {
    if (trials < 100) throw Error(ErrorKind::Validation, "avalanche needs at least 100 trials");
    AvalancheMatrix m;
    m.in_bits = in_bits;
    m.out_bits = out_bits;
    m.trials = trials;
    m.counts.assign(std::size_t(in_bits) * out_bits, 0);
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::uint32_t> local(m.counts.size(), 0);
        const int nt = omp_get_num_threads(), id = omp_get_thread_num();
        const int chunk = (trials + nt - 1) / nt;
        const int t0 = std::min(trials, id * chunk), t1 = std::min(trials, t0 + chunk);
        avalanche_accumulate(fn, in_bits, out_bits, t0, t1, seed, local);
#pragma omp critical
        for (std::size_t k = 0; k < local.size(); ++k) m.counts[k] += local[k];
    }
#else
    avalanche_accumulate(fn, in_bits, out_bits, 0, trials, seed, m.counts);
#endif
    return m;
}

} // namespace pals
