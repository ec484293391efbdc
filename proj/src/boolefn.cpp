#include "pals/boolefn.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pals {

TruthTable::TruthTable(int n_vars) : n_(n_vars) {
    if (n_ < 1 || n_ > kMaxVars) throw Error(ErrorKind::Validation, "variable count out of range");
    words_.assign(std::max<std::size_t>(1, size() >> 6), 0);
}

std::size_t TruthTable::ones() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(popcount64(w));
    return c;
}

TruthTable TruthTable::read(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw Error(ErrorKind::Format, "missing truth table header");
    if (header.rfind("n=", 0) != 0) throw Error(ErrorKind::Format, "truth table header must be n=<vars>");
    int n = std::stoi(header.substr(2));
    TruthTable t(n);
    std::string hex, line;
    while (hex.size() < (t.size() + 3) / 4 && std::getline(in, line)) hex += line;
    BitVec bits = BitVec::from_hex(hex, t.size());
    for (std::size_t i = 0; i < t.size(); ++i) t.set(i, bits.get(i));
    return t;
}

void TruthTable::write(std::ostream& out) const {
    out << "n=" << n_ << "\n";
    BitVec bits(size());
    for (std::size_t i = 0; i < size(); ++i) bits.set(i, get(i));
    std::string hex = bits.to_hex();
    for (std::size_t pos = 0; pos < hex.size(); pos += 64)
        out << hex.substr(pos, 64) << "\n";
}

Anf::Anf(int n, std::vector<std::uint32_t> monos) : n_vars(n), monomials(std::move(monos)) {
    if (n_vars < 1 || n_vars > kMaxVars) throw Error(ErrorKind::Validation, "variable count out of range");
    std::sort(monomials.begin(), monomials.end());
    if (std::adjacent_find(monomials.begin(), monomials.end()) != monomials.end())
        throw Error(ErrorKind::Validation, "duplicate monomial");
    for (std::uint32_t m : monomials)
        if (m >> n_vars) throw Error(ErrorKind::Validation, "monomial uses variable beyond n");
}

int Anf::degree() const {
    int d = 0;
    for (std::uint32_t m : monomials) d = std::max(d, popcount64(m));
    return d;
}

// In-place binary Moebius transform on a packed table. Strides below 64 use
// masked in-word shifts; wider strides combine whole words.
static void moebius(std::vector<std::uint64_t>& w, int n) {
    static constexpr std::uint64_t kStrideMask[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
    };
    for (int s = 0; s < n && s < 6; ++s)
        for (auto& x : w) x ^= (x & kStrideMask[s]) << (1 << s);
    for (int s = 6; s < n; ++s) {
        const std::size_t half = std::size_t(1) << (s - 6);
        for (std::size_t base = 0; base < w.size(); base += 2 * half)
            for (std::size_t i = 0; i < half; ++i) w[base + half + i] ^= w[base + i];
    }
}

TruthTable anf_to_tt(const Anf& a) {
    TruthTable t(a.n_vars);
    auto& w = const_cast<std::vector<std::uint64_t>&>(t.words());
    for (std::uint32_t m : a.monomials) w[m >> 6] |= 1ull << (m & 63);
    moebius(w, a.n_vars);
    return t;
}

Anf tt_to_anf(const TruthTable& t) {
    std::vector<std::uint64_t> w = t.words();
    moebius(w, t.n_vars());
    std::vector<std::uint32_t> monos;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::uint64_t x = w[i];
        while (x) {
            int b = __builtin_ctzll(x);
            monos.push_back(static_cast<std::uint32_t>((i << 6) | b));
            x &= x - 1;
        }
    }
    Anf a;
    a.n_vars = t.n_vars();
    a.monomials = std::move(monos);
    return a;
}

static void walsh_transform(std::vector<std::int32_t>& v, bool parallel) {
    const std::size_t n = v.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        const std::ptrdiff_t chunks = static_cast<std::ptrdiff_t>(n / (2 * h));
#ifdef _OPENMP
#pragma omp parallel for if (parallel && n >= (std::size_t(1) << 14)) schedule(static)
#endif
        for (std::ptrdiff_t c = 0; c < chunks; ++c) {
            const std::size_t base = static_cast<std::size_t>(c) * 2 * h;
            for (std::size_t j = base; j < base + h; ++j) {
                std::int32_t a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
    (void)parallel;
}

static std::vector<std::int32_t> signs(const TruthTable& t) {
    std::vector<std::int32_t> v(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) v[i] = t.get(i) ? -1 : 1;
    return v;
}

std::vector<std::int32_t> walsh_spectrum(const TruthTable& t) {
    auto v = signs(t);
    walsh_transform(v, true);
    return v;
}

std::vector<std::int32_t> walsh_spectrum_serial(const TruthTable& t) {
    auto v = signs(t);
    walsh_transform(v, false);
    return v;
}

SpectralReport certify(const TruthTable& t) {
    const int n = t.n_vars();
    const auto W = walsh_spectrum(t);
    SpectralReport r;
    r.balanced = (W[0] == 0);

    std::int32_t maxabs = 0;
    for (std::int32_t w : W) maxabs = std::max(maxabs, w < 0 ? -w : w);
    r.nonlinearity = static_cast<int>((std::size_t(1) << (n - 1)) - (maxabs >> 1));

    int ci = 0;
    for (int m = 1; m <= n; ++m) {
        bool clean = true;
        for (std::size_t a = 1; a < W.size() && clean; ++a)
            if (popcount64(a) == m && W[a] != 0) clean = false;
        if (!clean) break;
        ci = m;
    }
    r.ci_order = ci;
    r.resiliency_order = r.balanced ? ci : -1;
    r.algebraic_degree = tt_to_anf(t).degree();

    // Siegenthaler consistency: impossible to violate for a genuine table,
    // kept as a guard on the transform pipeline itself
    if (r.balanced && ci >= 1) {
        int bound = (ci == n - 1) ? 1 : n - ci - 1;
        if (r.algebraic_degree > bound && !(r.algebraic_degree == 0))
            throw Error(ErrorKind::Validation, "degree/resiliency inconsistency");
    }
    return r;
}

// Construction: x = variables 1..5 (index bits 0..4), y = variables 6..9.
// Each of the 16 y-slices is a linear form a(y).x, with a() a seeded
// bijection onto the 16 weight>=3 vectors of F_2^5 (forcing balance and
// 2-resilience), except one slice which carries the quadratic 2-resilient
// patch x_i x_j + XOR(other three x) to lift the algebraic degree to 6.
// Spectrum magnitudes stay <= 48, so nonlinearity is at least 232.
TruthTable construct_resilient(int n, int m, int d, std::uint64_t seed, int min_nl,
                               int max_trials) {
    if (n != 9 || m != 2)
        throw Error(ErrorKind::Validation, "only 9-variable 2-resilient construction supported");
    if (d > n - m - 1)
        throw Error(ErrorKind::Validation, "degree exceeds n-m-1");
    if (d != 6)
        throw Error(ErrorKind::Validation, "only degree 6 supported");

    SplitMix64 rng(seed);
    for (int trial = 0; trial < max_trials; ++trial) {
        std::vector<int> images;
        for (int v = 0; v < 32; ++v)
            if (popcount64(static_cast<unsigned>(v)) >= 3) images.push_back(v);
        rng.shuffle(images);
        std::uint32_t gbits = static_cast<std::uint32_t>(rng.next());
        int y0 = static_cast<int>(rng.below(16));
        int qi = static_cast<int>(rng.below(5));
        int qj = static_cast<int>(rng.below(4));
        if (qj >= qi) ++qj;

        TruthTable t(9);
        for (int idx = 0; idx < 512; ++idx) {
            const int x = idx & 31, y = idx >> 5;
            int v;
            if (y == y0) {
                v = ((x >> qi) & 1) & ((x >> qj) & 1);
                for (int k = 0; k < 5; ++k)
                    if (k != qi && k != qj) v ^= (x >> k) & 1;
            } else {
                v = parity64(static_cast<std::uint64_t>(images[y] & x)) ^ ((gbits >> y) & 1);
            }
            t.set(idx, v);
        }
        SpectralReport rep = certify(t);
        if (rep.balanced && rep.ci_order >= m && rep.algebraic_degree == d &&
            rep.nonlinearity >= min_nl)
            return t;
    }
    throw Error(ErrorKind::NotFound, "resilient construction exhausted trial bound");
}

} // namespace pals
