#include "pals/galois.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace pals {

// ---------------------------------------------------------------- FeedbackPoly

FeedbackPoly::FeedbackPoly(int deg, std::vector<int> tap_exps) : degree(deg), taps(std::move(tap_exps)) {
    if (degree < 1) throw Error(ErrorKind::Validation, "polynomial degree must be positive");
    std::sort(taps.begin(), taps.end(), std::greater<int>());
    if (std::adjacent_find(taps.begin(), taps.end()) != taps.end())
        throw Error(ErrorKind::Validation, "duplicate tap exponent");
    if (taps.empty() || taps.front() != degree || taps.back() != 0)
        throw Error(ErrorKind::Validation, "taps must include x^L and x^0");
    for (int e : taps)
        if (e < 0 || e > degree) throw Error(ErrorKind::Validation, "tap exponent out of range");
}

bool FeedbackPoly::has_tap(int e) const {
    return std::binary_search(taps.begin(), taps.end(), e, std::greater<int>());
}

FeedbackPoly FeedbackPoly::from_line(const std::string& line) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Format, "polynomial line missing ':'");
    int deg = std::stoi(line.substr(0, colon));
    std::vector<int> exps;
    std::stringstream ss(line.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (tok.find_first_not_of(" \t") != std::string::npos) exps.push_back(std::stoi(tok));
    return FeedbackPoly(deg, std::move(exps));
}

std::string FeedbackPoly::to_line() const {
    std::string s = std::to_string(degree) + ": ";
    for (std::size_t i = 0; i < taps.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(taps[i]);
    }
    return s;
}

// ------------------------------------------------------------------ FactorSet

FactorSet::FactorSet(int L, std::vector<bigint> factors, bool check)
    : modulus_exponent(L), prime_factors(std::move(factors)) {
    std::sort(prime_factors.begin(), prime_factors.end());
    if (check) validate();
}

bigint FactorSet::modulus() const {
    return (bigint(1) << modulus_exponent) - 1;
}

void FactorSet::validate() const {
    bigint prod = 1;
    for (const bigint& q : prime_factors) {
        if (q < 2) throw Error(ErrorKind::Validation, "factor below 2");
        prod *= q;
    }
    if (prod != modulus())
        throw Error(ErrorKind::Validation,
                    "factor set does not multiply to 2^" + std::to_string(modulus_exponent) + "-1");
}

FactorSet FactorSet::from_line(const std::string& line) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Format, "factor line missing ':'");
    int L = std::stoi(line.substr(0, colon));
    std::vector<bigint> fs;
    std::stringstream ss(line.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = tok.find_last_not_of(" \t\r");
        fs.emplace_back(tok.substr(b, e - b + 1));
    }
    return FactorSet(L, std::move(fs));
}

std::string FactorSet::to_line() const {
    std::string s = std::to_string(modulus_exponent) + ": ";
    for (std::size_t i = 0; i < prime_factors.size(); ++i) {
        if (i) s += ',';
        s += prime_factors[i].str();
    }
    return s;
}

static bool content_line(std::string& line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

std::map<int, FactorSet> parse_factor_table(std::istream& in) {
    std::map<int, FactorSet> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!content_line(line)) continue;
        FactorSet fs = FactorSet::from_line(line);
        out.emplace(fs.modulus_exponent, std::move(fs));
    }
    return out;
}

std::map<int, FeedbackPoly> parse_poly_table(std::istream& in) {
    std::map<int, FeedbackPoly> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!content_line(line)) continue;
        FeedbackPoly p = FeedbackPoly::from_line(line);
        out.emplace(p.degree, std::move(p));
    }
    return out;
}

// ----------------------------------------------------------------------- Lfsr

Lfsr::Lfsr(FeedbackPoly poly, const BitVec& initial_state) : poly_(std::move(poly)) {
    const int L = poly_.degree;
    if (static_cast<int>(initial_state.size()) != L)
        throw Error(ErrorKind::Validation, "state length must equal polynomial degree");
    words_ = (L + 63) / 64;
    state_.assign(words_, 0);
    for (int j = 1; j <= L; ++j)
        if (initial_state.get(j - 1)) state_[(j - 1) >> 6] |= 1ull << ((j - 1) & 63);
    fb_mask_.assign(words_, 0);
    for (int e : poly_.taps)
        if (e < L) {
            int b = L - 1 - e;
            fb_mask_[b >> 6] |= 1ull << (b & 63);
        }
    top_clear_ = (L & 63) ? ((1ull << (L & 63)) - 1) : ~0ull;
    if (is_zero()) throw Error(ErrorKind::Validation, "all-zero register state");
}

static BitVec word_to_bits(std::uint64_t w, int n) {
    BitVec v(n);
    for (int i = 0; i < n; ++i) v.set(i, static_cast<int>((w >> i) & 1));
    return v;
}

Lfsr::Lfsr(FeedbackPoly poly, std::uint64_t initial_state)
    : Lfsr(poly, word_to_bits(initial_state, poly.degree)) {}

bool Lfsr::is_zero() const {
    for (std::uint64_t w : state_)
        if (w) return false;
    return true;
}

int Lfsr::clock() {
    const int out = output_bit();
    std::uint64_t acc = 0;
    for (int i = 0; i < words_; ++i) acc ^= state_[i] & fb_mask_[i];
    const std::uint64_t fb = static_cast<std::uint64_t>(parity64(acc));
    std::uint64_t carry = fb;
    for (int i = 0; i < words_; ++i) {
        std::uint64_t nc = state_[i] >> 63;
        state_[i] = (state_[i] << 1) | carry;
        carry = nc;
    }
    state_[words_ - 1] &= top_clear_;
    return out;
}

BitVec Lfsr::state_bits() const {
    BitVec v(poly_.degree);
    for (int j = 1; j <= poly_.degree; ++j) v.set(j - 1, stage(j));
    return v;
}

void Lfsr::set_stage(int j, int v) {
    const int b = j - 1;
    if (v) state_[b >> 6] |= 1ull << (b & 63);
    else state_[b >> 6] &= ~(1ull << (b & 63));
}

void Lfsr::xor_stage(int j, int v) {
    if (v) state_[(j - 1) >> 6] ^= 1ull << ((j - 1) & 63);
}

// --------------------------------------------------- GF(2)[x] modular algebra
//
// Dense polynomials packed into 64-bit words, coefficient of x^i at word
// i/64, bit i%64. Reduction is by the monic modulus p of degree L.

namespace {

struct PolyMod {
    int L;
    int words;
    std::vector<std::uint64_t> p;  // modulus, degree L

    explicit PolyMod(const FeedbackPoly& fp) : L(fp.degree), words(fp.degree / 64 + 1) {
        p.assign(words, 0);
        for (int e : fp.taps) p[e >> 6] |= 1ull << (e & 63);
    }

    bool bit(const std::vector<std::uint64_t>& a, int i) const {
        return (a[i >> 6] >> (i & 63)) & 1;
    }

    // a = a*x mod p, deg a < L
    void mulx(std::vector<std::uint64_t>& a) const {
        bool top = bit(a, L - 1);
        std::uint64_t carry = 0;
        for (int i = 0; i < words; ++i) {
            std::uint64_t nc = a[i] >> 63;
            a[i] = (a[i] << 1) | carry;
            carry = nc;
        }
        if (top)
            for (int i = 0; i < words; ++i) a[i] ^= p[i];
        // x^L cancelled by the xor with p (p has the x^L bit set)
    }

    std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a,
                                   const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> acc(words, 0), shifted = a;
        for (int i = 0; i < L; ++i) {
            if (bit(b, i))
                for (int w = 0; w < words; ++w) acc[w] ^= shifted[w];
            mulx(shifted);
        }
        return acc;
    }

    std::vector<std::uint64_t> one() const {
        std::vector<std::uint64_t> r(words, 0);
        r[0] = 1;
        return r;
    }

    std::vector<std::uint64_t> x() const {
        std::vector<std::uint64_t> r(words, 0);
        if (L == 1) {  // x reduces mod a degree-1 polynomial
            r[0] = 1;
            for (int w = 0; w < words; ++w) r[w] ^= p[w];
            r[0] ^= 1ull << 1;
            return r;
        }
        r[0] = 2;
        return r;
    }

    std::vector<std::uint64_t> pow(std::vector<std::uint64_t> base, const bigint& e) const {
        std::vector<std::uint64_t> r = one();
        if (e == 0) return r;
        const std::size_t nbits = boost::multiprecision::msb(e) + 1;
        for (std::size_t i = nbits; i-- > 0;) {
            r = mul(r, r);
            if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = mul(r, base);
        }
        return r;
    }

    bool is_one(const std::vector<std::uint64_t>& a) const {
        if (a[0] != 1) return false;
        for (int i = 1; i < words; ++i)
            if (a[i]) return false;
        return true;
    }
};

}  // namespace

bool is_primitive(const FeedbackPoly& poly, const FactorSet& factors) {
    if (factors.modulus_exponent != poly.degree)
        throw Error(ErrorKind::Validation, "factor set is for a different degree");
    factors.validate();
    // ord(x) == 2^L-1 already forces irreducibility: a proper factorization
    // of p caps the odd part of any element order strictly below 2^L-1.
    PolyMod pm(poly);
    const bigint n = factors.modulus();
    if (!pm.is_one(pm.pow(pm.x(), n))) return false;
    bigint last = 0;
    for (const bigint& q : factors.prime_factors) {
        if (q == last) continue;  // factors sorted; skip repeats
        last = q;
        if (pm.is_one(pm.pow(pm.x(), n / q))) return false;
    }
    return true;
}

FeedbackPoly find_dense_primitive(int degree, int target_weight, const FactorSet& factors,
                                  std::uint64_t seed, int max_trials) {
    if (degree < 2) throw Error(ErrorKind::Validation, "degree must be at least 2");
    if (factors.modulus_exponent != degree)
        throw Error(ErrorKind::Validation, "factor set is for a different degree");
    // total term count must be odd, otherwise x+1 divides; admit every odd
    // weight within the tolerance window, nearest to the target first
    const int tol = std::max(1, (target_weight + 9) / 10);
    std::vector<int> weights;
    for (int dist = 0; dist <= tol; ++dist)
        for (int w : {target_weight - dist, target_weight + dist})
            if ((w & 1) && w >= 3 && w <= degree + 1 &&
                std::find(weights.begin(), weights.end(), w) == weights.end())
                weights.push_back(w);
    if (weights.empty() && target_weight <= 3) weights.push_back(3);
    if (weights.empty())
        throw Error(ErrorKind::Validation, "no admissible odd weight near target");

    SplitMix64 rng(seed);
    std::vector<int> interior(degree - 1);
    for (int i = 0; i < degree - 1; ++i) interior[i] = i + 1;

    for (int w : weights) {
        // small candidate spaces are exhausted quickly, so bound the trials
        // by a multiple of the combination count
        double combos = 1.0;
        for (int i = 0; i < w - 2 && combos < 1e9; ++i)
            combos = combos * (degree - 1 - i) / (i + 1);
        const int trials = static_cast<int>(std::min<double>(max_trials, 64.0 * combos + 64));
        for (int trial = 0; trial < trials; ++trial) {
            // partial Fisher-Yates: first w-2 entries become the interior taps
            for (int i = 0; i < w - 2; ++i) {
                std::size_t j = i + rng.below(interior.size() - i);
                std::swap(interior[i], interior[j]);
            }
            std::vector<int> taps(interior.begin(), interior.begin() + (w - 2));
            taps.push_back(0);
            taps.push_back(degree);
            FeedbackPoly cand(degree, std::move(taps));
            if (is_primitive(cand, factors)) return cand;
        }
    }
    throw Error(ErrorKind::NotFound, "no primitive polynomial found within trial bound");
}

} // namespace pals
