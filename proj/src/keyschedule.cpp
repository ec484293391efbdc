#include "pals/keyschedule.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pals {

MainKey::MainKey(const std::array<std::uint8_t, 32>& b) : bytes(b) {
    if (std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t x) { return x == 0; }))
        throw Error(ErrorKind::Validation, "main key must not be all-zero");
}

MainKey MainKey::from_hex(const std::string& hex) {
    std::vector<std::uint8_t> raw = hex_to_bytes(hex);
    if (raw.size() != 32) throw Error(ErrorKind::Format, "main key must be 64 hex digits");
    std::array<std::uint8_t, 32> b{};
    std::copy(raw.begin(), raw.end(), b.begin());
    return MainKey(b);
}

void SpnParams::validate() const {
    if (rounds != 5) throw Error(ErrorKind::Validation, "scrambler uses exactly 5 rounds");
    std::array<bool, 32> seen{};
    for (std::uint8_t d : pbox) {
        if (d >= 32 || seen[d]) throw Error(ErrorKind::Validation, "pbox is not a 32-bit bijection");
        seen[d] = true;
    }
    for (const auto& s : sboxes4) {
        std::array<bool, 16> hit{};
        for (std::uint8_t v : s) {
            if (v >= 16 || hit[v]) throw Error(ErrorKind::Validation, "4-bit S-box is not a bijection");
            hit[v] = true;
        }
    }
}

SpnParams SpnParams::read(std::istream& in) {
    SpnParams p;
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorKind::Format, "missing pbox line");
    std::stringstream ss(line);
    for (int i = 0; i < 32; ++i) {
        int v;
        if (!(ss >> v)) throw Error(ErrorKind::Format, "pbox line needs 32 indices");
        p.pbox[i] = static_cast<std::uint8_t>(v);
    }
    for (auto& box : p.sboxes4) {
        if (!std::getline(in, line)) throw Error(ErrorKind::Format, "missing S-box line");
        std::string hx;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) hx.push_back(c);
        if (hx.size() != 16) throw Error(ErrorKind::Format, "4-bit S-box line needs 16 hex digits");
        for (int i = 0; i < 16; ++i) {
            int v = (hx[i] <= '9') ? hx[i] - '0' : (tolower(hx[i]) - 'a' + 10);
            if (v < 0 || v > 15) throw Error(ErrorKind::Format, "bad hex digit in S-box");
            box[i] = static_cast<std::uint8_t>(v);
        }
    }
    p.validate();
    return p;
}

void SpnParams::write(std::ostream& out) const {
    for (int i = 0; i < 32; ++i) out << (i ? " " : "") << int(pbox[i]);
    out << "\n";
    static const char* digits = "0123456789abcdef";
    for (const auto& box : sboxes4) {
        for (std::uint8_t v : box) out << digits[v];
        out << "\n";
    }
}

static std::uint32_t permute32(std::uint32_t w, const std::array<std::uint8_t, 32>& dest) {
    std::uint32_t r = 0;
    for (int i = 0; i < 32; ++i)
        r |= ((w >> i) & 1u) << dest[i];
    return r;
}

std::uint32_t scram5(std::uint32_t w, const SpnParams& p) {
    for (int round = 0; round < p.rounds; ++round) {
        w = permute32(w, p.pbox);
        std::uint32_t s = 0;
        for (int k = 0; k < 8; ++k)
            s |= static_cast<std::uint32_t>(p.sboxes4[k][(w >> (4 * k)) & 15u]) << (4 * k);
        w = s;
    }
    return w;
}

std::uint32_t scram5_inverse(std::uint32_t w, const SpnParams& p) {
    std::array<std::uint8_t, 32> inv_p{};
    for (int i = 0; i < 32; ++i) inv_p[p.pbox[i]] = static_cast<std::uint8_t>(i);
    std::array<std::array<std::uint8_t, 16>, 8> inv_s{};
    for (int k = 0; k < 8; ++k)
        for (int v = 0; v < 16; ++v) inv_s[k][p.sboxes4[k][v]] = static_cast<std::uint8_t>(v);
    for (int round = 0; round < p.rounds; ++round) {
        std::uint32_t s = 0;
        for (int k = 0; k < 8; ++k)
            s |= static_cast<std::uint32_t>(inv_s[k][(w >> (4 * k)) & 15u]) << (4 * k);
        w = permute32(s, inv_p);
    }
    return w;
}

SessionKey derive_session_key(std::uint32_t message_key, const MainKey& main, const SpnParams& p) {
    SessionKey sk;
    std::uint32_t w = message_key;
    for (int i = 1; i <= 8; ++i) {
        w = scram5(w ^ static_cast<std::uint32_t>(i), p);
        // word i occupies bytes 4(i-1)..4i-1, most significant byte first
        sk.bytes[4 * (i - 1) + 0] = static_cast<std::uint8_t>(w >> 24);
        sk.bytes[4 * (i - 1) + 1] = static_cast<std::uint8_t>(w >> 16);
        sk.bytes[4 * (i - 1) + 2] = static_cast<std::uint8_t>(w >> 8);
        sk.bytes[4 * (i - 1) + 3] = static_cast<std::uint8_t>(w);
    }
    for (int i = 0; i < 32; ++i) sk.bytes[i] ^= main.bytes[i];
    return sk;
}

namespace {

// column-major linear map on register states packed into one word:
// apply(M, s) = xor of M[i] over the set bits i of s
using StepMatrix = std::array<std::uint64_t, 64>;

std::uint64_t apply_matrix(const StepMatrix& m, std::uint64_t s) {
    std::uint64_t r = 0;
    while (s) {
        r ^= m[__builtin_ctzll(s)];
        s &= s - 1;
    }
    return r;
}

StepMatrix compose(const StepMatrix& a, const StepMatrix& b) {
    StepMatrix out{};
    for (int i = 0; i < 64; ++i) out[i] = apply_matrix(a, b[i]);
    return out;
}

}  // namespace

MessageKeyScheduler::MessageKeyScheduler(const FeedbackPoly& poly, std::uint64_t seed,
                                         std::uint64_t counter)
    : reg_(poly, seed), seed_(seed), counter_(counter) {
    if (poly.degree > 64) throw Error(ErrorKind::Validation, "message-key register too wide");
    limit_ = (poly.degree == 64) ? ~1ull : (1ull << poly.degree) - 2;
    if (counter == 0) return;
    // resume mid-sequence: raise the one-clock transition to the 32*counter
    // power instead of replaying the draws one by one
    StepMatrix step{};
    for (int i = 0; i < poly.degree; ++i) {
        Lfsr basis(poly, std::uint64_t(1) << i);
        basis.clock();
        std::uint64_t col = 0;
        for (int j = 1; j <= poly.degree; ++j)
            col |= static_cast<std::uint64_t>(basis.stage(j)) << (j - 1);
        step[i] = col;
    }
    StepMatrix draw = step;  // one draw = 32 clocks
    for (int s = 0; s < 5; ++s) draw = compose(draw, draw);
    StepMatrix acc{};
    for (int i = 0; i < 64; ++i) acc[i] = std::uint64_t(1) << i;  // identity
    StepMatrix pow = draw;
    for (std::uint64_t e = counter; e; e >>= 1) {
        if (e & 1) acc = compose(pow, acc);
        pow = compose(pow, pow);
    }
    const std::uint64_t resumed = apply_matrix(acc, seed);
    reg_ = Lfsr(poly, resumed);
}

std::uint64_t MessageKeyScheduler::next() {
    if (counter_ >= limit_) throw Error(ErrorKind::Rekey, "message-key counter exhausted, rekey required");
    for (int i = 0; i < 32; ++i) reg_.clock();
    ++counter_;
    std::uint64_t v = 0;
    for (int j = 1; j <= reg_.degree(); ++j)
        v |= static_cast<std::uint64_t>(reg_.stage(j)) << (j - 1);
    return v;
}

KeyFile KeyFile::parse(std::istream& in) {
    KeyFile kf;
    std::string line;
    auto need = [&](const char* prefix) {
        if (!std::getline(in, line) || line.rfind(prefix, 0) != 0)
            throw Error(ErrorKind::Format, std::string("key file: expected line ") + prefix);
        std::string v = line.substr(std::string(prefix).size());
        while (!v.empty() && (v.back() == '\r' || v.back() == ' ')) v.pop_back();
        return v;
    };
    kf.main_key = MainKey::from_hex(need("mainkey="));
    std::string seed_hex = need("mkseed=");
    if (seed_hex.size() != 8) throw Error(ErrorKind::Format, "mkseed must be 8 hex digits");
    kf.mk_seed = static_cast<std::uint32_t>(std::stoul(seed_hex, nullptr, 16));
    if (kf.mk_seed == 0) throw Error(ErrorKind::Validation, "mkseed must be nonzero");
    kf.mk_counter = std::stoull(need("mkcounter="));
    return kf;
}

void KeyFile::serialize(std::ostream& out) const {
    char seed_hex[9];
    std::snprintf(seed_hex, sizeof seed_hex, "%08x", mk_seed);
    out << "mainkey=" << main_key.to_hex() << "\n"
        << "mkseed=" << seed_hex << "\n"
        << "mkcounter=" << mk_counter << "\n";
}

KeyFile KeyFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open key file: " + path);
    return parse(in);
}

void KeyFile::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write key file: " + path);
    serialize(out);
    if (!out.flush()) throw Error(ErrorKind::Io, "failed writing key file: " + path);
}

} // namespace pals
