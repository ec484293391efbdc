#include "pals/keystream.hpp"

namespace pals {

Table9 Table9::from_tt(const TruthTable& t) {
    if (t.n_vars() != 9) throw Error(ErrorKind::Validation, "lookup table must have 9 variables");
    Table9 out;
    for (int i = 0; i < 8; ++i) out.words[i] = t.words()[i];
    return out;
}

int GeneratorFixtures::total_length() const {
    int s = 0;
    for (const auto& p : polys) s += p.degree;
    return s;
}

std::array<std::array<int, 8>, 8> GeneratorFixtures::tap_stages() const {
    std::array<std::array<int, 8>, 8> taps{};
    for (int r = 0; r < 8; ++r)
        for (int k = 1; k <= 8; ++k)
            taps[r][k - 1] = (k * polys[r].degree + 8) / 9;  // ceil(k*L/9)
    return taps;
}

std::array<bool, 8> clock_control(std::uint8_t control) {
    const int ones = popcount64(control);
    std::array<bool, 8> clocked{};
    if (ones == 4) {
        clocked.fill(true);
        return clocked;
    }
    const int majority = ones > 4;
    for (int r = 0; r < 8; ++r)
        clocked[r] = (((control >> (7 - r)) & 1) == majority);
    return clocked;
}

int select_sbox(const std::array<int, 8>& out_bits) {
    const int left = out_bits[0] ^ out_bits[2] ^ out_bits[4] ^ out_bits[6];
    const int right = out_bits[1] ^ out_bits[3] ^ out_bits[5] ^ out_bits[7];
    return (left << 1) | right;
}

PlacementPlan plan_placement(const SessionKey& sk) {
    const BitVec bits = sk.bits();
    PlacementPlan plan;
    std::array<int, 8> next_stage;
    next_stage.fill(1);
    for (int j = 0; j < 163; ++j) {
        // window over session-key bits j+1, j+2, j+3 (1-based), first bit high
        const int v = (bits.get(j) << 2) | (bits.get(j + 1) << 1) | bits.get(j + 2);
        plan.assignments[j] = PlacementEntry{v, next_stage[v]++};
    }
    return plan;
}

void GeneratorState::Register::clock() {
    std::uint64_t acc = 0;
    for (int i = 0; i < words; ++i) acc ^= state[i] & fb_mask[i];
    std::uint64_t carry = static_cast<std::uint64_t>(parity64(acc));
    for (int i = 0; i < words; ++i) {
        std::uint64_t nc = state[i] >> 63;
        state[i] = (state[i] << 1) | carry;
        carry = nc;
    }
    state[words - 1] &= top_clear;
}

bool GeneratorState::Register::zero() const {
    for (int i = 0; i < words; ++i)
        if (state[i]) return false;
    return true;
}

unsigned GeneratorState::Register::filter_index(int control_bit) const {
    unsigned idx = static_cast<unsigned>(control_bit) << 8;
    for (int k = 0; k < 8; ++k) idx |= static_cast<unsigned>(bit(taps[k])) << k;
    return idx;
}

GeneratorState::GeneratorState(const GeneratorFixtures& fx) : fx_(&fx) {
    if (!fx.sboxes8) throw Error(ErrorKind::Validation, "generator fixtures missing S-boxes");
    const auto taps = fx.tap_stages();
    for (int r = 0; r < 8; ++r) {
        Register& reg = regs_[r];
        const FeedbackPoly& p = fx.polys[r];
        reg.degree = p.degree;
        reg.words = (p.degree + 63) / 64;
        if (reg.words > 4) throw Error(ErrorKind::Validation, "register longer than 256 stages");
        for (int e : p.taps)
            if (e < p.degree) {
                const int b = p.degree - 1 - e;
                reg.fb_mask[b >> 6] |= 1ull << (b & 63);
            }
        reg.top_clear = (p.degree & 63) ? ((1ull << (p.degree & 63)) - 1) : ~0ull;
        reg.taps = taps[r];
    }
}

GeneratorState::GeneratorState(const GeneratorFixtures& fx, const std::array<BitVec, 8>& register_bits)
    : GeneratorState(fx) {
    for (int r = 0; r < 8; ++r) {
        if (static_cast<int>(register_bits[r].size()) != regs_[r].degree)
            throw Error(ErrorKind::Validation, "register bit length mismatch");
        for (int j = 1; j <= regs_[r].degree; ++j)
            if (register_bits[r].get(j - 1)) regs_[r].state[(j - 1) >> 6] |= 1ull << ((j - 1) & 63);
        if (regs_[r].zero()) throw Error(ErrorKind::Validation, "all-zero register state");
    }
}

void GeneratorState::force_nonzero(InitReport& rep) {
    for (int r = 0; r < 8; ++r)
        if (regs_[r].zero()) {
            const int b = regs_[r].degree - 1;
            regs_[r].state[b >> 6] |= 1ull << (b & 63);  // last stage forced to 1
            rep.repaired[r] = true;
            ++rep.repair_count;
        }
}

GeneratorState GeneratorState::load_initial_state(const GeneratorFixtures& fx, const SessionKey& sk,
                                                  const BitVec& iv, PlacementPlan* plan_out,
                                                  InitReport* report_out) {
    if (static_cast<int>(iv.size()) != fx.total_length())
        throw Error(ErrorKind::Validation, "initial vector length must equal total register length");
    GeneratorState st(fx);
    PlacementPlan plan = plan_placement(sk);

    std::array<std::vector<bool>, 8> filled;
    for (int r = 0; r < 8; ++r) filled[r].assign(st.regs_[r].degree + 1, false);

    // guided phase: one vector bit per session-key window
    for (int j = 0; j < 163; ++j) {
        const auto [r, stage] = plan.assignments[j];
        if (iv.get(j)) st.regs_[r].state[(stage - 1) >> 6] |= 1ull << ((stage - 1) & 63);
        filled[r][stage] = true;
    }
    // sequential phase: remaining bits sweep registers front to back
    std::size_t next = 163;
    for (int r = 0; r < 8; ++r)
        for (int stage = 1; stage <= st.regs_[r].degree; ++stage) {
            if (filled[r][stage]) continue;
            if (iv.get(next++)) st.regs_[r].state[(stage - 1) >> 6] |= 1ull << ((stage - 1) & 63);
        }

    InitReport rep;
    st.force_nonzero(rep);
    st.h_prev_ = 0;
    if (plan_out) *plan_out = plan;
    if (report_out) *report_out = rep;
    return st;
}

InitReport GeneratorState::resync(const BitVec& iv) {
    if (static_cast<int>(iv.size()) != fx_->total_length())
        throw Error(ErrorKind::Validation, "initial vector length must equal total register length");
    std::size_t pos = 0;
    for (int r = 0; r < 8; ++r)
        for (int stage = 1; stage <= regs_[r].degree; ++stage, ++pos)
            if (iv.get(pos)) regs_[r].state[(stage - 1) >> 6] ^= 1ull << ((stage - 1) & 63);
    InitReport rep;
    force_nonzero(rep);
    h_prev_ = 0;
    return rep;
}

int GeneratorState::next_bit() {
    // snapshot of the eight output stages
    std::array<int, 8> outs;
    for (int r = 0; r < 8; ++r) outs[r] = regs_[r].output();

    const int sel = select_sbox(outs);
    std::uint8_t in_byte = 0;
    for (int r = 0; r < 8; ++r) in_byte = static_cast<std::uint8_t>((in_byte << 1) | outs[r]);
    const std::uint8_t control = (*fx_->sboxes8)[sel][in_byte];

    const auto clocked = clock_control(control);
    for (int r = 0; r < 8; ++r)
        if (clocked[r]) {
            regs_[r].clock();
            ++clock_counts_[r];
        }

    // filter layer: register r feeds F_{r+1}; its ninth input is control bit r
    // counted from the least significant end
    unsigned f_bits = 0;
    for (int r = 0; r < 8; ++r) {
        const int cbit = (control >> r) & 1;
        f_bits |= static_cast<unsigned>(fx_->f_tables[r].get(regs_[r].filter_index(cbit))) << r;
    }

    const int z = parity64(f_bits) ^ h_prev_;
    h_prev_ = fx_->h_table.get(f_bits | (static_cast<unsigned>(h_prev_) << 8));
    ++steps_;
    return z;
}

BitVec GeneratorState::keystream(std::size_t n) {
    BitVec out(n);
    for (std::size_t i = 0; i < n; ++i)
        if (next_bit()) out.set(i, 1);
    return out;
}

void GeneratorState::keystream_bytes(std::uint8_t* out, std::size_t n_bytes) {
    for (std::size_t i = 0; i < n_bytes; ++i) {
        std::uint8_t b = 0;
        for (int k = 0; k < 8; ++k) b = static_cast<std::uint8_t>((b << 1) | next_bit());
        out[i] = b;
    }
}

BitVec GeneratorState::register_bits(int r) const {
    BitVec v(regs_[r].degree);
    for (int j = 1; j <= regs_[r].degree; ++j) v.set(j - 1, regs_[r].bit(j));
    return v;
}

} // namespace pals
