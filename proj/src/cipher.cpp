#include "pals/cipher.hpp"

#include <cstdio>
#include <fstream>

#include "pals/iv_expand.hpp"

namespace pals {

static const char kMagic[4] = {'P', 'A', 'L', 'S'};

CipherFile CipherFile::parse(const std::vector<std::uint8_t>& raw) {
    if (raw.size() < 9) throw Error(ErrorKind::Format, "cipher file truncated");
    for (int i = 0; i < 4; ++i)
        if (raw[i] != static_cast<std::uint8_t>(kMagic[i]))
            throw Error(ErrorKind::Format, "bad magic, not a cipher file");
    if (raw[4] != kVersion) throw Error(ErrorKind::Format, "unsupported cipher file version");
    CipherFile cf;
    cf.message_key = (std::uint32_t(raw[5]) << 24) | (std::uint32_t(raw[6]) << 16) |
                     (std::uint32_t(raw[7]) << 8) | std::uint32_t(raw[8]);
    cf.payload.assign(raw.begin() + 9, raw.end());
    return cf;
}

std::vector<std::uint8_t> CipherFile::serialize() const {
    std::vector<std::uint8_t> out;
    out.reserve(9 + payload.size());
    for (char c : kMagic) out.push_back(static_cast<std::uint8_t>(c));
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>(message_key >> 24));
    out.push_back(static_cast<std::uint8_t>(message_key >> 16));
    out.push_back(static_cast<std::uint8_t>(message_key >> 8));
    out.push_back(static_cast<std::uint8_t>(message_key));
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

CipherFile CipherFile::load(const std::string& path) {
    return parse(read_file_bytes(path));
}

void CipherFile::save(const std::string& path) const {
    write_file_bytes(path, serialize());
}

GeneratorState make_generator(const MainKey& main, std::uint32_t message_key) {
    const ProductionFixtures& fx = production();
    const SessionKey sk = derive_session_key(message_key, main, fx.spn);
    const BitVec iv = generate_iv(sk, fx.iv_params);
    return GeneratorState::load_initial_state(fx.generator, sk, iv);
}

std::vector<std::uint8_t> keystream_bytes_for(const MainKey& main, std::uint32_t message_key,
                                              std::size_t n_bytes) {
    GeneratorState gen = make_generator(main, message_key);
    std::vector<std::uint8_t> out(n_bytes);
    gen.keystream_bytes(out.data(), n_bytes);
    return out;
}

CipherFile encrypt_bytes(KeyFile& kf, const std::vector<std::uint8_t>& plaintext) {
    MessageKeyScheduler sched(message_key_poly(), kf.mk_seed, kf.mk_counter);
    const std::uint32_t mk = static_cast<std::uint32_t>(sched.next());
    kf.mk_counter = sched.counter();

    CipherFile cf;
    cf.message_key = mk;
    cf.payload = keystream_bytes_for(kf.main_key, mk, plaintext.size());
    for (std::size_t i = 0; i < plaintext.size(); ++i) cf.payload[i] ^= plaintext[i];
    return cf;
}

std::vector<std::uint8_t> decrypt_bytes(const KeyFile& kf, const CipherFile& cf) {
    std::vector<std::uint8_t> out = keystream_bytes_for(kf.main_key, cf.message_key, cf.payload.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= cf.payload[i];
    return out;
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open file: " + path);
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    return data;
}

void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write file: " + path);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out.flush()) throw Error(ErrorKind::Io, "failed writing file: " + path);
}

} // namespace pals
