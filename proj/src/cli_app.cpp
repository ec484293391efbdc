#include "pals/cli_app.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "pals/analysis.hpp"
#include "pals/cipher.hpp"
#include "pals/fixtures.hpp"

namespace pals {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;
constexpr int kExitRekey = 4;
constexpr int kExitIo = 5;

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Format: return kExitFormat;
        case ErrorKind::Rekey: return kExitRekey;
        case ErrorKind::Io: return kExitIo;
        case ErrorKind::Validation: return kExitUsage;
        default: return kExitFail;
    }
}

// advisory exclusive lock held while the key-file counter is rewritten
class FileLock {
public:
    explicit FileLock(const std::string& path) : fd_(::open(path.c_str(), O_RDWR)) {
        if (fd_ < 0) throw Error(ErrorKind::Io, "cannot open key file for locking: " + path);
        if (::flock(fd_, LOCK_EX) != 0) {
            ::close(fd_);
            throw Error(ErrorKind::Io, "cannot lock key file: " + path);
        }
    }
    ~FileLock() {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_;
};

std::uint64_t os_entropy() {
    std::random_device rd;
    std::uint64_t v = (std::uint64_t(rd()) << 32) | rd();
    return v ^ (std::uint64_t(rd()) << 16);
}

int cmd_keygen(const std::string& key_path, std::ostream& out) {
    SplitMix64 rng(os_entropy());
    KeyFile kf;
    do {
        for (auto& b : kf.main_key.bytes) b = static_cast<std::uint8_t>(rng.next());
    } while (std::all_of(kf.main_key.bytes.begin(), kf.main_key.bytes.end(),
                         [](std::uint8_t x) { return x == 0; }));
    do {
        kf.mk_seed = static_cast<std::uint32_t>(rng.next());
    } while (kf.mk_seed == 0);
    kf.mk_counter = 0;
    kf.save(key_path);
    out << "wrote " << key_path << "\n";
    return kExitOk;
}

int cmd_encrypt(const std::string& key_path, const std::string& in_path,
                const std::string& out_path, std::ostream& out) {
    FileLock lock(key_path);
    KeyFile kf = KeyFile::load(key_path);
    const std::vector<std::uint8_t> plaintext = read_file_bytes(in_path);
    CipherFile cf = encrypt_bytes(kf, plaintext);
    cf.save(out_path);
    kf.save(key_path);  // persist the advanced counter
    out << "encrypted " << plaintext.size() << " bytes with message key "
        << std::hex << std::setw(8) << std::setfill('0') << cf.message_key << std::dec << "\n";
    return kExitOk;
}

int cmd_decrypt(const std::string& key_path, const std::string& in_path,
                const std::string& out_path, std::ostream& out) {
    // header is validated before any key material is read
    CipherFile cf = CipherFile::load(in_path);
    KeyFile kf = KeyFile::load(key_path);
    write_file_bytes(out_path, decrypt_bytes(kf, cf));
    out << "decrypted " << cf.payload.size() << " bytes\n";
    return kExitOk;
}

void emit_keystream(const KeyFile& kf, std::uint32_t mk, long long n_bits,
                    const std::string& out_path, std::ostream& out) {
    const std::size_t n_bytes = static_cast<std::size_t>((n_bits + 7) / 8);
    std::vector<std::uint8_t> buf = keystream_bytes_for(kf.main_key, mk, n_bytes);
    if (n_bits % 8)  // zero the tail beyond the requested bit count
        buf.back() &= static_cast<std::uint8_t>(0xff00u >> (n_bits % 8));
    if (out_path.empty()) {
        out << bytes_to_hex(buf.data(), buf.size()) << "\n";
    } else {
        write_file_bytes(out_path, buf);
        out << "wrote " << buf.size() << " bytes of keystream (message key " << std::hex
            << std::setw(8) << std::setfill('0') << mk << std::dec << ")\n";
    }
}

int cmd_keystream(const std::string& key_path, long long n_bits, const std::string& mk_hex,
                  const std::string& out_path, std::ostream& out) {
    if (n_bits <= 0) throw Error(ErrorKind::Validation, "--bits must be positive");
    std::uint32_t mk;
    if (!mk_hex.empty()) {
        if (mk_hex.size() != 8) throw Error(ErrorKind::Validation, "--message-key must be 8 hex digits");
        mk = static_cast<std::uint32_t>(std::stoul(mk_hex, nullptr, 16));
        KeyFile kf = KeyFile::load(key_path);
        emit_keystream(kf, mk, n_bits, out_path, out);
    } else {
        FileLock lock(key_path);
        KeyFile kf = KeyFile::load(key_path);
        MessageKeyScheduler sched(message_key_poly(), kf.mk_seed, kf.mk_counter);
        mk = static_cast<std::uint32_t>(sched.next());
        kf.mk_counter = sched.counter();
        kf.save(key_path);
        emit_keystream(kf, mk, n_bits, out_path, out);
    }
    return kExitOk;
}

int cmd_audit(const std::string& key_path, long long n_bits, const std::string& csv_path,
              std::ostream& out) {
    if (n_bits < 20000) throw Error(ErrorKind::Validation, "audit needs --bits of at least 20000");
    KeyFile kf = KeyFile::load(key_path);
    // peek the next message key without consuming it
    MessageKeyScheduler sched(message_key_poly(), kf.mk_seed, kf.mk_counter);
    const std::uint32_t mk = static_cast<std::uint32_t>(sched.next());

    const ProductionFixtures& fx = production();
    GeneratorState gen = make_generator(kf.main_key, mk);
    const BitVec stream = gen.keystream(static_cast<std::size_t>(n_bits));

    struct Row {
        std::string metric;
        double value;
        std::string threshold;
        bool pass;
    };
    std::vector<Row> rows;

    const RandomnessReport rr = randomness_suite(stream);
    rows.push_back({"monobit_z", rr.monobit.statistic, "<=2.5758", rr.monobit.pass});
    rows.push_back({"runs_z", rr.runs.statistic, "<=2.5758", rr.runs.pass});
    rows.push_back({"poker_chi2", rr.poker.statistic, "<=30.5779", rr.poker.pass});

    BitVec prefix(4096);
    for (std::size_t i = 0; i < 4096 && i < stream.size(); ++i) prefix.set(i, stream.get(i));
    const auto lc = berlekamp_massey(prefix);
    rows.push_back({"linear_complexity_4096", double(lc.final_lc), ">1024", lc.final_lc > 1024});

    const auto av = avalanche_matrix(
        [&fx](const BitVec& in) {
            std::uint32_t w = 0;
            for (int i = 0; i < 32; ++i) w |= static_cast<std::uint32_t>(in.get(i)) << (31 - i);
            const std::uint32_t y = scram5(w, fx.spn);
            BitVec o(32);
            for (int i = 0; i < 32; ++i) o.set(i, (y >> (31 - i)) & 1);
            return o;
        },
        32, 32, 2000, seeds::kSboxSearchMc);
    rows.push_back({"scrambler_flip_min", av.min_prob(), ">=0.45", av.min_prob() >= 0.45});
    rows.push_back({"scrambler_flip_max", av.max_prob(), "<=0.55", av.max_prob() <= 0.55});

    std::vector<int> lens(kRegisterLengths.begin(), kRegisterLengths.end());
    const KeyspaceReport ks = keyspace_log2(lens, fx.factors);
    rows.push_back({"keyspace_log2_product", ks.log2_product_form, ">477", ks.log2_product_form > 477});
    rows.push_back({"keyspace_log2_sum_primitive", ks.log2_sum_form, "report", true});
    rows.push_back({"keyspace_log2_sum_all_polys", ks.log2_sum_form_all_polys, ">477",
                    ks.log2_sum_form_all_polys > 477});

    const TmtoCost tm = tmto_cost(1600);
    rows.push_back({"tmto_log2_time", tm.log2_time, "[818.5,821]",
                    tm.log2_time >= 818.5 && tm.log2_time <= 821});
    rows.push_back({"tmto_log2_memory", tm.log2_memory, "[809,812]",
                    tm.log2_memory >= 809 && tm.log2_memory <= 812});
    rows.push_back({"cube_log2_ops", cube_cost_log2(163, 256), ">=162",
                    cube_cost_log2(163, 256) >= 162});

    out << "audit: message key " << std::hex << std::setw(8) << std::setfill('0') << mk
        << std::dec << std::setfill(' ') << ", " << n_bits << " keystream bits\n";
    bool all = true;
    for (const Row& r : rows) {
        all = all && r.pass;
        out << "  " << std::left << std::setw(28) << r.metric << std::right << std::setw(14)
            << std::fixed << std::setprecision(4) << r.value << "  " << std::setw(12)
            << r.threshold << "  " << (r.pass ? "pass" : "FAIL") << "\n";
    }
    if (!csv_path.empty()) {
        std::ostringstream csv;
        csv << "metric,value,threshold,verdict\n";
        for (const Row& r : rows)
            csv << r.metric << "," << std::setprecision(6) << std::fixed << r.value << ","
                << r.threshold << "," << (r.pass ? "pass" : "fail") << "\n";
        const std::string s = csv.str();
        write_file_bytes(csv_path, std::vector<std::uint8_t>(s.begin(), s.end()));
    }
    out << (all ? "audit: all checks passed\n" : "audit: FAILURES present\n");
    return all ? kExitOk : kExitFail;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "pals stream cipher tool\n"
        "exit codes: 0 ok, 2 usage, 3 format, 4 rekey required, 5 i/o"};
    app.require_subcommand(1);

    std::string key_path, in_path, out_path, mk_hex, csv_path;
    long long n_bits = 0;

    auto* keygen = app.add_subcommand("keygen", "generate a fresh key file");
    keygen->add_option("--key", key_path, "key file to write")->required();

    auto* encrypt = app.add_subcommand("encrypt", "encrypt a file, advancing the message-key counter");
    encrypt->add_option("--key", key_path, "key file")->required();
    encrypt->add_option("input", in_path, "plaintext file")->required();
    encrypt->add_option("output", out_path, "ciphertext file")->required();

    auto* decrypt = app.add_subcommand("decrypt", "decrypt a cipher file");
    decrypt->add_option("--key", key_path, "key file")->required();
    decrypt->add_option("input", in_path, "ciphertext file")->required();
    decrypt->add_option("output", out_path, "plaintext file")->required();

    auto* keystream = app.add_subcommand("keystream", "dump raw keystream");
    keystream->add_option("--key", key_path, "key file")->required();
    keystream->add_option("--bits", n_bits, "number of keystream bits")->required();
    keystream->add_option("--message-key", mk_hex,
                          "reuse a specific message key (8 hex digits) instead of drawing one");
    keystream->add_option("--out", out_path, "write raw bytes here instead of hex to stdout");

    auto* audit = app.add_subcommand("audit", "statistical and cost self-audit");
    audit->add_option("--key", key_path, "key file")->required();
    audit->add_option("--bits", n_bits, "keystream sample size (>= 20000)")->required();
    audit->add_option("--csv", csv_path, "also write a machine-readable table");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*keygen) return cmd_keygen(key_path, out);
        if (*encrypt) return cmd_encrypt(key_path, in_path, out_path, out);
        if (*decrypt) return cmd_decrypt(key_path, in_path, out_path, out);
        if (*keystream) return cmd_keystream(key_path, n_bits, mk_hex, out_path, out);
        if (*audit) return cmd_audit(key_path, n_bits, csv_path, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

} // namespace pals
