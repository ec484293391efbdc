#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pals/fixtures.hpp"
#include "pals/keyschedule.hpp"
#include "pals/keystream.hpp"

namespace pals {

// On-disk ciphertext: "PALS" magic, version 0x01, 4-byte big-endian message
// key, then the payload (same length as the plaintext).
struct CipherFile {
    static constexpr std::uint8_t kVersion = 0x01;

    std::uint32_t message_key = 0;
    std::vector<std::uint8_t> payload;

    static CipherFile parse(const std::vector<std::uint8_t>& raw);
    std::vector<std::uint8_t> serialize() const;
    static CipherFile load(const std::string& path);
    void save(const std::string& path) const;
};

// message key -> session key -> initial vector -> loaded generator
GeneratorState make_generator(const MainKey& main, std::uint32_t message_key);

// keystream for a given (main key, message key) pair
std::vector<std::uint8_t> keystream_bytes_for(const MainKey& main, std::uint32_t message_key,
                                              std::size_t n_bytes);

// Draws the next message key from the key file state (caller persists the
// updated counter) and XORs the keystream over the plaintext.
CipherFile encrypt_bytes(KeyFile& kf, const std::vector<std::uint8_t>& plaintext);
std::vector<std::uint8_t> decrypt_bytes(const KeyFile& kf, const CipherFile& cf);

std::vector<std::uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& data);

} // namespace pals
