#include "pals/bits.hpp"

#include <stdexcept>

namespace pals {

BitVec BitVec::from_bytes(const std::uint8_t* data, std::size_t nbits) {
    BitVec v(nbits);
    std::size_t nbytes = (nbits + 7) / 8;
    for (std::size_t i = 0; i < nbytes; ++i) v.bytes_[i] = data[i];
    // clear slack bits in the last byte
    if (nbits % 8) {
        std::uint8_t mask = static_cast<std::uint8_t>(0xff00u >> (nbits % 8));
        v.bytes_.back() &= mask;
    }
    return v;
}

BitVec BitVec::from_bytes(const std::vector<std::uint8_t>& data, std::size_t nbits) {
    if (data.size() < (nbits + 7) / 8) throw std::invalid_argument("BitVec: byte buffer too short");
    return from_bytes(data.data(), nbits);
}

BitVec BitVec::from_hex(const std::string& hex, std::size_t nbits) {
    std::vector<std::uint8_t> raw = hex_to_bytes(hex);
    return from_bytes(raw, nbits);
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (std::uint8_t b : bytes_) c += static_cast<std::size_t>(__builtin_popcount(b));
    return c;
}

void BitVec::xor_with(const BitVec& other) {
    if (other.bits_ != bits_) throw std::invalid_argument("BitVec: length mismatch in xor");
    for (std::size_t i = 0; i < bytes_.size(); ++i) bytes_[i] ^= other.bytes_[i];
}

std::string BitVec::to_hex() const {
    return bytes_to_hex(bytes_.data(), bytes_.size());
}

static int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::string bytes_to_hex(const std::uint8_t* data, std::size_t n) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        s.push_back(digits[data[i] >> 4]);
        s.push_back(digits[data[i] & 15]);
    }
    return s;
}

std::vector<std::uint8_t> hex_to_bytes(const std::string& hex) {
    std::vector<std::uint8_t> out;
    out.reserve(hex.size() / 2 + 1);
    int hi = -1;
    for (char c : hex) {
        if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
        int v = hex_val(c);
        if (v < 0) throw std::invalid_argument("invalid hex character");
        if (hi < 0) {
            hi = v;
        } else {
            out.push_back(static_cast<std::uint8_t>((hi << 4) | v));
            hi = -1;
        }
    }
    if (hi >= 0) out.push_back(static_cast<std::uint8_t>(hi << 4));
    return out;
}

} // namespace pals
