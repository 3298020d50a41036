#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "state.hpp"

namespace chaoshash {

// 256-bit hash value. Bit 0 is the leftmost bit; hex reads the bits in
// 4-bit groups left to right and renders uppercase.
class Digest {
public:
    explicit Digest(const CellState& bits) {
        if (bits.size() != 256) throw std::invalid_argument("Digest: exactly 256 bits required");
        for (std::size_t i = 0; i < 256; ++i)
            if (bits.bit(i)) bytes_[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }

    static Digest from_hex(std::string_view hex64) {
        if (hex64.size() != 64) throw std::invalid_argument("Digest: hex must be 64 characters");
        Digest d;
        for (std::size_t i = 0; i < 64; ++i) {
            const int v = nibble(hex64[i]);
            if (i % 2 == 0)
                d.bytes_[i / 2] = static_cast<std::uint8_t>(v << 4);
            else
                d.bytes_[i / 2] |= static_cast<std::uint8_t>(v);
        }
        return d;
    }

    std::string hex() const {
        static const char* digits = "0123456789ABCDEF";
        std::string out;
        out.reserve(64);
        for (std::uint8_t b : bytes_) {
            out += digits[b >> 4];
            out += digits[b & 0x0F];
        }
        return out;
    }

    const std::array<std::uint8_t, 32>& bytes() const { return bytes_; }

    bool bit(std::size_t i) const {
        if (i >= 256) throw std::out_of_range("Digest: bit index out of range");
        return (bytes_[i / 8] >> (7 - i % 8)) & 1u;
    }

    std::size_t hamming(const Digest& other) const {
        std::size_t d = 0;
        for (std::size_t i = 0; i < 32; ++i)
            d += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(bytes_[i] ^ other.bytes_[i])));
        return d;
    }

    bool operator==(const Digest&) const = default;

private:
    Digest() = default;

    static int nibble(char c) {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw std::invalid_argument("Digest: bad hex character");
    }

    std::array<std::uint8_t, 32> bytes_{};
};

}  // namespace chaoshash
