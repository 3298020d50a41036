#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bitstring.hpp"
#include "digest.hpp"
#include "state.hpp"

namespace chaoshash {

enum class EncodingMode { ascii7, bytes };

class EncodingError : public std::runtime_error {
public:
    EncodingError(std::size_t index, const std::string& what)
        : std::runtime_error(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

// Octet values read off the extended block under its seven rotations.
using IntermediateSequence = std::vector<int>;

// Bit positions of the final state to flip, each in [0,255].
using HashStrategy = std::vector<int>;

// ascii7 packs each byte as a 7-bit code, most significant bit first, and
// rejects bytes >= 128; bytes packs all eight bits.
inline BitString encode_message(std::string_view message, EncodingMode mode) {
    BitString out;
    for (std::size_t i = 0; i < message.size(); ++i) {
        const unsigned byte = static_cast<unsigned char>(message[i]);
        if (mode == EncodingMode::ascii7) {
            if (byte >= 128)
                throw EncodingError(i, "encode_message: byte " + std::to_string(byte) +
                                           " at index " + std::to_string(i) +
                                           " is outside 7-bit ASCII");
            out.append_code(byte, 7);
        } else {
            out.append_code(byte, 8);
        }
    }
    return out;
}

// Append one 1, then the minimal binary form (most significant bit first) of
// the length the string has at that point, then one more 1.
inline BitString pad_with_length(const BitString& s) {
    BitString out = s;
    out.push_back(true);
    std::size_t len = out.size();
    std::vector<bool> digits;
    while (len > 0) {
        digits.push_back(len & 1u);
        len >>= 1;
    }
    for (std::size_t i = digits.size(); i-- > 0;) out.push_back(digits[i]);
    out.push_back(true);
    return out;
}

// s followed by its own reflection without the final bit; |result| = 2|s|-1.
inline BitString mirror_extend(const BitString& s) {
    if (s.empty()) throw std::invalid_argument("mirror_extend: empty bit string");
    BitString out = s;
    for (std::size_t i = s.size() - 1; i > 0; --i) out.push_back(s.bit(i - 1));
    return out;
}

// Cyclic extension to the smallest positive multiple of 512 bits.
inline BitString extend_to_block_multiple(const BitString& t) {
    if (t.empty()) throw std::invalid_argument("extend_to_block_multiple: empty bit string");
    const std::size_t target = ((t.size() + 511) / 512) * 512;
    BitString out;
    for (std::size_t i = 0; i < target; ++i) out.push_back(t.bit(i % t.size()));
    return out;
}

// Xor of the consecutive 256-bit blocks.
inline CellState fold_to_state(const BitString& d) {
    if (d.empty() || d.size() % 256 != 0)
        throw std::invalid_argument("fold_to_state: length must be a positive multiple of 256");
    std::vector<bool> acc(256, false);
    for (std::size_t i = 0; i < d.size(); ++i) acc[i % 256] = acc[i % 256] != d.bit(i);
    return CellState(std::move(acc));
}

// Octet values of the block under rotations by 0 through 6 bits, each
// rotation read in full before the next; 7 * |d|/8 values.
inline IntermediateSequence build_intermediate_sequence(const BitString& d) {
    if (d.empty() || d.size() % 512 != 0)
        throw std::invalid_argument(
            "build_intermediate_sequence: length must be a positive multiple of 512");
    IntermediateSequence u;
    u.reserve(7 * d.size() / 8);
    for (std::size_t pass = 0; pass < 7; ++pass) {
        const BitString rotated = d.rotated_left(pass);
        for (std::size_t i = 0; i < rotated.size() / 8; ++i) u.push_back(rotated.octet_value(i));
    }
    return u;
}

// S[0] = u[0]; S[i] = (u[i] + 2*S[i-1] + i) mod 256.
inline HashStrategy build_strategy(const IntermediateSequence& u) {
    if (u.empty()) throw std::invalid_argument("build_strategy: empty intermediate sequence");
    HashStrategy s;
    s.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0 || u[i] > 255)
            throw std::out_of_range("build_strategy: octet value outside [0,255]");
        if (i == 0)
            s.push_back(u[0]);
        else
            s.push_back((u[i] + 2 * s.back() + static_cast<int>(i % 256)) % 256);
    }
    return s;
}

// Flip bit s[k] of the folded state for every k, in order.
inline Digest compute_digest(const CellState& e, const HashStrategy& s) {
    if (e.size() != 256) throw std::invalid_argument("compute_digest: state must have 256 cells");
    CellState bits = e;
    for (int pos : s) {
        if (pos < 0 || pos > 255)
            throw std::out_of_range("compute_digest: flip position outside [0,255]");
        bits.flip_bit(static_cast<std::size_t>(pos));
    }
    return Digest(bits);
}

// Everything after encoding; the avalanche experiment enters here to flip
// single bits of the encoded form.
inline Digest hash_encoded(const BitString& encoded) {
    const BitString extended = extend_to_block_multiple(mirror_extend(pad_with_length(encoded)));
    const CellState e = fold_to_state(extended);
    return compute_digest(e, build_strategy(build_intermediate_sequence(extended)));
}

inline Digest hash(std::string_view message, EncodingMode mode = EncodingMode::ascii7) {
    return hash_encoded(encode_message(message, mode));
}

}  // namespace chaoshash
