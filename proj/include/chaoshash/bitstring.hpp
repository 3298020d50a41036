#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chaoshash {

// Finite bit sequence, indexed 0-based from the leftmost bit.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<bool> bits) : bits_(std::move(bits)) {}

    static BitString from_string(std::string_view zeros_ones) {
        std::vector<bool> bits;
        bits.reserve(zeros_ones.size());
        for (char c : zeros_ones) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("BitString: only 0 and 1 allowed");
            bits.push_back(c == '1');
        }
        return BitString(std::move(bits));
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    bool bit(std::size_t i) const {
        check(i);
        return bits_[i];
    }

    void flip_bit(std::size_t i) {
        check(i);
        bits_[i] = !bits_[i];
    }

    void push_back(bool b) { bits_.push_back(b); }

    void append(const BitString& other) {
        bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    }

    // Append `width` bits of `value`, most significant bit first.
    void append_code(unsigned value, unsigned width) {
        if (width < 1 || width > 32) throw std::invalid_argument("BitString: bad code width");
        if (width < 32 && (value >> width) != 0)
            throw std::invalid_argument("BitString: value does not fit the code width");
        for (unsigned i = width; i-- > 0;) bits_.push_back((value >> i) & 1u);
    }

    BitString rotated_left(std::size_t amount) const {
        if (bits_.empty()) return *this;
        amount %= bits_.size();
        std::vector<bool> out;
        out.reserve(bits_.size());
        out.insert(out.end(), bits_.begin() + static_cast<std::ptrdiff_t>(amount), bits_.end());
        out.insert(out.end(), bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(amount));
        return BitString(std::move(out));
    }

    // Value of bits [8*index, 8*index+8), most significant bit first.
    int octet_value(std::size_t index) const {
        if (8 * index + 8 > bits_.size()) throw std::out_of_range("BitString: octet out of range");
        int v = 0;
        for (std::size_t i = 0; i < 8; ++i) v = (v << 1) | static_cast<int>(bits_[8 * index + i]);
        return v;
    }

    std::string to_string() const {
        std::string out;
        out.reserve(bits_.size());
        for (bool b : bits_) out += b ? '1' : '0';
        return out;
    }

    bool operator==(const BitString&) const = default;

private:
    void check(std::size_t i) const {
        if (i >= bits_.size()) throw std::out_of_range("BitString: bit index out of range");
    }

    std::vector<bool> bits_;
};

}  // namespace chaoshash
