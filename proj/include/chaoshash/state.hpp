#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chaoshash {

// Number of cells in a system. At least 1; the hash side always uses 256.
class SystemSize {
public:
    explicit SystemSize(std::size_t n) : n_(n) {
        if (n_ == 0) throw std::invalid_argument("SystemSize: cell count must be positive");
    }
    std::size_t value() const { return n_; }
    bool operator==(const SystemSize&) const = default;

private:
    std::size_t n_;
};

// Boolean state of every cell at one instant. Bits are 0-based from the left;
// cell k of [1;N] lives at bit k-1.
class CellState {
public:
    explicit CellState(SystemSize n) : bits_(n.value(), false) {}

    explicit CellState(std::vector<bool> bits) : bits_(std::move(bits)) {
        if (bits_.empty()) throw std::invalid_argument("CellState: at least one cell required");
    }

    static CellState from_string(std::string_view s) {
        std::vector<bool> bits;
        bits.reserve(s.size());
        for (char c : s) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("CellState: bit string may only contain 0 and 1");
            bits.push_back(c == '1');
        }
        return CellState(std::move(bits));
    }

    std::size_t size() const { return bits_.size(); }

    bool bit(std::size_t i) const {
        check(i);
        return bits_[i];
    }

    void set_bit(std::size_t i, bool v) {
        check(i);
        bits_[i] = v;
    }

    void flip_bit(std::size_t i) {
        check(i);
        bits_[i] = !bits_[i];
    }

    std::size_t count_ones() const {
        std::size_t c = 0;
        for (bool b : bits_) c += b;
        return c;
    }

    std::string to_string() const {
        std::string out;
        out.reserve(bits_.size());
        for (bool b : bits_) out += b ? '1' : '0';
        return out;
    }

    bool operator==(const CellState&) const = default;

private:
    void check(std::size_t i) const {
        if (i >= bits_.size()) throw std::out_of_range("CellState: bit index out of range");
    }

    std::vector<bool> bits_;
};

inline CellState operator^(const CellState& a, const CellState& b) {
    if (a.size() != b.size()) throw std::invalid_argument("CellState: xor needs equal lengths");
    CellState out = a;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b.bit(i)) out.flip_bit(i);
    return out;
}

}  // namespace chaoshash
