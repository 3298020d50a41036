#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chaoshash {

// Eventually periodic update schedule over [1;N]: a finite prefix followed by
// an infinitely repeated nonempty block. Entries are 1-based cell indices.
//
// Literal grammar (CLI and vector files):
//   STRATEGY := INTLIST [ "(" INTLIST ")" ]
// A bare list is purely periodic ("1,2" repeats 1,2 forever); with
// parentheses the first list is the prefix, the parenthesised list the
// repeating block ("1,2(2,1)" starts 1,2 then repeats 2,1 forever).
class Strategy {
public:
    Strategy(std::vector<int> prefix, std::vector<int> period)
        : prefix_(std::move(prefix)), period_(std::move(period)) {
        if (period_.empty()) throw std::invalid_argument("Strategy: repeating block may not be empty");
        for (int v : prefix_) check_entry(v);
        for (int v : period_) check_entry(v);
    }

    static Strategy pure(std::vector<int> period) { return Strategy({}, std::move(period)); }

    static Strategy parse(std::string_view literal);
    std::string to_literal() const;

    int at(std::size_t t) const {
        if (t < prefix_.size()) return prefix_[t];
        return period_[(t - prefix_.size()) % period_.size()];
    }

    int head() const { return at(0); }

    // Drop the first term. A purely periodic schedule rotates its block.
    Strategy shifted() const {
        if (!prefix_.empty())
            return Strategy(std::vector<int>(prefix_.begin() + 1, prefix_.end()), period_);
        std::vector<int> rotated(period_.begin() + 1, period_.end());
        rotated.push_back(period_.front());
        return Strategy({}, std::move(rotated));
    }

    // Canonical representation: the block shrinks to its primitive root, then
    // prefix entries that restate the block's tail fold into a rotation.
    // Two strategies denote the same sequence iff they normalize identically.
    Strategy normalized() const {
        std::vector<int> per = period_;
        for (std::size_t d = 1; d <= per.size(); ++d) {
            if (per.size() % d != 0) continue;
            bool root = true;
            for (std::size_t i = d; i < per.size() && root; ++i) root = per[i] == per[i - d];
            if (root) {
                per.resize(d);
                break;
            }
        }
        std::vector<int> pre = prefix_;
        while (!pre.empty() && pre.back() == per.back()) {
            pre.pop_back();
            std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
        }
        return Strategy(std::move(pre), std::move(per));
    }

    const std::vector<int>& prefix() const { return prefix_; }
    const std::vector<int>& period() const { return period_; }

    int max_entry() const {
        int m = 0;
        for (int v : prefix_) m = std::max(m, v);
        for (int v : period_) m = std::max(m, v);
        return m;
    }

    // Representation equality; use same_sequence for sequence equality.
    bool operator==(const Strategy&) const = default;

private:
    static void check_entry(int v) {
        if (v < 1) throw std::invalid_argument("Strategy: entries are 1-based cell indices");
    }

    std::vector<int> prefix_;
    std::vector<int> period_;
};

inline Strategy Strategy::parse(std::string_view literal) {
    auto fail = [&]() {
        throw std::invalid_argument("Strategy: bad literal '" + std::string(literal) + "'");
    };

    auto parse_list = [&](std::string_view text) {
        std::vector<int> out;
        std::size_t pos = 0;
        while (true) {
            while (pos < text.size() && text[pos] == ' ') ++pos;
            const std::size_t start = pos;
            int value = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                value = value * 10 + (text[pos] - '0');
                if (value > (1 << 20)) fail();
                ++pos;
            }
            if (pos == start) fail();
            out.push_back(value);
            while (pos < text.size() && text[pos] == ' ') ++pos;
            if (pos == text.size()) break;
            if (text[pos] != ',') fail();
            ++pos;
        }
        return out;
    };

    std::size_t begin = 0, end = literal.size();
    while (begin < end && literal[begin] == ' ') ++begin;
    while (end > begin && literal[end - 1] == ' ') --end;
    const std::string_view text = literal.substr(begin, end - begin);
    if (text.empty()) fail();

    const std::size_t open = text.find('(');
    if (open == std::string_view::npos) return Strategy::pure(parse_list(text));
    if (open == 0 || text.back() != ')') fail();
    const std::string_view block = text.substr(open + 1, text.size() - open - 2);
    if (block.find('(') != std::string_view::npos || block.empty()) fail();
    return Strategy(parse_list(text.substr(0, open)), parse_list(block));
}

inline std::string Strategy::to_literal() const {
    auto join = [](const std::vector<int>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(v[i]);
        }
        return out;
    };
    if (prefix_.empty()) return join(period_);
    return join(prefix_) + "(" + join(period_) + ")";
}

// Index of the first term where the two sequences differ, or nullopt when
// they denote the same sequence. Eventually periodic sequences that agree on
// max(prefix lengths) + lcm(block lengths) terms agree everywhere.
inline std::optional<std::size_t> first_difference(const Strategy& a, const Strategy& b) {
    if (a == b) return std::nullopt;
    const std::size_t pre = std::max(a.prefix().size(), b.prefix().size());
    const std::size_t cycle = std::lcm(a.period().size(), b.period().size());
    for (std::size_t t = 0; t < pre + cycle; ++t)
        if (a.at(t) != b.at(t)) return t;
    return std::nullopt;
}

inline bool same_sequence(const Strategy& a, const Strategy& b) {
    return !first_difference(a, b).has_value();
}

}  // namespace chaoshash
