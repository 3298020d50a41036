#pragma once

#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "dynamics.hpp"
#include "rational.hpp"
#include "state.hpp"
#include "strategy.hpp"

namespace chaoshash {

// Hamming distance between equal-length states.
inline std::size_t state_distance(const CellState& a, const CellState& b) {
    if (a.size() != b.size()) throw std::invalid_argument("state_distance: differing cell counts");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a.bit(i) != b.bit(i);
    return d;
}

// Exact value of (9/N) * sum_{k>=1} |S[k-1] - T[k-1]| / 10^k. The term
// sequence is eventually periodic, so the tail collapses to a geometric
// series and the whole sum stays rational:
//   sum = head/10^P + block / (10^P * (10^L - 1))
// with P = max prefix length, L = lcm of block lengths, head and block the
// Horner sums of the differences over [0,P) and [P,P+L).
// Always < 1: each term is at most (N-1)/10^k, so the sum is at most
// (9/N) * (N-1)/9 = (N-1)/N.
inline Rational strategy_distance(const Strategy& s, const Strategy& t, SystemSize n) {
    if (static_cast<std::size_t>(s.max_entry()) > n.value() ||
        static_cast<std::size_t>(t.max_entry()) > n.value())
        throw std::invalid_argument("strategy_distance: strategy entry exceeds cell count");
    if (s == t) return Rational(0);

    const std::size_t head_len = std::max(s.prefix().size(), t.prefix().size());
    const std::size_t cycle = std::lcm(s.period().size(), t.period().size());
    BigInt head = 0;
    for (std::size_t i = 0; i < head_len; ++i) head = head * 10 + std::abs(s.at(i) - t.at(i));
    BigInt block = 0;
    for (std::size_t i = head_len; i < head_len + cycle; ++i)
        block = block * 10 + std::abs(s.at(i) - t.at(i));

    const BigInt scale = pow10(head_len);
    const Rational sum = Rational(head, scale) + Rational(block, scale * (pow10(cycle) - 1));
    return Rational(9, n.value()) * sum;
}

// Distance between two phase points, kept in the split form the metric
// guarantees: the integer part counts differing cells, the fractional part
// (always < 1) compares the schedules.
struct ExactDistance {
    std::size_t integer_part;
    Rational fractional_part;

    Rational total() const { return Rational(integer_part) + fractional_part; }
    std::string decimal(std::size_t digits = 12) const { return to_decimal_string(total(), digits); }
    std::string fraction() const { return to_fraction_string(total()); }
};

inline ExactDistance distance(const PhasePoint& x, const PhasePoint& y) {
    if (x.state().size() != y.state().size())
        throw std::invalid_argument("distance: differing cell counts");
    const SystemSize n(x.state().size());
    return ExactDistance{state_distance(x.state(), y.state()),
                         strategy_distance(x.strategy(), y.strategy(), n)};
}

// Length of the longest common prefix of the two schedules; nullopt when
// they are the same sequence (infinite agreement). Agreement of m terms
// bounds the schedule part of the metric by 10^-m.
inline std::optional<std::size_t> prefix_agreement(const Strategy& s, const Strategy& t) {
    return first_difference(s, t);
}

}  // namespace chaoshash
