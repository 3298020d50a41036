#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "state.hpp"
#include "strategy.hpp"

namespace chaoshash {

inline CellState negate_all(const CellState& s) {
    CellState out = s;
    for (std::size_t i = 0; i < out.size(); ++i) out.flip_bit(i);
    return out;
}

// A cell update rule f: B^N -> B^N. Only one component of the image is ever
// used per step, but the rule is stored whole so alternatives drop in.
class IterationFunction {
public:
    using Map = std::function<CellState(const CellState&)>;

    IterationFunction(std::string name, Map map) : name_(std::move(name)), map_(std::move(map)) {}

    CellState operator()(const CellState& s) const {
        CellState out = map_(s);
        if (out.size() != s.size())
            throw std::logic_error("IterationFunction: rule changed the cell count");
        return out;
    }

    const std::string& name() const { return name_; }

    // The built-in rule of the hash: every cell complemented.
    static IterationFunction negation() {
        return IterationFunction("negation", [](const CellState& s) { return negate_all(s); });
    }

    static IterationFunction identity() {
        return IterationFunction("identity", [](const CellState& s) { return s; });
    }

private:
    std::string name_;
    Map map_;
};

// A point of the phase space: the pending update schedule plus the state.
class PhasePoint {
public:
    PhasePoint(Strategy strategy, CellState state)
        : strategy_(std::move(strategy)), state_(std::move(state)) {
        if (static_cast<std::size_t>(strategy_.max_entry()) > state_.size())
            throw std::invalid_argument("PhasePoint: strategy entry exceeds cell count");
    }

    const Strategy& strategy() const { return strategy_; }
    const CellState& state() const { return state_; }

    bool operator==(const PhasePoint&) const = default;

private:
    Strategy strategy_;
    CellState state_;
};

// Recompute cell k (1-based) through f; every other cell keeps its value.
// Under the negation rule this flips exactly bit k-1.
inline CellState update_cell(const IterationFunction& f, int k, const CellState& state) {
    if (k < 1 || static_cast<std::size_t>(k) > state.size())
        throw std::out_of_range("update_cell: cell index outside [1;N]");
    const std::size_t i = static_cast<std::size_t>(k) - 1;
    CellState out = state;
    out.set_bit(i, f(state).bit(i));
    return out;
}

// One step of the phase-space map: update the cell named by the strategy
// head, then drop that head.
inline PhasePoint step(const IterationFunction& f, const PhasePoint& p) {
    return PhasePoint(p.strategy().shifted(), update_cell(f, p.strategy().head(), p.state()));
}

// The trajectory [p, G(p), ..., G^steps(p)]; steps+1 entries.
inline std::vector<PhasePoint> orbit(const IterationFunction& f, const PhasePoint& start,
                                     std::size_t steps) {
    std::vector<PhasePoint> out;
    out.reserve(steps + 1);
    out.push_back(start);
    for (std::size_t t = 0; t < steps; ++t) out.push_back(step(f, out.back()));
    return out;
}

// Per-cell flip parity of the first `steps` schedule terms. Under the
// negation rule the state after `steps` iterations equals the initial state
// xor this mask, which gives an independent route to any orbit state.
inline CellState parity_mask(const Strategy& s, std::size_t steps, SystemSize n) {
    CellState mask(n);
    for (std::size_t t = 0; t < steps; ++t) {
        const int k = s.at(t);
        if (k < 1 || static_cast<std::size_t>(k) > n.value())
            throw std::invalid_argument("parity_mask: strategy entry exceeds cell count");
        mask.flip_bit(static_cast<std::size_t>(k) - 1);
    }
    return mask;
}

}  // namespace chaoshash
