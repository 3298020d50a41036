#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dynamics.hpp"
#include "metric.hpp"
#include "pipeline.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "state.hpp"
#include "strategy.hpp"

namespace chaoshash {

inline CellState random_state(SplitMix64& rng, SystemSize n) {
    std::vector<bool> bits(n.value());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = rng.next_bool();
    return CellState(std::move(bits));
}

inline Strategy random_strategy(SplitMix64& rng, SystemSize n, std::size_t max_prefix = 4,
                                std::size_t max_period = 4) {
    if (max_period == 0) throw std::invalid_argument("random_strategy: need a nonempty block");
    const auto entry = [&]() { return static_cast<int>(1 + rng.next_below(n.value())); };
    std::vector<int> prefix(rng.next_below(max_prefix + 1));
    for (int& v : prefix) v = entry();
    std::vector<int> period(1 + rng.next_below(max_period));
    for (int& v : period) v = entry();
    return Strategy(std::move(prefix), std::move(period));
}

inline PhasePoint random_point(SplitMix64& rng, SystemSize n, std::size_t max_prefix = 4,
                               std::size_t max_period = 4) {
    Strategy s = random_strategy(rng, n, max_prefix, max_period);
    CellState e = random_state(rng, n);
    return PhasePoint(std::move(s), std::move(e));
}

// Continuity, checked constructively: two points with the same state whose
// schedules agree on m terms keep equal states for m steps, the surviving
// schedule agreement shrinks by one per step, and the schedule part of the
// distance grows by exactly a factor of 10 per step.
inline bool continuity_prefix_check(const IterationFunction& f, const PhasePoint& x,
                                    const PhasePoint& y, std::size_t m) {
    if (x.state() != y.state())
        throw std::invalid_argument("continuity_prefix_check: states must be equal");
    const auto agreement = prefix_agreement(x.strategy(), y.strategy());
    if (agreement && *agreement < m)
        throw std::invalid_argument("continuity_prefix_check: schedules must agree on m terms");

    const SystemSize n(x.state().size());
    const Rational d0 = strategy_distance(x.strategy(), y.strategy(), n);
    PhasePoint px = x, py = y;
    for (std::size_t t = 1; t <= m; ++t) {
        px = step(f, px);
        py = step(f, py);
        if (px.state() != py.state()) return false;
        const auto a = prefix_agreement(px.strategy(), py.strategy());
        if (a && *a + t < m) return false;
        if (strategy_distance(px.strategy(), py.strategy(), n) != Rational(pow10(t)) * d0)
            return false;
    }
    return true;
}

struct PeriodicPointResult {
    PhasePoint point;
    std::size_t period_steps;
};

// A periodic point within epsilon of x: repeat the first k schedule terms of
// x twice as a pure block, keep the state. Each block pass flips every
// scheduled cell twice, so 2k steps return the point exactly; sharing k
// terms with x puts it within 10^-k < epsilon.
inline PeriodicPointResult periodic_point_near(const PhasePoint& x, const Rational& epsilon) {
    if (epsilon <= 0) throw std::invalid_argument("periodic_point_near: epsilon must be positive");
    std::size_t k = 1;
    while (inv_pow10(k) >= epsilon) ++k;
    std::vector<int> block;
    block.reserve(2 * k);
    for (std::size_t t = 0; t < k; ++t) block.push_back(x.strategy().at(t));
    block.insert(block.end(), block.begin(), block.begin() + static_cast<std::ptrdiff_t>(k));
    return PeriodicPointResult{PhasePoint(Strategy::pure(std::move(block)), x.state()),
                               2 * k};
}

struct TransitResult {
    PhasePoint point;
    std::size_t steps;
};

// A point that matches `from` on its first `agreement_terms` schedule terms
// and lands exactly on `to` after finitely many steps: follow `from` for the
// agreed stretch, apply one correcting update per cell that still differs
// from the target state, then adopt the target's schedule outright.
inline TransitResult transit_point(const PhasePoint& from, const PhasePoint& to,
                                   std::size_t agreement_terms = 6) {
    if (from.state().size() != to.state().size())
        throw std::invalid_argument("transit_point: differing cell counts");
    const SystemSize n(from.state().size());

    std::vector<int> schedule;
    for (std::size_t t = 0; t < agreement_terms; ++t) schedule.push_back(from.strategy().at(t));
    const CellState drifted = from.state() ^ parity_mask(from.strategy(), agreement_terms, n);
    for (std::size_t i = 0; i < n.value(); ++i)
        if (drifted.bit(i) != to.state().bit(i)) schedule.push_back(static_cast<int>(i + 1));

    const std::size_t steps = schedule.size();
    schedule.insert(schedule.end(), to.strategy().prefix().begin(), to.strategy().prefix().end());
    return TransitResult{
        PhasePoint(Strategy(std::move(schedule), to.strategy().period()), from.state()), steps};
}

struct SensitivityReport {
    SystemSize n;
    Rational delta;
    PhasePoint witness;
    std::size_t separation_step;
    std::size_t achieved_separation;
};

// A witness within delta of x whose orbit separates from x's in every cell
// at once. Copy x's schedule for k terms (10^-k < delta), then schedule a
// window of n + window_pad updates whose per-cell flip parity is the exact
// complement of x's over the same window; both states then differ in all n
// cells at the step right after the window.
//
// Single-cell updates change each state's parity by one per step, so the
// cell-count distance between two orbits launched from the same state stays
// even forever; all-n separation therefore requires an even n, and odd n is
// rejected.
inline SensitivityReport sensitivity_witness(const PhasePoint& x, const Rational& delta,
                                             std::size_t window_pad = 0) {
    if (delta <= 0) throw std::invalid_argument("sensitivity_witness: delta must be positive");
    const std::size_t n = x.state().size();
    if (n % 2 != 0)
        throw std::invalid_argument(
            "sensitivity_witness: all-cell separation is impossible for odd cell counts");

    std::size_t k = 1;
    while (inv_pow10(k) >= delta) ++k;
    const std::size_t window = n + window_pad;

    std::vector<int> parity(n, 0);
    for (std::size_t t = k; t < k + window; ++t) parity[x.strategy().at(t) - 1] ^= 1;

    std::vector<int> schedule;
    schedule.reserve(k + window);
    for (std::size_t t = 0; t < k; ++t) schedule.push_back(x.strategy().at(t));
    std::size_t placed = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (parity[i] == 0) {
            schedule.push_back(static_cast<int>(i + 1));
            ++placed;
        }
    for (; placed < window; placed += 2) {
        schedule.push_back(1);
        schedule.push_back(1);
    }

    PhasePoint witness(Strategy(std::move(schedule), {1}), x.state());
    const ExactDistance d = distance(x, witness);
    if (d.integer_part != 0 || d.fractional_part >= delta)
        throw std::logic_error("sensitivity_witness: witness left the delta ball");

    const SystemSize size(n);
    const CellState sx = x.state() ^ parity_mask(x.strategy(), k + window, size);
    const CellState sy = witness.state() ^ parity_mask(witness.strategy(), k + window, size);
    return SensitivityReport{size, delta, std::move(witness), k + window,
                             state_distance(sx, sy)};
}

struct SensitivityExperiment {
    SystemSize n;
    Rational delta;
    std::size_t points;
    std::uint64_t seed;
    std::size_t failures;
    std::vector<SensitivityReport> reports;
};

inline SensitivityExperiment run_sensitivity_experiment(SystemSize n, const Rational& delta,
                                                        std::size_t points, std::uint64_t seed) {
    SensitivityExperiment out{n, delta, points, seed, 0, {}};
    out.reports.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        SplitMix64 rng(SplitMix64::derive(seed, i));
        const PhasePoint x = random_point(rng, n);
        SensitivityReport report = sensitivity_witness(x, delta);
        if (report.achieved_separation != n.value()) ++out.failures;
        out.reports.push_back(std::move(report));
    }
    return out;
}

struct ExpansivityReport {
    SystemSize n;
    std::size_t pairs_checked;
    Rational min_max_separation;
    std::size_t horizon;
};

struct ExpansivityScan {
    ExpansivityReport report;
    std::size_t separation_failures;
    std::size_t sharp_pairs;
    std::size_t sharp_failures;

    bool passed() const {
        return separation_failures == 0 && sharp_failures == 0 &&
               report.min_max_separation >= 1;
    }
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::size_t pairs, std::size_t budget)
        : std::runtime_error("expansivity_scan: " + std::to_string(pairs) +
                             " candidate pairs exceed the budget of " + std::to_string(budget)),
          pairs_(pairs) {}
    std::size_t pair_count() const { return pairs_; }

private:
    std::size_t pairs_;
};

// Exhaustive check that every distinct pair of points separates to distance
// at least 1 within the horizon, under the negation rule. Candidate points
// are all states crossed with all schedules of prefix length up to
// max_prefix and block length up to max_period. Also verifies the sharper
// fact behind the constant: pairs with equal states reach a state distance
// of exactly 2 one step after their schedules first disagree.
inline ExpansivityScan expansivity_scan(SystemSize n, std::size_t max_prefix,
                                        std::size_t max_period, std::size_t horizon,
                                        std::size_t budget = 10000000) {
    if (n.value() > 3)
        throw std::invalid_argument("expansivity_scan: exhaustive enumeration is for n <= 3");
    if (max_period == 0) throw std::invalid_argument("expansivity_scan: need a nonempty block");

    const auto enumerate_lists = [&](std::size_t min_len, std::size_t max_len) {
        std::vector<std::vector<int>> out;
        for (std::size_t len = min_len; len <= max_len; ++len) {
            std::vector<int> current(len, 1);
            while (true) {
                out.push_back(current);
                std::size_t i = len;
                while (i > 0 && current[i - 1] == static_cast<int>(n.value())) {
                    current[i - 1] = 1;
                    --i;
                }
                if (i == 0) break;
                ++current[i - 1];
            }
        }
        return out;
    };
    const std::vector<std::vector<int>> prefixes = enumerate_lists(0, max_prefix);
    const std::vector<std::vector<int>> periods = enumerate_lists(1, max_period);

    std::vector<Strategy> reps;
    reps.reserve(prefixes.size() * periods.size());
    for (const auto& p : prefixes)
        for (const auto& q : periods) reps.emplace_back(p, q);

    const std::size_t states = std::size_t{1} << n.value();
    const std::size_t combos = reps.size() * states;
    const std::size_t predicted = combos * (combos - 1) / 2;
    if (predicted > budget) throw BudgetExceeded(predicted, budget);

    // Per representation: its shifts and the flip-parity mask after t steps.
    std::vector<std::vector<Strategy>> shifts(reps.size());
    std::vector<std::vector<std::uint32_t>> masks(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        shifts[i].reserve(horizon + 1);
        shifts[i].push_back(reps[i]);
        for (std::size_t t = 0; t < horizon; ++t) shifts[i].push_back(shifts[i].back().shifted());
        masks[i].resize(horizon + 1, 0);
        for (std::size_t t = 1; t <= horizon; ++t)
            masks[i][t] = masks[i][t - 1] ^ (std::uint32_t{1} << (reps[i].at(t - 1) - 1));
    }

    ExpansivityScan scan{{n, 0, Rational(std::size_t{1} << 20), horizon}, 0, 0, 0};
    std::vector<Rational> ds(horizon + 1);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i; j < reps.size(); ++j) {
            for (std::size_t t = 0; t <= horizon; ++t)
                ds[t] = strategy_distance(shifts[i][t], shifts[j][t], n);
            const auto diff_at = first_difference(reps[i], reps[j]);
            if (diff_at) {
                ++scan.sharp_pairs;
                if (*diff_at + 1 <= horizon &&
                    std::popcount(masks[i][*diff_at + 1] ^ masks[j][*diff_at + 1]) != 2)
                    ++scan.sharp_failures;
            }
            for (std::size_t e1 = 0; e1 < states; ++e1) {
                const std::size_t e2_begin = (i == j) ? e1 + 1 : 0;
                for (std::size_t e2 = e2_begin; e2 < states; ++e2) {
                    if (!diff_at && e1 == e2) continue;
                    std::size_t best = 0;
                    std::size_t best_t = 0;
                    for (std::size_t t = 0; t <= horizon; ++t) {
                        const auto d = static_cast<std::size_t>(std::popcount(
                            static_cast<std::uint32_t>(e1 ^ e2) ^ masks[i][t] ^ masks[j][t]));
                        if (d > best || (d == best && ds[t] > ds[best_t])) {
                            best = d;
                            best_t = t;
                        }
                    }
                    if (best == 0) ++scan.separation_failures;
                    const Rational pair_max = Rational(best) + ds[best_t];
                    if (pair_max < scan.report.min_max_separation)
                        scan.report.min_max_separation = pair_max;
                    ++scan.report.pairs_checked;
                }
            }
        }
    }
    return scan;
}

struct NonExpansivityReport {
    PhasePoint first;
    PhasePoint second;
    std::size_t steps_checked;
    bool distance_one_throughout;
};

// Two points sharing one schedule but one differing cell: under the negation
// rule their distance is exactly 1 at every step, so no uniform separation
// bound above 1 can ever be met.
inline NonExpansivityReport non_expansivity_witness(SystemSize n, const Rational& bound,
                                                    std::size_t horizon) {
    if (bound <= 1)
        throw std::invalid_argument("non_expansivity_witness: the defeated bound must exceed 1");
    std::vector<int> cycle(n.value());
    std::iota(cycle.begin(), cycle.end(), 1);
    const Strategy schedule = Strategy::pure(std::move(cycle));
    CellState flipped(n);
    flipped.flip_bit(0);
    const PhasePoint a(schedule, CellState(n));
    const PhasePoint b(schedule, std::move(flipped));

    const IterationFunction f = IterationFunction::negation();
    PhasePoint pa = a, pb = b;
    bool ok = true;
    for (std::size_t t = 0; t <= horizon; ++t) {
        const ExactDistance d = distance(pa, pb);
        if (d.integer_part != 1 || d.fractional_part != 0) {
            ok = false;
            break;
        }
        if (t < horizon) {
            pa = step(f, pa);
            pb = step(f, pb);
        }
    }
    return NonExpansivityReport{a, b, horizon, ok};
}

struct AvalancheReport {
    std::size_t trials;
    std::size_t message_bits;
    std::uint64_t seed;
    Rational mean;
    Rational variance;
    std::size_t min;
    std::size_t max;
    std::array<std::uint64_t, 257> histogram;
};

// Digest distance under single-bit input flips. Each trial draws a printable
// message, flips one uniformly chosen bit of its 7-bit encoding, hashes both
// forms, and records the Hamming distance between the digests.
inline AvalancheReport avalanche_experiment(std::size_t trials, std::size_t message_bytes,
                                            std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("avalanche_experiment: need at least one trial");
    if (message_bytes == 0)
        throw std::invalid_argument("avalanche_experiment: need at least one message byte");

    AvalancheReport report{trials, 7 * message_bytes, seed, Rational(0), Rational(0), 256, 0, {}};
    report.histogram.fill(0);
    BigInt sum = 0, sum_sq = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(SplitMix64::derive(seed, trial));
        std::string message(message_bytes, '\0');
        for (char& c : message) c = static_cast<char>(32 + rng.next_below(95));
        BitString encoded = encode_message(message, EncodingMode::ascii7);
        const Digest base = hash_encoded(encoded);
        encoded.flip_bit(rng.next_below(encoded.size()));
        const std::size_t d = base.hamming(hash_encoded(encoded));
        ++report.histogram[d];
        sum += d;
        sum_sq += BigInt(d) * d;
        report.min = std::min(report.min, d);
        report.max = std::max(report.max, d);
    }
    report.mean = Rational(sum, trials);
    report.variance = Rational(sum_sq, trials) - report.mean * report.mean;
    return report;
}

struct ContinuityExperiment {
    SystemSize n;
    std::size_t pairs;
    std::size_t m;
    std::uint64_t seed;
    std::size_t failures;
};

inline ContinuityExperiment run_continuity_experiment(SystemSize n, std::size_t pairs,
                                                      std::size_t m, std::uint64_t seed) {
    const IterationFunction f = IterationFunction::negation();
    ContinuityExperiment out{n, pairs, m, seed, 0};
    for (std::size_t i = 0; i < pairs; ++i) {
        SplitMix64 rng(SplitMix64::derive(seed, i));
        const PhasePoint x = random_point(rng, n);
        std::vector<int> agreed;
        agreed.reserve(m);
        for (std::size_t t = 0; t < m; ++t) agreed.push_back(x.strategy().at(t));
        const Strategy tail = random_strategy(rng, n, 3, 3);
        agreed.insert(agreed.end(), tail.prefix().begin(), tail.prefix().end());
        const PhasePoint y(Strategy(std::move(agreed), tail.period()), x.state());
        if (!continuity_prefix_check(f, x, y, m)) ++out.failures;
    }
    return out;
}

}  // namespace chaoshash
