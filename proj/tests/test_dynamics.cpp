#include <chaoshash/dynamics.hpp>
#include <chaoshash/rng.hpp>

#include <gtest/gtest.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

using namespace chaoshash;

namespace {

Strategy random_strategy(SplitMix64& rng, std::size_t n) {
    const auto entry = [&]() { return static_cast<int>(1 + rng.next_below(n)); };
    std::vector<int> prefix(rng.next_below(4));
    for (int& v : prefix) v = entry();
    std::vector<int> period(1 + rng.next_below(4));
    for (int& v : period) v = entry();
    return Strategy(std::move(prefix), std::move(period));
}

CellState random_state(SplitMix64& rng, std::size_t n) {
    std::vector<bool> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = rng.next_bool();
    return CellState(std::move(bits));
}

std::size_t differing_cells(const CellState& a, const CellState& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a.bit(i) != b.bit(i);
    return d;
}

}  // namespace

TEST(NegateAll, FlipsEveryCell) {
    EXPECT_EQ(negate_all(CellState::from_string("00")).to_string(), "11");
    EXPECT_EQ(negate_all(CellState::from_string("101")).to_string(), "010");
}

TEST(NegateAll, IsAnInvolution) {
    SplitMix64 rng(5);
    for (int round = 0; round < 50; ++round) {
        const CellState s = random_state(rng, 1 + rng.next_below(64));
        EXPECT_EQ(negate_all(negate_all(s)), s);
    }
}

TEST(UpdateCell, NegationFlipsExactlyOneCell) {
    const IterationFunction f = IterationFunction::negation();
    EXPECT_EQ(update_cell(f, 1, CellState::from_string("00")).to_string(), "10");
    EXPECT_EQ(update_cell(f, 2, CellState::from_string("11")).to_string(), "10");
    EXPECT_EQ(update_cell(f, 3, CellState::from_string("000")).to_string(), "001");
}

TEST(UpdateCell, IdentityChangesNothing) {
    const IterationFunction f = IterationFunction::identity();
    const CellState s = CellState::from_string("0110");
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(update_cell(f, k, s), s);
}

TEST(UpdateCell, RejectsOutOfRangeCells) {
    const IterationFunction f = IterationFunction::negation();
    const CellState s = CellState::from_string("00");
    EXPECT_THROW(update_cell(f, 0, s), std::out_of_range);
    EXPECT_THROW(update_cell(f, 3, s), std::out_of_range);
    EXPECT_THROW(update_cell(f, -1, s), std::out_of_range);
}

TEST(IterationFunction, ReportsNameAndGuardsShape) {
    EXPECT_EQ(IterationFunction::negation().name(), "negation");
    EXPECT_EQ(IterationFunction::identity().name(), "identity");
    const IterationFunction broken("broken", [](const CellState&) {
        return CellState::from_string("000");
    });
    EXPECT_THROW(broken(CellState::from_string("00")), std::logic_error);
}

TEST(PhasePoint, RejectsStrategyBeyondCellCount) {
    EXPECT_THROW(PhasePoint(Strategy::pure({3}), CellState::from_string("00")),
                 std::invalid_argument);
    EXPECT_NO_THROW(PhasePoint(Strategy::pure({2}), CellState::from_string("00")));
}

TEST(Step, UpdatesHeadCellAndShifts) {
    const IterationFunction f = IterationFunction::negation();
    const PhasePoint p(Strategy::pure({1, 2}), CellState::from_string("00"));
    const PhasePoint one = step(f, p);
    EXPECT_EQ(one.state().to_string(), "10");
    EXPECT_EQ(one.strategy(), Strategy::pure({2, 1}));
    const PhasePoint two = step(f, one);
    EXPECT_EQ(two.state().to_string(), "11");
}

TEST(Step, ConsumesPrefixBeforeBlock) {
    const IterationFunction f = IterationFunction::negation();
    const PhasePoint p(Strategy({2}, {1}), CellState::from_string("00"));
    const PhasePoint next = step(f, p);
    EXPECT_EQ(next.state().to_string(), "01");
    EXPECT_EQ(next.strategy(), Strategy::pure({1}));
}

TEST(Orbit, ZeroStepsIsJustTheStart) {
    const PhasePoint p(Strategy::pure({1}), CellState::from_string("0"));
    const auto traj = orbit(IterationFunction::negation(), p, 0);
    ASSERT_EQ(traj.size(), 1u);
    EXPECT_EQ(traj[0], p);
}

TEST(Orbit, SingleCellToggles) {
    const PhasePoint p(Strategy::pure({1}), CellState::from_string("0"));
    const auto traj = orbit(IterationFunction::negation(), p, 2);
    ASSERT_EQ(traj.size(), 3u);
    EXPECT_EQ(traj[0].state().to_string(), "0");
    EXPECT_EQ(traj[1].state().to_string(), "1");
    EXPECT_EQ(traj[2].state().to_string(), "0");
}

TEST(Orbit, FullBlockOfDoubledScheduleReturns) {
    const PhasePoint p(Strategy::pure({1, 2}), CellState::from_string("00"));
    const auto traj = orbit(IterationFunction::negation(), p, 4);
    EXPECT_EQ(traj[1].state().to_string(), "10");
    EXPECT_EQ(traj[2].state().to_string(), "11");
    EXPECT_EQ(traj[3].state().to_string(), "01");
    EXPECT_EQ(traj[4], p);
}

TEST(Orbit, ShiftKeepsSequenceAligned) {
    SplitMix64 rng(7);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = 2 + rng.next_below(6);
        const PhasePoint p(random_strategy(rng, n), random_state(rng, n));
        const PhasePoint next = step(IterationFunction::negation(), p);
        for (std::size_t t = 0; t < 20; ++t)
            EXPECT_EQ(next.strategy().at(t), p.strategy().at(t + 1));
    }
}

TEST(Orbit, NegationChangesExactlyOneCellPerStep) {
    SplitMix64 rng(9);
    for (int round = 0; round < 30; ++round) {
        const std::size_t n = 1 + rng.next_below(8);
        const PhasePoint p(random_strategy(rng, n), random_state(rng, n));
        const auto traj = orbit(IterationFunction::negation(), p, 16);
        for (std::size_t t = 1; t < traj.size(); ++t)
            EXPECT_EQ(differing_cells(traj[t - 1].state(), traj[t].state()), 1u);
    }
}

TEST(Orbit, NormalizedScheduleGivesIdenticalTrajectory) {
    SplitMix64 rng(13);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = 2 + rng.next_below(4);
        const Strategy s = random_strategy(rng, n);
        const CellState e = random_state(rng, n);
        const auto a = orbit(IterationFunction::negation(), PhasePoint(s, e), 12);
        const auto b = orbit(IterationFunction::negation(), PhasePoint(s.normalized(), e), 12);
        for (std::size_t t = 0; t < a.size(); ++t) {
            EXPECT_EQ(a[t].state(), b[t].state());
            EXPECT_TRUE(same_sequence(a[t].strategy(), b[t].strategy()));
        }
    }
}

TEST(ParityMask, DoubleVisitCancels) {
    EXPECT_EQ(parity_mask(Strategy::pure({5}), 2, SystemSize(256)).count_ones(), 0u);
    EXPECT_EQ(parity_mask(Strategy::pure({1, 2}), 2, SystemSize(2)).to_string(), "11");
    EXPECT_EQ(parity_mask(Strategy::pure({1}), 0, SystemSize(3)).to_string(), "000");
}

TEST(ParityMask, RejectsEntriesBeyondCellCount) {
    EXPECT_THROW(parity_mask(Strategy::pure({4}), 1, SystemSize(3)), std::invalid_argument);
}

TEST(ParityMask, ReproducesOrbitStatesExhaustivelyForSmallSystems) {
    const IterationFunction f = IterationFunction::negation();
    SplitMix64 rng(17);
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
            std::vector<bool> bits(n);
            for (std::size_t i = 0; i < n; ++i) bits[i] = (code >> i) & 1;
            const CellState e{std::vector<bool>(bits)};
            for (int round = 0; round < 8; ++round) {
                const Strategy s = random_strategy(rng, n);
                const auto traj = orbit(f, PhasePoint(s, e), 8);
                for (std::size_t t = 0; t < traj.size(); ++t)
                    EXPECT_EQ(traj[t].state(), e ^ parity_mask(s, t, SystemSize(n)));
            }
        }
    }
}

TEST(ParityMask, ReproducesOrbitStatesForLargeSystems) {
    const IterationFunction f = IterationFunction::negation();
    SplitMix64 rng(19);
    for (int round = 0; round < 10; ++round) {
        const std::size_t n = 256;
        const Strategy s = random_strategy(rng, n);
        const CellState e = random_state(rng, n);
        const auto traj = orbit(f, PhasePoint(s, e), 24);
        for (std::size_t t = 0; t < traj.size(); ++t)
            EXPECT_EQ(traj[t].state(), e ^ parity_mask(s, t, SystemSize(n)));
    }
}
