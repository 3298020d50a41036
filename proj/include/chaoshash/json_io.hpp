#pragma once

#include <json.hpp>

#include <string>

#include "analysis.hpp"
#include "dynamics.hpp"
#include "metric.hpp"
#include "rational.hpp"

namespace chaoshash {

inline nlohmann::json to_json(const PhasePoint& p) {
    return nlohmann::json{{"strategy", p.strategy().to_literal()},
                          {"state", p.state().to_string()}};
}

inline nlohmann::json to_json(const SensitivityReport& r) {
    return nlohmann::json{{"n", r.n.value()},
                          {"delta", to_fraction_string(r.delta)},
                          {"witness", to_json(r.witness)},
                          {"separation_step", r.separation_step},
                          {"achieved_separation", r.achieved_separation}};
}

inline nlohmann::json to_json(const ExpansivityReport& r) {
    return nlohmann::json{{"n", r.n.value()},
                          {"pairs_checked", r.pairs_checked},
                          {"min_max_separation", to_fraction_string(r.min_max_separation)},
                          {"horizon", r.horizon}};
}

inline nlohmann::json to_json(const AvalancheReport& r) {
    return nlohmann::json{{"trials", r.trials},
                          {"message_bits", r.message_bits},
                          {"seed", std::to_string(r.seed)},
                          {"mean", to_decimal_string(r.mean, 6)},
                          {"stddev", sqrt_decimal_string(r.variance, 6)},
                          {"min", r.min},
                          {"max", r.max},
                          {"histogram", r.histogram}};
}

inline nlohmann::json to_json(const ContinuityExperiment& r) {
    return nlohmann::json{{"n", r.n.value()},
                          {"pairs", r.pairs},
                          {"m", r.m},
                          {"seed", std::to_string(r.seed)},
                          {"failures", r.failures}};
}

}  // namespace chaoshash
