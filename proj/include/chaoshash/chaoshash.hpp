#pragma once

#include "analysis.hpp"
#include "bitstring.hpp"
#include "digest.hpp"
#include "dynamics.hpp"
#include "json_io.hpp"
#include "metric.hpp"
#include "pipeline.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "state.hpp"
#include "strategy.hpp"
