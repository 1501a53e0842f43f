#pragma once

#include <string>

#include <json.hpp>

#include "psystem/analysis.hpp"
#include "psystem/constitutive.hpp"
#include "psystem/entropy.hpp"
#include "psystem/shock.hpp"
#include "psystem/simulator.hpp"

namespace psystem {

using Json = nlohmann::json;

Json to_json(const ModelSpec& model);
Json to_json(const RegionReport& report);
Json to_json(const ShockSolution& sol);
Json to_json(const EntropyVerdict& verdict);
Json to_json(const ShockEstimate& est);

/// Parses {"kind": ..., "rho0": ..., "mu": ..., "lambda": ..., "f": ...|null}.
/// rho0 defaults to 1 and f to null. Errors name the offending field and are
/// raised as UsageError; the result is validated.
ModelSpec model_from_json(const Json& j);

/// {"model": {...}, "v0": ..., "domain_length": ..., "cells": ..., "cfl": ...,
/// "t_end": ...}; only "model" and "v0" are required.
SimConfig sim_config_from_json(const Json& j);

/// Accepts inline JSON (first non-blank character '{') or a file path.
Json load_json_argument(const std::string& text_or_path);

} // namespace psystem
