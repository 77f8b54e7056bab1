#pragma once

#include "scenario.hpp"

namespace koszul::cli {

/// Runs one scenario and returns its report object:
/// {id, kind, backend, tol, seed, inputs, outputs, verdicts, pass} or, on a
/// computational error, {..., error: {code, message}, pass: false}.
/// `timing` adds wall_ms, which makes the report non-deterministic.
Json evaluate(const Scenario& scenario, bool timing = false);

}  // namespace koszul::cli
