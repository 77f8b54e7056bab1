#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "scenario.hpp"

namespace koszul::cli {

struct RunOptions {
  std::size_t jobs = 1;
  bool timing = false;
};

/// --jobs if given, else KOSZUL_INDEX_JOBS, else 1. Zero means one worker
/// per hardware thread.
std::size_t resolve_jobs(std::optional<std::size_t> flag);

/// Evaluates the scenarios on `jobs` workers and writes one JSON line per
/// scenario, in input order, as soon as its predecessors are written.
/// Returns true when every report passes.
bool run_scenarios(const std::vector<Scenario>& scenarios, const RunOptions& opts, std::ostream& out);

}  // namespace koszul::cli
