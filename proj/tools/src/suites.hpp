#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace koszul::cli {

/// A named group of scenario objects (schema form, before validation).
struct Section {
  std::string name;
  std::vector<Json> scenarios;
};

/// The bundled verification suites, generated deterministically from `seed`:
/// euler, cone, spectral_sequence, tensor, spectrum, multiplicity, index,
/// regular, reciprocity, identities.
std::vector<Section> builtin_sections(std::uint64_t seed);

/// All sections validated into scenarios.
std::vector<Scenario> builtin_suite(const Overrides& overrides);

std::vector<Scenario> validate_section(const Section& section, const Overrides& overrides);

}  // namespace koszul::cli
