#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "koszul/models.hpp"
#include "koszul/spectral.hpp"

namespace koszul::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;
inline constexpr int kSchemaVersion = 1;

/// Malformed scenario input. Maps to exit code 2.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Kind { Homology, Spectrum, Multiplicity, Index, Reciprocity, SpectralSequence, Identities };

std::string_view to_string(Kind kind) noexcept;
std::optional<Kind> parse_kind(std::string_view text);

struct Settings {
  Backend backend = Backend::Exact;
  Tolerance tol;
  std::uint64_t seed = kDefaultSeed;
};

/// Flags given explicitly on the command line.
struct Overrides {
  std::optional<Backend> backend;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
};

using Coords = std::vector<GaussianRational>;

struct HomologyPayload {
  std::vector<Matrix> operators;
  std::optional<Coords> shift;
  std::optional<Matrix> cone;
  std::optional<std::vector<Matrix>> nilpotent;
  std::optional<std::vector<std::size_t>> expect_dims;
  std::optional<long long> expect_index;
};

struct SpectrumPayload {
  std::vector<Matrix> operators;
  std::optional<Coords> at;
  std::optional<std::vector<std::pair<Coords, std::size_t>>> expect_spectrum;
};

struct MultiplicityPayload {
  std::size_t n = 0;
  std::string system_text;
  std::vector<Polynomial> system;
  std::optional<Coords> at;
  std::optional<std::size_t> expect_multiplicity;
  std::optional<std::size_t> expect_quotient_dim;
  std::optional<bool> expect_all_simple;
};

struct IndexPayload {
  DomainDescriptor domain;
  std::string system_text;
  std::vector<Polynomial> system;
  std::optional<long long> expect_index;
};

struct ReciprocityPayload {
  DomainDescriptor domain_a;
  DomainDescriptor domain_b;
  std::string system_text;
  std::vector<Polynomial> system;
  std::optional<long long> expect_value;
};

struct SpectralSequencePayload {
  std::vector<Matrix> a;
  std::vector<Matrix> b;
  std::size_t r_max = 2;
  std::optional<BigradedDims> expect_e2;
  std::optional<std::vector<std::size_t>> expect_total;
};

struct IdentitiesPayload {
  unsigned n = 1;
  unsigned m = 1;
  unsigned range = 0;
  std::optional<std::vector<long long>> dims;
  std::optional<std::vector<long long>> expect_predicted;
};

using Payload = std::variant<HomologyPayload, SpectrumPayload, MultiplicityPayload, IndexPayload, ReciprocityPayload,
                             SpectralSequencePayload, IdentitiesPayload>;

struct Scenario {
  std::string id;
  Kind kind = Kind::Homology;
  Settings settings;
  Json inputs;  // payload fields as given, echoed into the report
  Payload payload;
};

/// Validates one scenario object. `defaults` holds the file-level settings.
Scenario parse_scenario(const Json& obj, const Settings& defaults, const Overrides& overrides,
                        const std::string& context);

/// Validates a whole scenario file: {"schema": 1, "scenarios": [...]} with
/// optional top-level "backend", "tol" and "seed".
std::vector<Scenario> parse_scenario_file(const Json& doc, const Overrides& overrides);

std::vector<Scenario> load_scenario_file(const std::string& path, const Overrides& overrides);

Settings resolve(const Settings& defaults, const Overrides& overrides);

std::optional<Backend> parse_backend(std::string_view text);

/// Matrix literal: JSON array of rows of scalar strings.
Json matrix_to_json(const Matrix& m);
Json coords_to_json(const Coords& p);
Json point_to_json(const Point& p);

}  // namespace koszul::cli
