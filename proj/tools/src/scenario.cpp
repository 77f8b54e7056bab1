#include "scenario.hpp"

#include <fstream>
#include <limits>
#include <set>

#include "koszul/errors.hpp"

namespace koszul::cli {

std::string_view to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::Homology: return "homology";
    case Kind::Spectrum: return "spectrum";
    case Kind::Multiplicity: return "multiplicity";
    case Kind::Index: return "index";
    case Kind::Reciprocity: return "reciprocity";
    case Kind::SpectralSequence: return "spectral_sequence";
    case Kind::Identities: return "identities";
  }
  return "?";
}

std::optional<Kind> parse_kind(std::string_view text) {
  for (Kind k : {Kind::Homology, Kind::Spectrum, Kind::Multiplicity, Kind::Index, Kind::Reciprocity,
                 Kind::SpectralSequence, Kind::Identities})
    if (to_string(k) == text) return k;
  return std::nullopt;
}

std::optional<Backend> parse_backend(std::string_view text) {
  if (text == "exact") return Backend::Exact;
  if (text == "float") return Backend::Float;
  return std::nullopt;
}

Settings resolve(const Settings& defaults, const Overrides& overrides) {
  Settings s = defaults;
  if (overrides.backend) s.backend = *overrides.backend;
  if (overrides.tol) s.tol.relative = *overrides.tol;
  if (overrides.seed) s.seed = *overrides.seed;
  return s;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json coords_to_json(const Coords& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(c.to_string());
  return out;
}

Json point_to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(c.to_string());
  return out;
}

namespace {

/// Strict view of a JSON object: every key must be consumed.
class Fields {
 public:
  Fields(const Json& obj, std::string context) : obj_(obj), context_(std::move(context)) {
    if (!obj_.is_object()) fail("expected an object");
  }

  [[noreturn]] void fail(const std::string& what) const { throw SchemaError(context_ + ": " + what); }

  const Json* optional(const std::string& key) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  const Json& required(const std::string& key) {
    const Json* v = optional(key);
    if (!v) fail("missing field '" + key + "'");
    return *v;
  }

  void finish() const {
    for (const auto& [key, value] : obj_.items())
      if (!seen_.count(key)) fail("unknown field '" + key + "'");
  }

  std::string at(const std::string& key) const { return context_ + "." + key; }

 private:
  const Json& obj_;
  std::string context_;
  std::set<std::string> seen_;
};

[[noreturn]] void fail_at(const std::string& where, const std::string& what) { throw SchemaError(where + ": " + what); }

std::string as_string(const Json& v, const std::string& where) {
  if (!v.is_string()) fail_at(where, "expected a string");
  return v.get<std::string>();
}

std::uint64_t as_unsigned(const Json& v, const std::string& where, std::uint64_t max = std::numeric_limits<std::uint64_t>::max()) {
  if (!v.is_number_integer()) fail_at(where, "expected a non-negative integer");
  if (v.is_number_unsigned()) {
    const auto x = v.get<std::uint64_t>();
    if (x > max) fail_at(where, "value too large");
    return x;
  }
  const auto x = v.get<std::int64_t>();
  if (x < 0) fail_at(where, "expected a non-negative integer");
  if (static_cast<std::uint64_t>(x) > max) fail_at(where, "value too large");
  return static_cast<std::uint64_t>(x);
}

long long as_integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) fail_at(where, "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
    fail_at(where, "value too large");
  return v.get<long long>();
}

GaussianRational as_scalar(const Json& v, const std::string& where) {
  const std::string text = as_string(v, where);
  try {
    return parse_gaussian(text);
  } catch (const Error& e) {
    fail_at(where, e.what());
  }
}

Matrix as_matrix(const Json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) fail_at(where, "expected a non-empty array of rows");
  std::vector<std::vector<GaussianRational>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string rw = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) fail_at(rw, "expected an array of scalar strings");
    std::vector<GaussianRational> row;
    for (std::size_t j = 0; j < v[i].size(); ++j) row.push_back(as_scalar(v[i][j], rw + "[" + std::to_string(j) + "]"));
    rows.push_back(std::move(row));
  }
  try {
    Matrix m = Matrix::from_exact_rows(rows);
    if (!m.is_square()) fail_at(where, "operators must be square");
    return m;
  } catch (const Error& e) {
    fail_at(where, e.what());
  }
}

std::vector<Matrix> as_operators(const Json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) fail_at(where, "expected a non-empty array of matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_matrix(v[i], where + "[" + std::to_string(i) + "]"));
  for (const auto& m : out)
    if (m.rows() != out.front().rows()) fail_at(where, "operators must share one size");
  return out;
}

/// "1/2,0" or ["1/2", "0"].
Coords as_coords(const Json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_point(v.get<std::string>());
    } catch (const Error& e) {
      fail_at(where, e.what());
    }
  }
  if (!v.is_array()) fail_at(where, "expected a point string or an array of scalar strings");
  Coords out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_scalar(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::size_t> as_dims(const Json& v, const std::string& where) {
  if (!v.is_array()) fail_at(where, "expected an array of non-negative integers");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_unsigned(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<long long> as_integers(const Json& v, const std::string& where) {
  if (!v.is_array()) fail_at(where, "expected an array of integers");
  std::vector<long long> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_integer(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Polynomial> as_system(const std::string& text, std::size_t n, const std::string& where) {
  try {
    return parse_system(text, n);
  } catch (const Error& e) {
    fail_at(where, e.what());
  }
}

std::size_t system_arity(const std::string& text, const std::string& where) {
  const std::size_t n = infer_variable_count(text);
  if (n == 0) fail_at(where, "cannot infer the number of variables; give \"n\"");
  return n;
}

DomainDescriptor as_domain(const Json& v, const std::string& where) {
  Fields f(v, where);
  const std::string kind = as_string(f.required("kind"), f.at("kind"));
  DomainDescriptor::Kind k;
  if (kind == "polydisc" || kind == "disc") {
    k = DomainDescriptor::Kind::Polydisc;
  } else if (kind == "ball") {
    k = DomainDescriptor::Kind::Ball;
  } else {
    f.fail("unknown domain kind '" + kind + "'");
  }
  Coords center = as_coords(f.required("center"), f.at("center"));
  const Coords radii_c = as_coords(f.required("radii"), f.at("radii"));
  f.finish();
  std::vector<mpq_class> radii;
  for (const auto& r : radii_c) {
    if (!r.is_real()) fail_at(where + ".radii", "radii must be real");
    radii.push_back(r.real());
  }
  try {
    return DomainDescriptor(k, std::move(center), std::move(radii));
  } catch (const Error& e) {
    fail_at(where, e.what());
  }
}

void require_arity(const std::vector<Polynomial>& system, std::size_t n, const std::string& where) {
  if (system.size() != n)
    fail_at(where, "expected " + std::to_string(n) + " polynomials, got " + std::to_string(system.size()));
}

Payload parse_homology(Fields& f, Json& inputs) {
  HomologyPayload p;
  p.operators = as_operators(f.required("operators"), f.at("operators"));
  inputs["operators"] = *f.optional("operators");
  if (const Json* v = f.optional("shift")) {
    p.shift = as_coords(*v, f.at("shift"));
    if (p.shift->size() != p.operators.size()) f.fail("shift has the wrong number of coordinates");
    inputs["shift"] = *v;
  }
  if (const Json* v = f.optional("cone")) {
    p.cone = as_matrix(*v, f.at("cone"));
    if (p.cone->rows() != p.operators.front().rows()) f.fail("cone operator has the wrong size");
    inputs["cone"] = *v;
  }
  if (const Json* v = f.optional("nilpotent")) {
    p.nilpotent = as_operators(*v, f.at("nilpotent"));
    if (p.nilpotent->size() != p.operators.size()) f.fail("nilpotent tuple must have as many operators as the tuple");
    inputs["nilpotent"] = *v;
  }
  if (const Json* v = f.optional("expect")) {
    Fields e(*v, f.at("expect"));
    if (const Json* d = e.optional("dims")) p.expect_dims = as_dims(*d, e.at("dims"));
    if (const Json* d = e.optional("index")) p.expect_index = as_integer(*d, e.at("index"));
    e.finish();
    inputs["expect"] = *v;
  }
  return p;
}

Payload parse_spectrum(Fields& f, Json& inputs) {
  SpectrumPayload p;
  p.operators = as_operators(f.required("operators"), f.at("operators"));
  inputs["operators"] = *f.optional("operators");
  if (const Json* v = f.optional("at")) {
    p.at = as_coords(*v, f.at("at"));
    if (p.at->size() != p.operators.size()) f.fail("point has the wrong number of coordinates");
    inputs["at"] = *v;
  }
  if (const Json* v = f.optional("expect")) {
    Fields e(*v, f.at("expect"));
    if (const Json* s = e.optional("spectrum")) {
      if (!s->is_array()) fail_at(e.at("spectrum"), "expected an array");
      p.expect_spectrum.emplace();
      for (std::size_t i = 0; i < s->size(); ++i) {
        Fields item((*s)[i], e.at("spectrum") + "[" + std::to_string(i) + "]");
        Coords lambda = as_coords(item.required("lambda"), item.at("lambda"));
        const std::size_t dim = as_unsigned(item.required("dim"), item.at("dim"));
        item.finish();
        p.expect_spectrum->emplace_back(std::move(lambda), dim);
      }
    }
    e.finish();
    inputs["expect"] = *v;
  }
  return p;
}

Payload parse_multiplicity(Fields& f, Json& inputs) {
  MultiplicityPayload p;
  p.system_text = as_string(f.required("system"), f.at("system"));
  inputs["system"] = p.system_text;
  if (const Json* v = f.optional("n")) {
    p.n = as_unsigned(*v, f.at("n"), 16);
    if (p.n == 0) fail_at(f.at("n"), "must be positive");
    inputs["n"] = p.n;
  } else {
    p.n = system_arity(p.system_text, f.at("system"));
  }
  p.system = as_system(p.system_text, p.n, f.at("system"));
  require_arity(p.system, p.n, f.at("system"));
  if (const Json* v = f.optional("at")) {
    p.at = as_coords(*v, f.at("at"));
    if (p.at->size() != p.n) f.fail("point has the wrong number of coordinates");
    inputs["at"] = *v;
  }
  if (const Json* v = f.optional("expect")) {
    Fields e(*v, f.at("expect"));
    if (const Json* d = e.optional("multiplicity")) p.expect_multiplicity = as_unsigned(*d, e.at("multiplicity"));
    if (const Json* d = e.optional("quotient_dim")) p.expect_quotient_dim = as_unsigned(*d, e.at("quotient_dim"));
    if (const Json* d = e.optional("all_simple")) {
      if (!d->is_boolean()) fail_at(e.at("all_simple"), "expected a boolean");
      p.expect_all_simple = d->get<bool>();
    }
    e.finish();
    inputs["expect"] = *v;
  }
  return p;
}

Payload parse_index(Fields& f, Json& inputs) {
  DomainDescriptor domain = as_domain(f.required("domain"), f.at("domain"));
  inputs["domain"] = *f.optional("domain");
  IndexPayload p{std::move(domain), as_string(f.required("system"), f.at("system")), {}, std::nullopt};
  inputs["system"] = p.system_text;
  p.system = as_system(p.system_text, p.domain.dim(), f.at("system"));
  require_arity(p.system, p.domain.dim(), f.at("system"));
  if (const Json* v = f.optional("expect")) {
    Fields e(*v, f.at("expect"));
    if (const Json* d = e.optional("index")) p.expect_index = as_integer(*d, e.at("index"));
    e.finish();
    inputs["expect"] = *v;
  }
  return p;
}

Payload parse_reciprocity(Fields& f, Json& inputs) {
  DomainDescriptor a = as_domain(f.required("domain_a"), f.at("domain_a"));
  DomainDescriptor b = as_domain(f.required("domain_b"), f.at("domain_b"));
  if (a.dim() != b.dim()) f.fail("domains must have the same dimension");
  inputs["domain_a"] = *f.optional("domain_a");
  inputs["domain_b"] = *f.optional("domain_b");
  ReciprocityPayload p{std::move(a), std::move(b), as_string(f.required("system"), f.at("system")), {}, std::nullopt};
  inputs["system"] = p.system_text;
  p.system = as_system(p.system_text, p.domain_a.dim(), f.at("system"));
  require_arity(p.system, p.domain_a.dim(), f.at("system"));
  if (const Json* v = f.optional("expect")) {
    Fields e(*v, f.at("expect"));
    if (const Json* d = e.optional("value")) p.expect_value = as_integer(*d, e.at("value"));
    e.finish();
    inputs["expect"] = *v;
  }
  return p;
}

Payload parse_spectral_sequence(Fields& f, Json& inputs) {
  SpectralSequencePayload p;
  p.a = as_operators(f.required("a"), f.at("a"));
  p.b = as_operators(f.required("b"), f.at("b"));
  if (p.a.front().rows() != p.b.front().rows()) f.fail("a and b act on spaces of different dimension");
  inputs["a"] = *f.optional("a");
  inputs["b"] = *f.optional("b");
  if (const Json* v = f.optional("r_max")) {
    p.r_max = as_unsigned(*v, f.at("r_max"), 64);
    inputs["r_max"] = p.r_max;
  }
  if (const Json* v = f.optional("expect")) {
    Fields e(*v, f.at("expect"));
    if (const Json* d = e.optional("e2")) {
      if (!d->is_array()) fail_at(e.at("e2"), "expected an array of rows");
      p.expect_e2.emplace();
      for (std::size_t i = 0; i < d->size(); ++i) p.expect_e2->push_back(as_dims((*d)[i], e.at("e2")));
    }
    if (const Json* d = e.optional("total")) p.expect_total = as_dims(*d, e.at("total"));
    e.finish();
    inputs["expect"] = *v;
  }
  return p;
}

Payload parse_identities(Fields& f, Json& inputs) {
  IdentitiesPayload p;
  p.n = static_cast<unsigned>(as_unsigned(f.required("n"), f.at("n"), 60));
  p.m = static_cast<unsigned>(as_unsigned(f.required("m"), f.at("m"), 60));
  p.range = static_cast<unsigned>(as_unsigned(f.required("range"), f.at("range"), 60));
  if (p.n == 0 || p.n > p.m) f.fail("need 1 <= n <= m");
  inputs["n"] = p.n;
  inputs["m"] = p.m;
  inputs["range"] = p.range;
  if (const Json* v = f.optional("dims")) {
    p.dims = as_integers(*v, f.at("dims"));
    if (p.dims->size() != p.n + 1) f.fail("dims must have n + 1 entries");
    inputs["dims"] = *v;
  }
  if (const Json* v = f.optional("expect")) {
    Fields e(*v, f.at("expect"));
    if (const Json* d = e.optional("predicted")) p.expect_predicted = as_integers(*d, e.at("predicted"));
    e.finish();
    inputs["expect"] = *v;
  }
  return p;
}

Settings parse_settings(Fields& f, const Settings& base) {
  Settings s = base;
  if (const Json* v = f.optional("backend")) {
    const auto b = parse_backend(as_string(*v, f.at("backend")));
    if (!b) fail_at(f.at("backend"), "expected \"exact\" or \"float\"");
    s.backend = *b;
  }
  if (const Json* v = f.optional("tol")) {
    if (!v->is_number() || v->get<double>() <= 0) fail_at(f.at("tol"), "expected a positive number");
    s.tol.relative = v->get<double>();
  }
  if (const Json* v = f.optional("seed")) s.seed = as_unsigned(*v, f.at("seed"));
  return s;
}

}  // namespace

Scenario parse_scenario(const Json& obj, const Settings& defaults, const Overrides& overrides,
                        const std::string& context) {
  Fields f(obj, context);
  Scenario s;
  s.id = as_string(f.required("id"), f.at("id"));
  const std::string kind = as_string(f.required("kind"), f.at("kind"));
  const auto k = parse_kind(kind);
  if (!k) f.fail("unknown kind '" + kind + "'");
  s.kind = *k;
  // Scenario fields win over command-line flags, which win over file defaults.
  s.settings = parse_settings(f, resolve(defaults, overrides));
  s.inputs = Json::object();
  switch (s.kind) {
    case Kind::Homology: s.payload = parse_homology(f, s.inputs); break;
    case Kind::Spectrum: s.payload = parse_spectrum(f, s.inputs); break;
    case Kind::Multiplicity: s.payload = parse_multiplicity(f, s.inputs); break;
    case Kind::Index: s.payload = parse_index(f, s.inputs); break;
    case Kind::Reciprocity: s.payload = parse_reciprocity(f, s.inputs); break;
    case Kind::SpectralSequence: s.payload = parse_spectral_sequence(f, s.inputs); break;
    case Kind::Identities: s.payload = parse_identities(f, s.inputs); break;
  }
  f.finish();
  return s;
}

std::vector<Scenario> parse_scenario_file(const Json& doc, const Overrides& overrides) {
  Fields f(doc, "file");
  const Json& schema = f.required("schema");
  if (!schema.is_number_integer() || schema.get<long long>() != kSchemaVersion)
    f.fail("unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
  const Settings defaults = parse_settings(f, Settings{});
  const Json& list = f.required("scenarios");
  f.finish();
  if (!list.is_array()) fail_at("file.scenarios", "expected an array");
  std::vector<Scenario> out;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(parse_scenario(list[i], defaults, overrides, "scenarios[" + std::to_string(i) + "]"));
    if (!ids.insert(out.back().id).second) fail_at("scenarios[" + std::to_string(i) + "]", "duplicate id '" + out.back().id + "'");
  }
  return out;
}

std::vector<Scenario> load_scenario_file(const std::string& path, const Overrides& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path + ": cannot open file");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return parse_scenario_file(doc, overrides);
}

}  // namespace koszul::cli
