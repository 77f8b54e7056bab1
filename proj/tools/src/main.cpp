#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "runner.hpp"
#include "scenario.hpp"
#include "suites.hpp"

namespace {

using koszul::cli::Json;
using koszul::cli::SchemaError;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Json parse_json_arg(const std::string& text, const std::string& flag) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(flag + ": " + e.what());
  }
}

/// "kind:center:radii", e.g. "polydisc:0,0:1,1" or "ball:0,0:1".
Json parse_domain_arg(const std::string& text, const std::string& flag) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos) throw SchemaError(flag + ": expected kind:center:radii");
  return {{"kind", text.substr(0, a)}, {"center", text.substr(a + 1, b - a - 1)}, {"radii", text.substr(b + 1)}};
}

Json parse_list_arg(const std::string& text) {
  Json out = Json::array();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw SchemaError("--dims: '" + item + "' is not an integer");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koszul homology, joint spectra, local multiplicities and index checks for commuting tuples"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string backend_text;
  std::optional<double> tol;
  std::optional<std::size_t> jobs;
  std::optional<std::uint64_t> seed;
  std::string output;
  bool timing = false;
  app.add_option("--backend", backend_text, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", tol, "relative tolerance for the float backend")->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "worker threads (0 = hardware threads); env KOSZUL_INDEX_JOBS");
  app.add_option("--seed", seed, "RNG seed for generated suites and spectral combinations");
  app.add_option("--output", output, "write reports to this file instead of stdout");
  app.add_flag("--timing", timing, "add wall_ms to every report");

  std::vector<std::string> files;
  auto* run = app.add_subcommand("run", "evaluate scenario files");
  run->add_option("files", files, "scenario JSON files")->required()->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify-all", "run the bundled verification suites");

  Json single;
  std::string operators, shift, cone, nilpotent, at, system, domain_text, domain_a, domain_b, a_ops, b_ops, dims;
  std::optional<std::size_t> n_vars, r_max;
  unsigned id_n = 1, id_m = 1, id_range = 8;

  auto* homology = app.add_subcommand("homology", "Koszul homology of a commuting tuple");
  homology->add_option("--operators", operators, "JSON array of matrices")->required();
  homology->add_option("--shift", shift, "point lambda; uses A - lambda");
  homology->add_option("--cone", cone, "JSON matrix b commuting with the tuple");
  homology->add_option("--nilpotent", nilpotent, "JSON array of nilpotent matrices C for A (x) 1 + 1 (x) C");

  auto* spectrum = app.add_subcommand("spectrum", "joint spectrum and generalized eigenspaces");
  spectrum->add_option("--operators", operators, "JSON array of matrices")->required();
  spectrum->add_option("--at", at, "point to test for membership");

  auto* multiplicity = app.add_subcommand("multiplicity", "local intersection multiplicities of a square system");
  multiplicity->add_option("--system", system, "polynomials separated by ';'")->required();
  multiplicity->add_option("--n", n_vars, "number of variables (default: inferred)");
  multiplicity->add_option("--at", at, "zero to examine (default: every zero)");

  auto* index = app.add_subcommand("index", "global index of T_g on a model space");
  index->add_option("--domain", domain_text, "kind:center:radii, e.g. polydisc:0,0:1,1")->required();
  index->add_option("--system", system, "polynomials separated by ';'")->required();

  auto* reciprocity = app.add_subcommand("reciprocity", "reciprocity of local indices for two model spaces");
  reciprocity->add_option("--domain-a", domain_a, "kind:center:radii")->required();
  reciprocity->add_option("--domain-b", domain_b, "kind:center:radii")->required();
  reciprocity->add_option("--system", system, "polynomials separated by ';'")->required();

  auto* ss = app.add_subcommand("ss", "row-filtration spectral sequence of K(A (+) B)");
  ss->add_option("--a", a_ops, "JSON array of matrices")->required();
  ss->add_option("--b", b_ops, "JSON array of matrices")->required();
  ss->add_option("--r-max", r_max, "last page to compute (at least n + 1 pages are computed)");

  auto* identities = app.add_subcommand("identities", "binomial transform identities");
  identities->add_option("--n", id_n, "equations of the tuple")->required();
  identities->add_option("--m", id_m, "equations of the symbol")->required();
  identities->add_option("--range", id_range, "largest i - j checked");
  identities->add_option("--dims", dims, "comma-separated dims of H(A - lambda), n + 1 entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  koszul::cli::Overrides overrides;
  if (!backend_text.empty()) overrides.backend = koszul::cli::parse_backend(backend_text);
  overrides.tol = tol;
  overrides.seed = seed;

  std::vector<koszul::cli::Scenario> scenarios;
  try {
    if (run->parsed()) {
      for (const auto& f : files) {
        auto part = koszul::cli::load_scenario_file(f, overrides);
        scenarios.insert(scenarios.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      }
    } else if (verify->parsed()) {
      scenarios = koszul::cli::builtin_suite(overrides);
    } else {
      Json obj;
      if (homology->parsed()) {
        obj = {{"id", "homology"}, {"kind", "homology"}, {"operators", parse_json_arg(operators, "--operators")}};
        if (!shift.empty()) obj["shift"] = shift;
        if (!cone.empty()) obj["cone"] = parse_json_arg(cone, "--cone");
        if (!nilpotent.empty()) obj["nilpotent"] = parse_json_arg(nilpotent, "--nilpotent");
      } else if (spectrum->parsed()) {
        obj = {{"id", "spectrum"}, {"kind", "spectrum"}, {"operators", parse_json_arg(operators, "--operators")}};
        if (!at.empty()) obj["at"] = at;
      } else if (multiplicity->parsed()) {
        obj = {{"id", "multiplicity"}, {"kind", "multiplicity"}, {"system", system}};
        if (n_vars) obj["n"] = *n_vars;
        if (!at.empty()) obj["at"] = at;
      } else if (index->parsed()) {
        obj = {{"id", "index"}, {"kind", "index"}, {"domain", parse_domain_arg(domain_text, "--domain")}, {"system", system}};
      } else if (reciprocity->parsed()) {
        obj = {{"id", "reciprocity"},
               {"kind", "reciprocity"},
               {"domain_a", parse_domain_arg(domain_a, "--domain-a")},
               {"domain_b", parse_domain_arg(domain_b, "--domain-b")},
               {"system", system}};
      } else if (ss->parsed()) {
        obj = {{"id", "ss"}, {"kind", "spectral_sequence"}, {"a", parse_json_arg(a_ops, "--a")}, {"b", parse_json_arg(b_ops, "--b")}};
        if (r_max) obj["r_max"] = *r_max;
      } else if (identities->parsed()) {
        obj = {{"id", "identities"}, {"kind", "identities"}, {"n", id_n}, {"m", id_m}, {"range", id_range}};
        if (!dims.empty()) obj["dims"] = parse_list_arg(dims);
      }
      scenarios.push_back(koszul::cli::parse_scenario(obj, koszul::cli::Settings{}, overrides, "arguments"));
    }
  } catch (const SchemaError& e) {
    std::cerr << "koszul-index: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  if (!output.empty()) {
    file.open(output, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "koszul-index: cannot write " << output << '\n';
      return kExitUsage;
    }
  }
  std::ostream& out = output.empty() ? std::cout : file;
  koszul::cli::RunOptions opts;
  opts.jobs = koszul::cli::resolve_jobs(jobs);
  opts.timing = timing;
  const bool pass = koszul::cli::run_scenarios(scenarios, opts, out);
  return pass ? 0 : kExitFail;
}
