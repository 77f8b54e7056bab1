// Runs the nine acceptance criteria and prints one PASS/FAIL line each.
// Usage: koszul-acceptance <path to koszul-index>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "evaluate.hpp"
#include "koszul/models.hpp"
#include "scenario.hpp"
#include "suites.hpp"

namespace {

using koszul::cli::Json;

constexpr double kWindingError = 0.1;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    detail = what;
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_s;  // 0: no runtime bound
  std::function<Outcome()> run;
};

class Reports {
 public:
  Reports() {
    for (auto& s : koszul::cli::builtin_sections(koszul::cli::kDefaultSeed)) sections_[s.name] = std::move(s);
  }

  /// Evaluated reports of one bundled section, EXACT backend.
  std::vector<Json> evaluate(const std::string& section) const {
    std::vector<Json> out;
    for (const auto& sc : koszul::cli::validate_section(sections_.at(section), {})) out.push_back(koszul::cli::evaluate(sc));
    return out;
  }

 private:
  std::map<std::string, koszul::cli::Section> sections_;
};

std::optional<bool> verdict(const Json& report, const std::string& name) {
  if (!report.contains("verdicts")) return std::nullopt;
  for (const auto& v : report["verdicts"])
    if (v["name"] == name) return v["pass"].get<bool>();
  return std::nullopt;
}

bool verdict_passes(const Json& report, const std::string& name) { return verdict(report, name).value_or(false); }

std::string id_of(const Json& report) { return report["id"].get<std::string>(); }

std::string failure(const Json& report, const std::string& what) {
  std::string s = id_of(report) + ": " + what;
  if (report.contains("error")) s += " (" + report["error"]["code"].get<std::string>() + ")";
  return s;
}

const Json* find(const std::vector<Json>& reports, const std::string& id) {
  for (const auto& r : reports)
    if (id_of(r) == id) return &r;
  return nullptr;
}

bool is_random(const Json& report, const std::string& prefix) {
  const std::string id = id_of(report);
  return id.rfind(prefix + "/", 0) == 0 && id.size() == prefix.size() + 4 &&
         id.find_first_not_of("0123456789", prefix.size() + 1) == std::string::npos;
}

Outcome euler_anchor(const Reports& all) {
  Outcome o;
  const auto reports = all.evaluate("euler");
  o.require(reports.size() == 200, "expected 200 tuples");
  for (const auto& r : reports) {
    const auto& ops = r["inputs"]["operators"];
    o.require(!ops.empty() && ops.size() <= 3 && ops[0].size() <= 8, failure(r, "outside n <= 3, dim <= 8"));
    o.require(r["backend"] == "exact", failure(r, "not EXACT"));
    o.require(r.contains("outputs") && r["outputs"]["index"] == 0, failure(r, "index != 0"));
    o.require(verdict_passes(r, "top_homology_is_joint_kernel"), failure(r, "H_n != joint kernel"));
    o.require(verdict_passes(r, "bottom_homology_is_cokernel"), failure(r, "H_0 != cokernel"));
  }
  if (o.pass) o.detail = std::to_string(reports.size()) + " tuples";
  return o;
}

Outcome cone_isomorphism(const Reports& all) {
  Outcome o;
  const auto reports = all.evaluate("cone");
  o.require(reports.size() == 50, "expected 50 instances");
  for (const auto& r : reports) {
    o.require(verdict_passes(r, "cone_isomorphism"), failure(r, "cone map not an isomorphism"));
    o.require(verdict_passes(r, "cone_homology_matches_extended_tuple"), failure(r, "cone homology differs"));
  }
  if (o.pass) o.detail = std::to_string(reports.size()) + " instances";
  return o;
}

Outcome spectral_sequence(const Reports& all) {
  Outcome o;
  std::size_t random = 0;
  std::size_t nonzero = 0;
  for (const auto& r : all.evaluate("spectral_sequence")) {
    random += is_random(r, "ss") ? 1 : 0;
    o.require(verdict_passes(r, "e2_pipelines_agree"), failure(r, "E2 pipelines disagree"));
    o.require(verdict_passes(r, "euler_constant_from_e2"), failure(r, "page Euler characteristic not constant"));
    o.require(verdict_passes(r, "converges_to_total_homology"), failure(r, "E-infinity diagonals != total homology"));
    o.require(verdict_passes(r, "vanishing_diagonal"), failure(r, "triviality proposition fails"));
    o.require(verdict_passes(r, "nonvanishing_entry"), failure(r, "non-triviality proposition fails"));
    if (!o.pass) continue;
    for (long long e : r["outputs"]["page_euler"]) o.require(e == 0, failure(r, "Euler characteristic != 0"));
    for (const auto& row : r["outputs"]["e2"])
      for (const auto& x : row) nonzero += x.get<std::size_t>() > 0 ? 1 : 0;
  }
  o.require(random >= 50, "expected 50 random instances");
  if (o.pass) o.detail = std::to_string(random) + " random instances, " + std::to_string(nonzero) + " nonzero E2 entries";
  return o;
}

const std::set<std::string> kMultiplicityCorpus = {
    "multiplicity/power1", "multiplicity/power2",   "multiplicity/power3",     "multiplicity/power4",
    "multiplicity/power5", "multiplicity/monomial", "multiplicity/parabola",   "multiplicity/two_points",
    "multiplicity/lines"};

Outcome multiplicity_oracles(const std::vector<Json>& reports) {
  Outcome o;
  std::size_t fixed = 0;
  std::size_t random = 0;
  for (const auto& r : reports) {
    fixed += kMultiplicityCorpus.count(id_of(r));
    const bool regular = id_of(r).rfind("multiplicity/regular/", 0) == 0;
    random += regular ? 1 : 0;
    o.require(verdict_passes(r, "macaulay_matches_eigenspace"), failure(r, "Macaulay != eigenspace dimension"));
    o.require(r.contains("outputs") && r["outputs"]["zero_backend"] == "exact", failure(r, "zeros not exact"));
    if (!r["inputs"].contains("at")) {
      o.require(verdict_passes(r, "zero_table_complete"), failure(r, "sum of multiplicities != quotient dimension"));
      o.require(verdict_passes(r, "zeros_certified_exactly"), failure(r, "zeros not certified"));
    }
    if (regular) {
      for (const auto& z : r["outputs"]["zeros"])
        o.require(z["multiplicity"] == 1 && z["jacobian_regular"] == true, failure(r, "regular zero with multiplicity != 1"));
    }
    for (const char* name : {"expected_multiplicity", "expected_quotient_dim", "expected_all_simple"})
      if (auto got = verdict(r, name)) o.require(*got, failure(r, name));
  }
  o.require(fixed == kMultiplicityCorpus.size(), "fixed corpus incomplete");
  o.require(random == 10, "expected 10 random regular systems");
  if (o.pass) o.detail = std::to_string(fixed) + " fixed + " + std::to_string(random) + " random systems";
  return o;
}

Outcome diagonal_degree(const std::vector<Json>& reports) {
  Outcome o;
  std::size_t zeros = 0;
  for (const auto& r : reports) {
    o.require(verdict_passes(r, "diagonal_degree"), failure(r, "deg g != deg h"));
    if (!o.pass) continue;
    for (const auto& z : r["outputs"]["zeros"]) {
      o.require(z["diagonal_degree"] == z["multiplicity"], failure(r, "diagonal degree differs"));
      ++zeros;
    }
  }
  if (o.pass) o.detail = std::to_string(zeros) + " zeros";
  return o;
}

Outcome global_index(const Reports& all) {
  Outcome o;
  auto reports = all.evaluate("index");
  const auto regular = all.evaluate("regular");
  const auto expect = [&](const std::string& id, long long value) {
    const Json* r = find(reports, "index/" + id);
    o.require(r && r->contains("outputs") && (*r)["outputs"]["global_index"] == value,
              "index/" + id + " != " + std::to_string(value));
    return r;
  };
  if (const Json* r = expect("disc_two_roots", -2)) {
    const double w = (*r)["outputs"].value("winding_number", NAN);
    o.require(std::abs(w - 2.0) < kWindingError && std::lround(w) == 2, "winding oracle != 2");
  }
  expect("disc_exterior", 0);
  if (const Json* r = expect("bidisc_squares", -4))
    o.require((*r)["outputs"]["quotient_dim"] == 4, "dim C[z]/(z1^2, z2^2) != 4");
  reports.insert(reports.end(), regular.begin(), regular.end());
  for (const auto& r : reports) {
    o.require(verdict_passes(r, "local_indices_sum_to_global"), failure(r, "sum of local indices != global"));
    if (auto w = verdict(r, "winding_number")) o.require(*w, failure(r, "winding oracle disagrees"));
    o.require(verdict_passes(r, "expected_index") || !verdict(r, "expected_index"), failure(r, "unexpected index"));
  }
  if (o.pass) o.detail = std::to_string(reports.size()) + " scenarios";
  return o;
}

Outcome reciprocity(const Reports& all) {
  Outcome o;
  const auto reports = all.evaluate("reciprocity");
  std::size_t equal = 0;
  for (const auto& r : reports) {
    const bool ok = verdict_passes(r, "reciprocity") && verdict_passes(r, "expected_value");
    o.require(ok, failure(r, "LHS != RHS"));
    equal += ok ? 1 : 0;
  }
  const Json* worked = find(reports, "reciprocity/disc_pair");
  o.require(worked && (*worked)["outputs"]["lhs"] == 1 && (*worked)["outputs"]["rhs"] == 1, "worked disc pair != 1 = 1");
  const Json* bidisc = find(reports, "reciprocity/bidisc_pair");
  o.require(bidisc && verdict_passes(*bidisc, "reciprocity"), "bidisc pair missing or failing");
  o.require(equal >= 5, "fewer than 5 scenarios");
  if (o.pass) o.detail = std::to_string(equal) + " scenarios";
  return o;
}

Outcome identities(const Reports& all) {
  Outcome o;
  const auto direct = koszul::check_binomial_identities(8, 8);
  o.require(direct.pass(), std::to_string(direct.failures) + " binomial identity failures");
  for (const auto& r : all.evaluate("identities")) {
    o.require(verdict_passes(r, "binomial_identities") && verdict_passes(r, "left_right_product"), failure(r, "identity fails"));
    if (auto p = verdict(r, "expected_predicted")) o.require(*p, failure(r, "regular-case transform"));
  }
  std::size_t interior = 0;
  for (const auto& r : all.evaluate("regular")) {
    o.require(verdict_passes(r, "regular_zero_local_index"), failure(r, "regular zero local index != -1"));
    if (!r.contains("outputs")) continue;
    for (const auto& z : r["outputs"]["zeros"])
      if (z["location"] == "inside") {
        o.require(z["local_index"] == -1, failure(r, "interior regular zero with local index != -1"));
        ++interior;
      }
  }
  o.require(interior > 0, "no interior regular zeros exercised");
  if (o.pass) o.detail = std::to_string(direct.cases) + " identity cases, " + std::to_string(interior) + " interior regular zeros";
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("koszul-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::vector<std::string> outputs;
  for (int run = 0; run < 2; ++run) {
    const auto path = dir / ("run" + std::to_string(run) + ".jsonl");
    const std::string cmd = "\"" + cli + "\" verify-all --seed 7 --output \"" + path.string() + "\"";
    const int status = std::system(cmd.c_str());
    o.require(status != -1 && std::filesystem::exists(path), "could not run " + cli);
    outputs.push_back(slurp(path));
  }
  std::filesystem::remove_all(dir);
  o.require(!outputs[0].empty(), "empty report stream");
  o.require(outputs[0] == outputs[1], "report streams differ");
  if (o.pass) o.detail = std::to_string(outputs[0].size()) + " identical bytes";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <koszul-index>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const Reports all;

  const std::vector<Criterion> criteria = {
      {1, "Euler characteristic anchor", 10, [&] { return euler_anchor(all); }},
      {2, "mapping cone isomorphism", 5, [&] { return cone_isomorphism(all); }},
      {3, "spectral sequence", 30, [&] { return spectral_sequence(all); }},
      {4, "multiplicity triple-oracle agreement", 20, [&] { return multiplicity_oracles(all.evaluate("multiplicity")); }},
      {5, "diagonal degree identity", 20, [&] { return diagonal_degree(all.evaluate("multiplicity")); }},
      {6, "global index theorem", 10, [&] { return global_index(all); }},
      {7, "reciprocity", 10, [&] { return reciprocity(all); }},
      {8, "binomial identities and regular zeros", 5, [&] { return identities(all); }},
      {9, "determinism of verify-all --seed 7", 0, [&] { return determinism(cli); }},
  };

  bool all_pass = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && seconds >= c.limit_s) {
      o.pass = false;
      o.detail += " (runtime limit exceeded)";
    }
    char timing[64];
    if (c.limit_s > 0)
      std::snprintf(timing, sizeof timing, "%.2f s < %.0f s", seconds, c.limit_s);
    else
      std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << timing << "] "
              << o.detail << std::endl;
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
