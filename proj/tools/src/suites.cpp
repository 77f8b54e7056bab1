#include "suites.hpp"

#include <cstdio>

#include "koszul/generators.hpp"

namespace koszul::cli {

namespace {

std::string numbered(const std::string& prefix, std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03zu", i);
  return prefix + "/" + buf;
}

Json operators_json(const CommutingTuple& t, std::size_t from = 0, std::size_t count = std::string::npos) {
  Json out = Json::array();
  for (std::size_t i = from; i < t.size() && i - from < count; ++i) out.push_back(matrix_to_json(t[i]));
  return out;
}

Json domain(const std::string& kind, const std::string& center, const std::string& radii) {
  return {{"kind", kind}, {"center", center}, {"radii", radii}};
}

Section euler(std::uint64_t seed) {
  Section s{"euler", {}};
  Draw draw(seed ^ 0x01);
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = 1 + draw.index(3);
    const std::size_t d = 1 + draw.index(8);
    const CommutingTuple t = random_commuting_tuple(draw, n, d);
    s.scenarios.push_back({{"id", numbered("euler", i)}, {"kind", "homology"}, {"operators", operators_json(t)}});
  }
  return s;
}

Section cone(std::uint64_t seed) {
  Section s{"cone", {}};
  Draw draw(seed ^ 0x02);
  for (std::size_t i = 0; i < 50; ++i) {
    const std::size_t n = 1 + draw.index(2);
    const std::size_t d = 1 + draw.index(6);
    const CommutingTuple t = random_commuting_tuple(draw, n, d);
    const Matrix b = random_commutant(draw, t);
    s.scenarios.push_back({{"id", numbered("cone", i)},
                           {"kind", "homology"},
                           {"operators", operators_json(t)},
                           {"cone", matrix_to_json(b)}});
  }
  return s;
}

Json integer_matrix(const std::vector<std::vector<int>>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (int v : r) row.push_back(std::to_string(v));
    out.push_back(std::move(row));
  }
  return out;
}

Section spectral_sequence(std::uint64_t seed) {
  Section s{"spectral_sequence", {}};
  // C[x,y]/(x^2,y^2) on the basis 1, x, y, xy with A = (x, y) and B = xy:
  // d^2 : E^2_{2,0} -> E^2_{0,1} has rank 2.
  const Json x = integer_matrix({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}});
  const Json y = integer_matrix({{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  const Json xy = integer_matrix({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}});
  s.scenarios.push_back({{"id", "ss/truncated_polynomial"},
                         {"kind", "spectral_sequence"},
                         {"a", Json::array({x, y})},
                         {"b", Json::array({xy})},
                         {"r_max", 4},
                         {"expect", {{"e2", {{1, 2}, {3, 3}, {2, 1}}}, {"total", {1, 3, 3, 1}}}}});
  Draw draw(seed ^ 0x03);
  for (std::size_t i = 0; i < 50; ++i) {
    const std::size_t n = 1 + draw.index(2);
    const std::size_t m = 1 + draw.index(2);
    const std::size_t d = 1 + draw.index(n + m == 4 ? 4 : 5);
    const CommutingTuple t = random_commuting_tuple(draw, n + m, d);
    s.scenarios.push_back({{"id", numbered("ss", i)},
                           {"kind", "spectral_sequence"},
                           {"a", operators_json(t, 0, n)},
                           {"b", operators_json(t, n, m)}});
  }
  return s;
}

Section tensor(std::uint64_t seed) {
  Section s{"tensor", {}};
  Draw draw(seed ^ 0x04);
  s.scenarios.push_back({{"id", "tensor/jordan"},
                         {"kind", "homology"},
                         {"operators", Json::array({Json::array({Json::array({"0"})})})},
                         {"nilpotent", Json::array({Json::array({Json::array({"0", "1"}), Json::array({"0", "0"})})})},
                         {"expect", {{"dims", {1, 1}}, {"index", 0}}}});
  for (std::size_t i = 0; i < 10; ++i) {
    const std::size_t n = 1 + draw.index(2);
    const CommutingTuple a = random_commuting_tuple(draw, n, 1 + draw.index(4));
    const CommutingTuple c = random_nilpotent_tuple(draw, n, 1 + draw.index(3));
    s.scenarios.push_back({{"id", numbered("tensor", i)},
                           {"kind", "homology"},
                           {"operators", operators_json(a)},
                           {"nilpotent", operators_json(c)}});
  }
  return s;
}

Section spectrum(std::uint64_t seed) {
  Section s{"spectrum", {}};
  Draw draw(seed ^ 0x05);
  s.scenarios.push_back({{"id", "spectrum/jordan"},
                         {"kind", "spectrum"},
                         {"operators", Json::array({Json::array({Json::array({"2", "1"}), Json::array({"0", "2"})})})},
                         {"at", "0"},
                         {"expect", {{"spectrum", Json::array({{{"lambda", "2"}, {"dim", 2}}})}}}});
  for (std::size_t i = 0; i < 20; ++i) {
    const std::size_t n = 1 + draw.index(3);
    const CommutingTuple t = random_commuting_tuple(draw, n, 1 + draw.index(6));
    s.scenarios.push_back({{"id", numbered("spectrum", i)}, {"kind", "spectrum"}, {"operators", operators_json(t)}});
  }
  return s;
}

Section multiplicity(std::uint64_t seed) {
  Section s{"multiplicity", {}};
  const auto fixed = [&](const std::string& id, const std::string& system, Json expect, const char* at = nullptr) {
    Json sc = {{"id", "multiplicity/" + id}, {"kind", "multiplicity"}, {"system", system}};
    if (at) sc["at"] = at;
    sc["expect"] = std::move(expect);
    s.scenarios.push_back(std::move(sc));
  };
  for (int k = 1; k <= 5; ++k)
    fixed("power" + std::to_string(k), "z^" + std::to_string(k),
          {{"multiplicity", k}, {"quotient_dim", k}}, "0");
  fixed("monomial", "z1^2 ; z2^3", {{"multiplicity", 6}, {"quotient_dim", 6}}, "0,0");
  fixed("parabola", "z1^2 - z2 ; z2^2", {{"multiplicity", 4}, {"quotient_dim", 4}}, "0,0");
  fixed("two_points", "z1*(z1 - 1) ; z2", {{"quotient_dim", 2}, {"all_simple", true}});
  fixed("lines", "z1 + z2 ; z1 - z2", {{"multiplicity", 1}, {"quotient_dim", 1}}, "0,0");
  Draw draw(seed ^ 0x06);
  for (std::size_t i = 0; i < 10; ++i) {
    const std::size_t n = 1 + draw.index(2);
    const auto g = random_regular_system(draw, n);
    s.scenarios.push_back({{"id", numbered("multiplicity/regular", i)},
                           {"kind", "multiplicity"},
                           {"system", to_string(g)},
                           {"n", n},
                           {"expect", {{"all_simple", true}}}});
  }
  return s;
}

Section index() {
  Section s{"index", {}};
  const auto add = [&](const std::string& id, Json dom, const std::string& system, long long expect) {
    s.scenarios.push_back({{"id", "index/" + id},
                           {"kind", "index"},
                           {"domain", std::move(dom)},
                           {"system", system},
                           {"expect", {{"index", expect}}}});
  };
  add("disc_two_roots", domain("polydisc", "0", "1"), "z^2 - 1/4", -2);
  add("disc_exterior", domain("polydisc", "0", "1"), "z - 2", 0);
  add("disc_mixed", domain("polydisc", "0", "1"), "(z - 1/2)*(z - 3)", -1);
  add("disc_offcenter", domain("polydisc", "1+i", "1/2"), "(z - 1 - i)^3", -3);
  add("bidisc_squares", domain("polydisc", "0,0", "1,1"), "z1^2 ; z2^2", -4);
  add("bidisc_parabola", domain("polydisc", "0,0", "1,1"), "z1^2 - z2 ; z2^2", -4);
  add("bidisc_outside", domain("polydisc", "0,0", "1,1"), "z1 - 2 ; z2", 0);
  add("ball_inside", domain("ball", "0,0", "1"), "z1 - 1/2 ; z2 - 1/2", -1);
  add("ball_corner", domain("ball", "0,0", "1"), "z1 - 3/4 ; z2 - 3/4", 0);
  add("gaussian_roots", domain("polydisc", "0", "1"), "z^2 + 1/4", -2);
  return s;
}

Section regular(std::uint64_t seed) {
  Section s{"regular", {}};
  Draw draw(seed ^ 0x07);
  for (std::size_t i = 0; i < 10; ++i) {
    const std::size_t n = 1 + draw.index(2);
    const auto g = random_regular_system(draw, n);
    const bool ball = n == 2 && draw.coin();
    const std::string center = n == 1 ? "0" : "0,0";
    const std::string radii = ball || n == 1 ? "5/2" : "5/2,5/2";
    s.scenarios.push_back({{"id", numbered("regular", i)},
                           {"kind", "index"},
                           {"domain", domain(ball ? "ball" : "polydisc", center, radii)},
                           {"system", to_string(g)}});
  }
  return s;
}

Section reciprocity() {
  Section s{"reciprocity", {}};
  const auto add = [&](const std::string& id, Json a, Json b, const std::string& system, long long expect) {
    s.scenarios.push_back({{"id", "reciprocity/" + id},
                           {"kind", "reciprocity"},
                           {"domain_a", std::move(a)},
                           {"domain_b", std::move(b)},
                           {"system", system},
                           {"expect", {{"value", expect}}}});
  };
  add("disc_pair", domain("polydisc", "0", "1"), domain("polydisc", "0", "1/2"), "z*(z - 3/4)", 1);
  add("bidisc_pair", domain("polydisc", "0,0", "1,1"), domain("polydisc", "0,0", "1/2,1/2"), "z1*(z1 - 3/4) ; z2^2", 2);
  add("disjoint", domain("polydisc", "0", "1"), domain("polydisc", "5", "1"), "z*(z - 5)", 0);
  add("same_disc", domain("polydisc", "0", "1"), domain("polydisc", "0", "1"), "z^2 - 1/4", 2);
  add("ball_pair", domain("ball", "0,0", "1"), domain("ball", "0,0", "1/2"), "z1*(z1 - 3/4) ; z2", 1);
  add("ball_bidisc", domain("ball", "0,0", "1"), domain("polydisc", "0,0", "1,1"), "z1^2 - 1/4 ; z2^3", 6);
  return s;
}

Section identities() {
  Section s{"identities", {}};
  s.scenarios.push_back({{"id", "identities/all"}, {"kind", "identities"}, {"n", 1}, {"m", 8}, {"range", 8}});
  s.scenarios.push_back({{"id", "identities/square"},
                         {"kind", "identities"},
                         {"n", 1},
                         {"m", 1},
                         {"range", 4},
                         {"dims", {1, 0}},
                         {"expect", {{"predicted", {1, 0}}}}});
  s.scenarios.push_back({{"id", "identities/one_extra"},
                         {"kind", "identities"},
                         {"n", 1},
                         {"m", 2},
                         {"range", 4},
                         {"dims", {1, 0}},
                         {"expect", {{"predicted", {1, 1, 0}}}}});
  s.scenarios.push_back({{"id", "identities/three_five"}, {"kind", "identities"}, {"n", 3}, {"m", 5}, {"range", 8}});
  return s;
}

}  // namespace

std::vector<Section> builtin_sections(std::uint64_t seed) {
  return {euler(seed),         cone(seed),       spectral_sequence(seed), tensor(seed),  spectrum(seed),
          multiplicity(seed),  index(),          regular(seed),           reciprocity(), identities()};
}

std::vector<Scenario> validate_section(const Section& section, const Overrides& overrides) {
  std::vector<Scenario> out;
  for (std::size_t i = 0; i < section.scenarios.size(); ++i)
    out.push_back(parse_scenario(section.scenarios[i], Settings{}, overrides,
                                 section.name + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Scenario> builtin_suite(const Overrides& overrides) {
  std::vector<Scenario> out;
  for (const auto& section : builtin_sections(overrides.seed.value_or(kDefaultSeed))) {
    auto part = validate_section(section, overrides);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace koszul::cli
