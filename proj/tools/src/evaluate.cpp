#include "evaluate.hpp"

#include <chrono>
#include <cmath>

#include "koszul/errors.hpp"
#include "koszul/groebner.hpp"
#include "koszul/linalg.hpp"

namespace koszul::cli {

namespace {

class Verdicts {
 public:
  void add(const std::string& name, bool pass) { list_.push_back({{"name", name}, {"pass", pass}}); all_ = all_ && pass; }
  Json json() const { return list_; }
  bool all() const { return all_; }

 private:
  Json list_ = Json::array();
  bool all_ = true;
};

SpectrumOptions spectrum_options(const Settings& s) {
  SpectrumOptions o;
  o.tol = s.tol;
  o.seed = s.seed;
  return o;
}

ModelOptions model_options(const Settings& s) {
  ModelOptions o;
  o.backend = s.backend;
  o.spectrum = spectrum_options(s);
  return o;
}

CommutingTuple make_tuple(const std::vector<Matrix>& ops, const Settings& s) {
  return CommutingTuple(ops, s.tol).to_backend(s.backend);
}

Json dims_json(const std::vector<std::size_t>& dims) { return Json(dims); }

Json bigraded_json(const BigradedDims& d) {
  Json out = Json::array();
  for (const auto& row : d) out.push_back(Json(row));
  return out;
}

bool same_point(const Point& a, const Coords& b, double radius) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].backend() == Backend::Exact) {
      if (!(a[i].exact() == b[i])) return false;
    } else if (std::abs(a[i].to_complex() - b[i].to_complex()) > radius) {
      return false;
    }
  }
  return true;
}

/// Exact coordinates of a table zero: the exact point, or a rationalization
/// certified as an exact zero of g.
std::optional<Coords> certified_zero(const Point& p, const std::vector<Polynomial>& g) {
  Coords out;
  bool rounded = false;
  for (const auto& s : p) {
    if (s.backend() == Backend::Exact) {
      out.push_back(s.exact());
    } else {
      out.push_back(rationalize(s.to_complex(), 10000));
      rounded = true;
    }
  }
  if (rounded)
    for (const auto& q : g)
      if (!q.evaluate(out).is_zero()) return std::nullopt;
  return out;
}

void homology(const HomologyPayload& p, const Settings& s, Json& out, Verdicts& v) {
  CommutingTuple exact(p.operators, s.tol);
  if (p.shift) exact = exact.shifted(to_point(*p.shift));
  const CommutingTuple t = exact.to_backend(s.backend);
  const HomologyProfile h = koszul_homology(t, s.tol);
  out["dims"] = dims_json(h.dims);
  out["euler"] = h.euler;
  out["index"] = h.index;

  Matrix stacked = t[0];
  Matrix row = t[0];
  for (std::size_t i = 1; i < t.size(); ++i) {
    stacked = Matrix::vstack(stacked, t[i]);
    row = Matrix::hstack(row, t[i]);
  }
  const std::size_t joint_kernel = t.dim() - rank(stacked, s.tol);
  const std::size_t cokernel = t.dim() - rank(row, s.tol);
  out["joint_kernel_dim"] = joint_kernel;
  out["cokernel_dim"] = cokernel;
  v.add("index_vanishes", h.index == 0);
  v.add("top_homology_is_joint_kernel", h.dims.back() == joint_kernel);
  v.add("bottom_homology_is_cokernel", h.dims.front() == cokernel);

  if (p.cone) {
    const Matrix b = p.cone->to_backend(s.backend);
    const KoszulComplex kc = build_complex(t, s.tol);
    const std::vector<std::size_t> cone_dims = homology_dims(mapping_cone(kc, b, s.tol), s.tol);
    const HomologyProfile extended = koszul_homology(t.concat(CommutingTuple({b}, s.tol), s.tol), s.tol);
    out["cone_dims"] = dims_json(cone_dims);
    v.add("cone_isomorphism", verify_cone_isomorphism(t, b, s.tol));
    v.add("cone_homology_matches_extended_tuple", cone_dims == extended.dims);
  }
  if (p.nilpotent) {
    const TensorIndexReport r = tensor_index_identity(t, make_tuple(*p.nilpotent, s), s.tol);
    out["tensor"] = {{"dims_tensor", dims_json(r.dims_tensor)},
                     {"flag", dims_json(r.flag)},
                     {"index_tensor", r.index_tensor},
                     {"index_product", r.index_product}};
    v.add("tensor_index_identity", r.holds());
  }
  if (p.expect_dims) v.add("expected_dims", h.dims == *p.expect_dims);
  if (p.expect_index) v.add("expected_index", h.index == *p.expect_index);
}

Json equivalences_json(const JointSpectrumReport& r) {
  return {{"in_taylor_spectrum", r.in_taylor_spectrum},
          {"is_joint_eigenvalue", r.is_joint_eigenvalue},
          {"top_homology_nonzero", r.top_homology_nonzero}};
}

void spectrum(const SpectrumPayload& p, const Settings& s, Json& out, Verdicts& v) {
  const CommutingTuple t = make_tuple(p.operators, s);
  const SpectrumOptions opts = spectrum_options(s);
  const SpectralDecomposition sd = spectral_decomposition(t, opts);
  Json list = Json::array();
  bool equivalences = true;
  for (const auto& c : sd.components) {
    list.push_back({{"lambda", point_to_json(c.lambda)}, {"dim", c.space.dim()}});
    const JointSpectrumReport r = joint_spectrum_equivalences(t, c.lambda, opts);
    equivalences = equivalences && r.agree() && r.is_joint_eigenvalue &&
                   generalized_eigenspace_dim(t, c.lambda, s.tol) == c.space.dim();
  }
  out["spectrum"] = std::move(list);
  v.add("decomposition_spans", sd.total_dim() == t.dim());
  v.add("spectral_characterizations_agree", equivalences);
  if (p.at) {
    const Point at = to_point(*p.at);
    const JointSpectrumReport r =
        joint_spectrum_equivalences(t, s.backend == Backend::Exact ? at : [&] {
          Point f;
          for (const auto& c : at) f.push_back(c.to_backend(Backend::Float));
          return f;
        }(), opts);
    out["at"] = equivalences_json(r);
    v.add("point_characterizations_agree", r.agree());
  }
  if (p.expect_spectrum) {
    bool match = p.expect_spectrum->size() == sd.components.size();
    for (const auto& [lambda, dim] : *p.expect_spectrum) {
      bool found = false;
      for (const auto& c : sd.components)
        found = found || (same_point(c.lambda, lambda, opts.cluster_radius) && c.space.dim() == dim);
      match = match && found;
    }
    v.add("expected_spectrum", match);
  }
}

void multiplicity(const MultiplicityPayload& p, const Settings& s, Json& out, Verdicts& v) {
  const MultiplicityTable table = global_multiplicity_table(p.system, spectrum_options(s), s.backend);
  out["n"] = p.n;
  out["quotient_dim"] = table.quotient_dim;
  out["zero_backend"] = std::string(to_string(table.backend));

  bool macaulay_agrees = true;
  bool diagonal = true;
  bool regular_simple = true;
  std::size_t summed = 0;
  const auto certify = [&](const Coords& at, std::size_t eigen_dim, Json& rec) {
    const MultiplicityCertificate cert = local_multiplicity(p.system, at);
    const DiagonalDegreeCheck dd = verify_diagonal_degree(p.system, at);
    const bool regular = jacobian_regular(p.system, at);
    rec["multiplicity"] = cert.multiplicity;
    rec["N_star"] = cert.stable_order;
    rec["codims"] = dims_json(cert.codims);
    rec["eigenspace_dim"] = eigen_dim;
    rec["diagonal_degree"] = dd.degree_h;
    rec["jacobian_regular"] = regular;
    macaulay_agrees = macaulay_agrees && cert.multiplicity == eigen_dim;
    diagonal = diagonal && dd.holds();
    regular_simple = regular_simple && (regular == (cert.multiplicity == 1));
    return cert;
  };

  if (p.at) {
    std::size_t eigen_dim = 0;
    for (const auto& z : table.zeros)
      if (same_point(z.lambda, *p.at, 1e-6)) eigen_dim = z.multiplicity;
    Json rec = {{"lambda", coords_to_json(*p.at)}};
    const MultiplicityCertificate cert = certify(*p.at, eigen_dim, rec);
    out["multiplicity"] = cert.multiplicity;
    out["N_star"] = cert.stable_order;
    out["zeros"] = Json::array({std::move(rec)});
    if (p.expect_multiplicity) v.add("expected_multiplicity", cert.multiplicity == *p.expect_multiplicity);
  } else {
    bool all_certified = true;
    Json zeros = Json::array();
    for (const auto& z : table.zeros) {
      Json rec = {{"lambda", point_to_json(z.lambda)}};
      summed += z.multiplicity;
      if (const auto coords = certified_zero(z.lambda, p.system)) {
        certify(*coords, z.multiplicity, rec);
      } else {
        all_certified = false;
        rec["multiplicity"] = z.multiplicity;
        rec["eigenspace_dim"] = z.multiplicity;
      }
      zeros.push_back(std::move(rec));
    }
    out["zeros"] = std::move(zeros);
    v.add("zeros_certified_exactly", all_certified);
    v.add("zero_table_complete", summed == table.quotient_dim);
    if (p.expect_multiplicity)
      v.add("expected_multiplicity", table.zeros.size() == 1 && table.zeros.front().multiplicity == *p.expect_multiplicity);
    if (p.expect_all_simple) {
      bool simple = true;
      for (const auto& z : table.zeros) simple = simple && z.multiplicity == 1;
      v.add("expected_all_simple", simple == *p.expect_all_simple);
    }
  }
  v.add("macaulay_matches_eigenspace", macaulay_agrees);
  v.add("diagonal_degree", diagonal);
  v.add("regular_iff_simple", regular_simple);
  if (p.expect_quotient_dim) v.add("expected_quotient_dim", table.quotient_dim == *p.expect_quotient_dim);
}

void index(const IndexPayload& p, const Settings& s, Json& out, Verdicts& v) {
  const ModelTuple mt{p.domain, p.system};
  const IndexReport r = global_index(mt, model_options(s));
  Json zeros = Json::array();
  for (std::size_t i = 0; i < r.zeros.size(); ++i) {
    const auto& z = r.zeros[i];
    zeros.push_back({{"lambda", point_to_json(z.lambda)},
                     {"multiplicity", z.multiplicity},
                     {"location", std::string(to_string(z.location))},
                     {"coordinate_index", z.coordinate_index},
                     {"local_index", r.local_indices[i]}});
  }
  out["domain"] = p.domain.to_string();
  out["zeros"] = std::move(zeros);
  out["global_index"] = r.global_index;
  out["quotient_dim"] = r.quotient_dim;
  out["zero_backend"] = std::string(to_string(r.zero_backend));
  if (r.winding) out["winding_number"] = *r.winding;
  for (const auto& verdict : r.verdicts) v.add(verdict.name, verdict.pass);
  bool regular_ok = true;
  for (std::size_t i = 0; i < r.zeros.size(); ++i) {
    const auto coords = certified_zero(r.zeros[i].lambda, p.system);
    if (!coords || !jacobian_regular(p.system, *coords)) continue;
    regular_ok = regular_ok && r.local_indices[i] == (r.zeros[i].location == Location::Inside ? -1 : 0);
  }
  v.add("regular_zero_local_index", regular_ok);
  if (p.expect_index) v.add("expected_index", r.global_index == *p.expect_index);
}

void reciprocity(const ReciprocityPayload& p, const Settings& s, Json& out, Verdicts& v) {
  const ReciprocityReport r = reciprocity_check(p.domain_a, p.domain_b, p.system, model_options(s));
  Json zeros = Json::array();
  for (const auto& z : r.zeros)
    zeros.push_back({{"lambda", point_to_json(z.lambda)},
                     {"multiplicity", z.multiplicity},
                     {"in_a", std::string(to_string(z.in_a))},
                     {"in_b", std::string(to_string(z.in_b))}});
  out["zeros"] = std::move(zeros);
  out["lhs"] = r.lhs;
  out["rhs"] = r.rhs;
  v.add("reciprocity", r.holds());
  if (p.expect_value) v.add("expected_value", r.lhs == *p.expect_value && r.rhs == *p.expect_value);
}

void spectral_sequence(const SpectralSequencePayload& p, const Settings& s, Json& out, Verdicts& v) {
  // Page ranks are always computed exactly.
  const Bicomplex bc = build_bicomplex(CommutingTuple(p.a, s.tol), CommutingTuple(p.b, s.tol));
  const SpectralSequence ss = page_sequence(bc, p.r_max);
  const SpectralChecks c = check_spectral_sequence(bc, ss);
  out["e2"] = bigraded_json(c.e2);
  out["e_infinity"] = bigraded_json(ss.infinity);
  out["total_dims"] = dims_json(c.total.dims);
  out["stable_page"] = ss.stable_page;
  Json eulers = Json::array();
  for (const auto& page : ss.pages) eulers.push_back(page.euler());
  out["page_euler"] = std::move(eulers);
  out["index_via_e2"] = c.index_via_e2;
  v.add("e2_pipelines_agree", c.e2_pipelines_agree);
  v.add("euler_constant_from_e2", c.euler_constant);
  v.add("converges_to_total_homology", c.converges);
  v.add("vanishing_diagonal", c.vanishing);
  v.add("nonvanishing_entry", c.nonvanishing);
  v.add("index_via_e2", c.index_matches);
  if (p.expect_e2) v.add("expected_e2", c.e2 == *p.expect_e2);
  if (p.expect_total) v.add("expected_total", c.total.dims == *p.expect_total);
}

void identities(const IdentitiesPayload& p, const Settings&, Json& out, Verdicts& v) {
  const BinomialIdentityCheck all = check_binomial_identities(p.m, p.range);
  out["cases"] = all.cases;
  out["failures"] = all.failures;
  v.add("binomial_identities", all.pass());

  const std::size_t size = p.range + 1;
  const IntMatrix lr = multiply(binomial_left(p.n, size, size), binomial_right(p.m, size, size));
  bool matches = true;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      const long long want = i >= j && i - j <= p.m - p.n ? static_cast<long long>(binomial(p.m - p.n, i - j)) : 0;
      matches = matches && lr[i][j] == want;
    }
  out["left_right_first_column"] = [&] {
    Json col = Json::array();
    for (std::size_t i = 0; i < size; ++i) col.push_back(lr[i][0]);
    return col;
  }();
  v.add("left_right_product", matches);
  if (p.dims) {
    const std::vector<long long> predicted = regular_case_identities(*p.dims, p.m);
    out["predicted"] = predicted;
    if (p.expect_predicted) v.add("expected_predicted", predicted == *p.expect_predicted);
  }
}

}  // namespace

Json evaluate(const Scenario& sc, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  Json report;
  report["id"] = sc.id;
  report["kind"] = std::string(to_string(sc.kind));
  report["backend"] = std::string(to_string(sc.settings.backend));
  report["tol"] = sc.settings.tol.relative;
  report["seed"] = sc.settings.seed;
  report["inputs"] = sc.inputs;
  Json outputs = Json::object();
  Verdicts verdicts;
  try {
    std::visit(
        [&](const auto& p) {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, HomologyPayload>) homology(p, sc.settings, outputs, verdicts);
          else if constexpr (std::is_same_v<P, SpectrumPayload>) spectrum(p, sc.settings, outputs, verdicts);
          else if constexpr (std::is_same_v<P, MultiplicityPayload>) multiplicity(p, sc.settings, outputs, verdicts);
          else if constexpr (std::is_same_v<P, IndexPayload>) index(p, sc.settings, outputs, verdicts);
          else if constexpr (std::is_same_v<P, ReciprocityPayload>) reciprocity(p, sc.settings, outputs, verdicts);
          else if constexpr (std::is_same_v<P, SpectralSequencePayload>) spectral_sequence(p, sc.settings, outputs, verdicts);
          else identities(p, sc.settings, outputs, verdicts);
        },
        sc.payload);
    report["outputs"] = std::move(outputs);
    report["verdicts"] = verdicts.json();
    report["pass"] = verdicts.all();
  } catch (const Error& e) {
    report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    report["pass"] = false;
  } catch (const std::exception& e) {
    report["error"] = {{"code", "InternalError"}, {"message", e.what()}};
    report["pass"] = false;
  }
  if (timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["wall_ms"] = std::round(ms * 1000.0) / 1000.0;
  }
  return report;
}

}  // namespace koszul::cli
