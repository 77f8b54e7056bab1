#include "koszul/models.hpp"

#include <algorithm>
#include <cmath>

#include "koszul/errors.hpp"

namespace koszul {

DomainDescriptor::DomainDescriptor(Kind k, std::vector<GaussianRational> c, std::vector<mpq_class> r)
    : kind(k), center(std::move(c)), radii(std::move(r)) {
  if (center.empty()) throw Error(ErrorCode::InvalidArgument, "domain needs at least one coordinate");
  const std::size_t want = kind == Kind::Ball ? 1 : center.size();
  if (radii.size() != want)
    throw Error(ErrorCode::InvalidArgument, std::string(koszul::to_string(kind)) + " needs " + std::to_string(want) +
                                                " radii, got " + std::to_string(radii.size()));
  for (auto& rad : radii) {
    rad.canonicalize();
    if (sgn(rad) <= 0) throw Error(ErrorCode::InvalidArgument, "radii must be positive");
  }
}

DomainDescriptor DomainDescriptor::unit_polydisc(std::size_t n) {
  return {Kind::Polydisc, std::vector<GaussianRational>(n), std::vector<mpq_class>(n, 1)};
}

DomainDescriptor DomainDescriptor::unit_ball(std::size_t n) {
  return {Kind::Ball, std::vector<GaussianRational>(n), std::vector<mpq_class>(1, 1)};
}

std::string DomainDescriptor::to_string() const {
  std::string out(koszul::to_string(kind));
  out += "(center=";
  for (std::size_t i = 0; i < center.size(); ++i) out += (i ? "," : "") + center[i].to_string();
  out += "; radii=";
  for (std::size_t i = 0; i < radii.size(); ++i) out += (i ? "," : "") + radii[i].get_str();
  return out + ")";
}

std::string_view to_string(DomainDescriptor::Kind kind) noexcept {
  return kind == DomainDescriptor::Kind::Polydisc ? "polydisc" : "ball";
}

std::string_view to_string(Location loc) noexcept {
  switch (loc) {
    case Location::Inside: return "inside";
    case Location::Outside: return "outside";
    case Location::Boundary: return "boundary";
  }
  return "?";
}

namespace {

Location from_comparisons(const std::vector<int>& cmp, bool ball) {
  if (ball) return cmp[0] < 0 ? Location::Inside : cmp[0] > 0 ? Location::Outside : Location::Boundary;
  if (std::any_of(cmp.begin(), cmp.end(), [](int c) { return c > 0; })) return Location::Outside;
  if (std::any_of(cmp.begin(), cmp.end(), [](int c) { return c == 0; })) return Location::Boundary;
  return Location::Inside;
}

}  // namespace

Location locate(const DomainDescriptor& domain, const Point& lambda, double margin) {
  if (lambda.size() != domain.dim()) throw Error(ErrorCode::ArityMismatch, "point and domain dimensions differ");
  const bool ball = domain.kind == DomainDescriptor::Kind::Ball;
  const bool exact = std::all_of(lambda.begin(), lambda.end(), [](const Scalar& s) { return s.backend() == Backend::Exact; });
  std::vector<int> cmp;
  if (exact) {
    mpq_class acc = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      const mpq_class dist2 = (lambda[i].exact() - domain.center[i]).norm();
      if (ball) {
        acc += dist2;
      } else {
        cmp.push_back(sgn(dist2 - domain.radii[i] * domain.radii[i]));
      }
    }
    if (ball) cmp.push_back(sgn(acc - domain.radii[0] * domain.radii[0]));
  } else {
    const auto classify = [margin](double dist, double r) { return dist > r + margin ? 1 : dist < r - margin ? -1 : 0; };
    double acc = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      const double dist = std::abs(lambda[i].to_complex() - domain.center[i].to_complex());
      if (ball) {
        acc += dist * dist;
      } else {
        cmp.push_back(classify(dist, domain.radii[i].get_d()));
      }
    }
    if (ball) cmp.push_back(classify(std::sqrt(acc), domain.radii[0].get_d()));
  }
  return from_comparisons(cmp, ball);
}

int coordinate_index(const DomainDescriptor& domain, const Point& lambda, double margin) {
  switch (locate(domain, lambda, margin)) {
    case Location::Inside: return -1;
    case Location::Outside: return 0;
    case Location::Boundary: break;
  }
  throw Error(ErrorCode::ZeroOnBoundary, "point " + to_string(lambda) + " lies on the boundary of " + domain.to_string());
}

std::vector<ZeroRecord> classify_zeros(const ModelTuple& mt, const ModelOptions& opts) {
  const MultiplicityTable table = global_multiplicity_table(mt.system, opts.spectrum, opts.backend);
  std::vector<ZeroRecord> out;
  for (const auto& z : table.zeros) {
    ZeroRecord rec;
    rec.lambda = z.lambda;
    rec.multiplicity = z.multiplicity;
    rec.coordinate_index = coordinate_index(mt.domain, z.lambda, opts.boundary_margin);
    rec.location = rec.coordinate_index < 0 ? Location::Inside : Location::Outside;
    out.push_back(std::move(rec));
  }
  return out;
}

bool IndexReport::pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

namespace {

/// Exact coordinates of a zero: the point itself, or for FLOAT points a
/// rationalization that is certified to be an exact zero of g.
std::optional<std::vector<GaussianRational>> exact_coordinates(const Point& p, const std::vector<Polynomial>& g) {
  std::vector<GaussianRational> out;
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

}  // namespace

IndexReport global_index(const ModelTuple& mt, const ModelOptions& opts) {
  IndexReport rep;
  const MultiplicityTable table = global_multiplicity_table(mt.system, opts.spectrum, opts.backend);
  rep.quotient_dim = table.quotient_dim;
  rep.zero_backend = table.backend;
  bool oracles_agree = true;
  long long local_sum = 0;
  std::size_t total_mult = 0;
  bool all_inside = true;
  for (const auto& z : table.zeros) {
    ZeroRecord rec;
    rec.lambda = z.lambda;
    rec.multiplicity = z.multiplicity;
    rec.coordinate_index = coordinate_index(mt.domain, z.lambda, opts.boundary_margin);
    rec.location = rec.coordinate_index < 0 ? Location::Inside : Location::Outside;
    all_inside = all_inside && rec.location == Location::Inside;
    total_mult += z.multiplicity;
    rep.global_index += static_cast<long long>(z.multiplicity) * rec.coordinate_index;

    long long local = 0;
    if (const auto coords = exact_coordinates(z.lambda, mt.system)) {
      const std::size_t deg = local_multiplicity(mt.system, *coords, opts.multiplicity).multiplicity;
      oracles_agree = oracles_agree && deg == z.multiplicity;
      local = local_index(mt, *coords, opts);
    } else {
      local = rec.location == Location::Inside ? -static_cast<long long>(z.multiplicity) : 0;
    }
    local_sum += local;
    rep.local_indices.push_back(local);
    rep.zeros.push_back(std::move(rec));
  }
  rep.verdicts.push_back({"multiplicity_oracles_agree", oracles_agree});
  rep.verdicts.push_back({"zero_table_complete", total_mult == table.quotient_dim});
  rep.verdicts.push_back({"local_indices_sum_to_global", local_sum == rep.global_index});
  if (all_inside) rep.verdicts.push_back({"quotient_dimension", rep.global_index == -static_cast<long long>(table.quotient_dim)});
  if (mt.domain.dim() == 1) {
    const double w = winding_number(mt.system.front(), mt.domain.center[0].to_complex(), mt.domain.radii[0].get_d(),
                                    opts.winding_samples);
    rep.winding = w;
    const double rounded = std::round(w);
    rep.verdicts.push_back({"winding_number", std::abs(w - rounded) < 0.1 && -static_cast<long long>(rounded) == rep.global_index});
  }
  return rep;
}

long long local_index(const ModelTuple& mt, const std::vector<GaussianRational>& lambda, const ModelOptions& opts) {
  if (lambda.size() != mt.domain.dim()) throw Error(ErrorCode::ArityMismatch, "point and domain dimensions differ");
  for (const auto& g : mt.system)
    if (!g.evaluate(lambda).is_zero()) throw Error(ErrorCode::NotAZero, "point is not a zero of the system");
  const int ind = coordinate_index(mt.domain, to_point(lambda), opts.boundary_margin);
  if (ind == 0) return 0;
  return ind * static_cast<long long>(local_multiplicity(mt.system, lambda, opts.multiplicity).multiplicity);
}

namespace {

long long choose(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return static_cast<long long>(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
}

long long left_entry(long long n, long long t) {
  if (t < 0) return 0;
  if (t == 0) return 1;
  return (t % 2 == 0 ? 1 : -1) * choose(n + t - 1, t);
}

}  // namespace

IntMatrix binomial_right(unsigned n, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = choose(n, static_cast<long long>(i) - static_cast<long long>(j));
  return m;
}

IntMatrix binomial_left(unsigned n, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = left_entry(n, static_cast<long long>(i) - static_cast<long long>(j));
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  IntMatrix out(a.size(), std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw Error(ErrorCode::DimensionMismatch, "integer matrix shapes do not match");
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  }
  return out;
}

BinomialIdentityCheck check_binomial_identities(unsigned max_m, unsigned range) {
  BinomialIdentityCheck c;
  for (unsigned m = 1; m <= max_m; ++m) {
    for (unsigned n = 1; n <= m; ++n) {
      for (long long t = 0; t <= static_cast<long long>(range); ++t) {
        long long s = 0;
        for (long long k = 0; k <= t; ++k) s += left_entry(n, k) * choose(m, t - k);
        ++c.cases;
        if (s != choose(m - n, t)) ++c.failures;
      }
      // Matrix form: L(n) is (m+1) x (n+m+1), R(k) is (n+m+1) x (m+1).
      const IntMatrix l = binomial_left(n, m + 1, n + m + 1);
      const IntMatrix lr_n = multiply(l, binomial_right(n, n + m + 1, m + 1));
      const IntMatrix lr_m = multiply(l, binomial_right(m, n + m + 1, m + 1));
      for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= m; ++j) {
          const long long diff = static_cast<long long>(i) - static_cast<long long>(j);
          c.cases += 2;
          if (lr_n[i][j] != (i == j ? 1 : 0)) ++c.failures;
          if (lr_m[i][j] != choose(m - n, diff)) ++c.failures;
        }
      }
    }
  }
  return c;
}

std::vector<long long> regular_case_identities(const std::vector<long long>& dims, std::size_t m) {
  if (dims.empty()) throw Error(ErrorCode::InvalidArgument, "need at least H_0");
  const std::size_t n = dims.size() - 1;
  if (m < n) throw Error(ErrorCode::InvalidArgument, "regular case identities need m >= n");
  std::vector<long long> out(m + 1, 0);
  for (std::size_t q = 0; q <= m; ++q)
    for (std::size_t p = 0; p <= m - n && p <= q; ++p)
      if (q - p <= n) out[q] += choose(static_cast<long long>(m - n), static_cast<long long>(p)) * dims[q - p];
  return out;
}

ReciprocityReport reciprocity_check(const DomainDescriptor& a, const DomainDescriptor& b,
                                    const std::vector<Polynomial>& g, const ModelOptions& opts) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::ArityMismatch, "domains live in different dimensions");
  const MultiplicityTable table = global_multiplicity_table(g, opts.spectrum, opts.backend);
  ReciprocityReport rep;
  for (const auto& z : table.zeros) {
    ReciprocityTerm term{z.lambda, z.multiplicity, locate(a, z.lambda, opts.boundary_margin),
                         locate(b, z.lambda, opts.boundary_margin)};
    if (term.in_a == Location::Boundary || term.in_b == Location::Boundary)
      throw Error(ErrorCode::ZeroOnBoundary, "zero " + to_string(z.lambda) + " lies on a domain boundary");
    const long long ind_a = term.in_a == Location::Inside ? -1 : 0;
    const long long ind_b = term.in_b == Location::Inside ? -1 : 0;
    // LHS takes Ind_mu(g(B)) from the local degree (Macaulay), RHS takes
    // Ind_lambda(g(A)) from the generalized eigenspace dimension.
    long long local_b = ind_b * static_cast<long long>(z.multiplicity);
    if (const auto coords = exact_coordinates(z.lambda, g)) local_b = local_index(ModelTuple{b, g}, *coords, opts);
    const long long local_a = static_cast<long long>(z.multiplicity) * ind_a;
    rep.lhs += ind_a * local_b;
    rep.rhs += local_a * ind_b;
    rep.zeros.push_back(std::move(term));
  }
  return rep;
}

namespace {

void monomials_of_degree(std::size_t n, unsigned deg, std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> e(n, 0);
  const auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, deg);
}

}  // namespace

TensorIndexReport tensor_index_identity(const CommutingTuple& a, const CommutingTuple& c, const Tolerance& tol) {
  if (a.size() != c.size()) throw Error(ErrorCode::ArityMismatch, "tuples have different lengths");
  if (a.backend() != c.backend()) throw Error(ErrorCode::BackendMismatch, "tuples use different backends");
  const std::size_t n = a.size();
  const std::size_t da = a.dim();
  const std::size_t dw = c.dim();
  const Backend be = a.backend();
  for (const auto& ci : c.operators()) {
    const Matrix p = ci.pow(static_cast<unsigned>(dw));
    if (be == Backend::Exact ? !p.is_zero() : !negligible(p, std::pow(1.0 + ci.frobenius_norm(), dw), tol))
      throw Error(ErrorCode::NotNilpotent, "second tuple is not nilpotent");
  }
  TensorIndexReport rep;
  rep.nilpotent_dim = dw;
  rep.dims_a = koszul_homology(a, tol).dims;

  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, a[i].frobenius_norm() + c[i].frobenius_norm());
  const auto restricted_homology = [&](const Matrix& basis) {
    const std::size_t w = basis.cols();
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = solve(basis, c[i] * basis, Tolerance{tol.relative, std::sqrt(tol.relative) * c[i].frobenius_norm()});
      if (!r) throw Error(ErrorCode::InvariantViolation, "socle series step is not invariant");
      ops.push_back(Matrix::kron(a[i], Matrix::identity(w, be)) + Matrix::kron(Matrix::identity(da, be), *r));
    }
    // Restrictions computed in FLOAT carry round-off even where C vanishes.
    Tolerance ht = tol;
    if (be == Backend::Float) ht.absolute = tol.relative * scale;
    return koszul_homology(CommutingTuple(std::move(ops), tol), ht).dims;
  };

  // Socle series: W_j = intersection of ker C^alpha over |alpha| = j.
  std::vector<Matrix> flag;
  for (unsigned j = 1; j <= dw; ++j) {
    std::vector<std::vector<unsigned>> alphas;
    monomials_of_degree(n, j, alphas);
    Subspace w = Subspace::whole(dw, be);
    for (const auto& alpha : alphas) {
      Matrix prod = Matrix::identity(dw, be);
      for (std::size_t i = 0; i < n; ++i)
        if (alpha[i]) prod = prod * c[i].pow(alpha[i]);
      w = intersect(w, kernel_basis(prod, tol), tol);
    }
    flag.push_back(w.basis);
    rep.flag.push_back(w.dim());
    if (w.dim() == dw) break;
  }

  bool ok = true;
  std::vector<std::size_t> sub(n + 1, 0);
  std::size_t prev_dim = 0;
  for (const auto& basis : flag) {
    const std::vector<std::size_t> mid = restricted_homology(basis);
    const std::size_t layer = basis.cols() - prev_dim;
    std::vector<long long> r(n + 2, 0);
    for (std::size_t k = n + 1; k-- > 0;) {
      const auto ck = static_cast<long long>(layer * rep.dims_a[k]);
      r[k] = static_cast<long long>(sub[k]) + ck - static_cast<long long>(mid[k]) - r[k + 1];
      const long long cap = k == 0 ? 0 : std::min<long long>(ck, static_cast<long long>(sub[k - 1]));
      ok = ok && r[k] >= 0 && r[k] <= cap;
    }
    sub = mid;
    prev_dim = basis.cols();
  }
  rep.bookkeeping = ok;
  rep.dims_tensor = sub;
  const HomologyProfile whole = profile_from_dims(sub);
  rep.index_tensor = whole.index;
  rep.index_product = profile_from_dims(rep.dims_a).index * static_cast<long long>(dw);
  return rep;
}

}  // namespace koszul
