#include "koszul/spectrum.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

using EigenMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

EigenMatrix to_eigen(const FloatMatrix& m) {
  EigenMatrix out(static_cast<Index>(m.rows()), static_cast<Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Index>(i), static_cast<Index>(j)) = m(i, j);
  return out;
}

Matrix from_eigen(const EigenMatrix& m) {
  FloatMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return Matrix(std::move(out));
}

// Univariate polynomials over Q(i), coefficients from low to high degree.
using UPoly = std::vector<GaussianRational>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly derivative(const UPoly& p) {
  UPoly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * GaussianRational{static_cast<long>(k)});
  trim(out);
  return out;
}

UPoly remainder(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const GaussianRational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

UPoly quotient(UPoly a, const UPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    const GaussianRational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return q;
}

UPoly monic(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  const GaussianRational inv = GaussianRational{1} / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

GaussianRational evaluate(const UPoly& p, const GaussianRational& x) {
  GaussianRational acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

/// Faddeev-LeVerrier: det(x I - C).
UPoly characteristic_polynomial(const Matrix& c) {
  const std::size_t n = c.rows();
  UPoly coeff(n + 1);
  coeff[n] = GaussianRational{1};
  const Matrix id = Matrix::identity(n, Backend::Exact);
  Matrix m = Matrix::zeros(n, n, Backend::Exact);
  for (std::size_t k = 1; k <= n; ++k) {
    m = c * m + id.scaled(coeff[n - k + 1]);
    const GaussianRational tr = (c * m).trace().exact();
    coeff[n - k] = -(tr / GaussianRational{static_cast<long>(k)});
  }
  return coeff;
}

std::vector<GaussianRational> certified_roots(const UPoly& s) {
  const std::size_t e = s.size() - 1;
  if (e == 0) return {};
  if (e == 1) return {-(s[0] / s[1])};
  EigenMatrix companion = EigenMatrix::Zero(static_cast<Index>(e), static_cast<Index>(e));
  const Complex lead = s.back().to_complex();
  for (std::size_t i = 1; i < e; ++i) companion(static_cast<Index>(i), static_cast<Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < e; ++i) companion(static_cast<Index>(i), static_cast<Index>(e - 1)) = -s[i].to_complex() / lead;
  Eigen::ComplexEigenSolver<EigenMatrix> solver(companion, false);
  std::vector<GaussianRational> roots;
  for (Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const Complex z = solver.eigenvalues()(i);
    bool certified = false;
    for (long max_den : {1000000L, 10000L, 100L}) {
      GaussianRational q = rationalize(z, max_den);
      if (evaluate(s, q).is_zero()) {
        if (std::find(roots.begin(), roots.end(), q) == roots.end()) roots.push_back(std::move(q));
        certified = true;
        break;
      }
    }
    if (!certified) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
      throw Error(ErrorCode::IrrationalSpectrum, std::string("eigenvalue near ") + buf + " is not a Gaussian rational");
    }
  }
  if (roots.size() != e) throw Error(ErrorCode::IrrationalSpectrum, "could not certify every eigenvalue");
  return roots;
}

Matrix restrict(const Matrix& a, const Matrix& basis, const Tolerance& tol) {
  auto x = solve(basis, a * basis, tol);
  if (!x) throw Error(ErrorCode::InvariantViolation, "subspace is not invariant");
  return *x;
}

bool points_less(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].backend() == Backend::Exact) {
      if (lex_less(a[i].exact(), b[i].exact())) return true;
      if (lex_less(b[i].exact(), a[i].exact())) return false;
    } else {
      const Complex x = a[i].to_complex(), y = b[i].to_complex();
      if (x.real() != y.real()) return x.real() < y.real();
      if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
  }
  return false;
}

class ExactDecomposer {
 public:
  ExactDecomposer(std::uint64_t seed, std::size_t d) : rng_(seed), d_(d) {}

  void run(const std::vector<Matrix>& ops, const Matrix& basis, std::vector<SpectralComponent>& out) {
    const std::size_t w = basis.cols();
    if (w == 0) return;
    Point lambda;
    bool single = true;
    for (const auto& a : ops) {
      const GaussianRational mu = a.trace().exact() / GaussianRational{static_cast<long>(w)};
      lambda.emplace_back(mu);
      single = single && (a - Matrix::identity(w, Backend::Exact).scaled(mu)).pow(static_cast<unsigned>(w)).is_zero();
    }
    if (single) {
      out.push_back({std::move(lambda), {d_, basis}});
      return;
    }
    for (int attempt = 0; attempt < 32; ++attempt) {
      Matrix c = Matrix::zeros(w, w, Backend::Exact);
      for (const auto& a : ops) c += a.scaled(draw());
      const UPoly p = characteristic_polynomial(c);
      const UPoly g = gcd(p, derivative(p));
      const UPoly sqfree = monic(quotient(p, g));
      const auto roots = certified_roots(sqfree);
      if (roots.size() < 2) continue;
      for (const auto& mu : roots) {
        const Matrix shifted = c - Matrix::identity(w, Backend::Exact).scaled(mu);
        const Matrix k = kernel_basis(shifted.pow(static_cast<unsigned>(w))).basis;
        std::vector<Matrix> sub;
        for (const auto& a : ops) sub.push_back(restrict(a, k, {}));
        run(sub, basis * k, out);
      }
      return;
    }
    throw Error(ErrorCode::InvariantViolation, "no separating linear combination found");
  }

 private:
  GaussianRational draw() {
    const long re = static_cast<long>(rng_() % 19) - 9;
    const long im = static_cast<long>(rng_() % 7) - 3;
    return {mpq_class(re), mpq_class(im)};
  }

  std::mt19937_64 rng_;
  std::size_t d_;
};

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; }

struct Cluster {
  std::vector<Index> members;
  Complex center;
};

std::vector<Cluster> cluster_eigenvalues(const Eigen::VectorXcd& ev, double radius, double scale) {
  const auto n = static_cast<std::size_t>(ev.size());
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(ev(static_cast<Index>(i)) - ev(static_cast<Index>(j))) <= radius) parent[find(i)] = find(j);
  // A defective eigenvalue of multiplicity k splits into k values within
  // roughly (eps * |C|)^(1/k) of each other; merge any k values that fit.
  const auto bound = [scale](std::size_t k) {
    return 10.0 * std::pow(2.2e-16 * scale, 1.0 / static_cast<double>(k));
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = n; k >= 2; --k) {
      std::vector<std::size_t> near;
      for (std::size_t j = 0; j < n; ++j)
        if (std::abs(ev(static_cast<Index>(i)) - ev(static_cast<Index>(j))) <= bound(k)) near.push_back(j);
      if (near.size() >= k) {
        for (std::size_t j : near) parent[find(j)] = find(i);
        break;
      }
    }
  }
  std::vector<Cluster> out;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(out.size());
      out.push_back({});
    }
    out[static_cast<std::size_t>(slot[r])].members.push_back(static_cast<Index>(i));
  }
  for (auto& c : out) {
    Complex s{};
    for (Index i : c.members) s += ev(i);
    c.center = s / static_cast<double>(c.members.size());
  }
  return out;
}

double spread(const Eigen::VectorXcd& ev) {
  double s = 0;
  for (Index i = 0; i < ev.size(); ++i)
    for (Index j = i + 1; j < ev.size(); ++j) s = std::max(s, std::abs(ev(i) - ev(j)));
  return s;
}

SpectralDecomposition float_decomposition(const CommutingTuple& t, const SpectrumOptions& opts) {
  const std::size_t d = t.dim();
  std::vector<EigenMatrix> ops;
  double scale = 1.0;
  for (const auto& a : t.operators()) {
    ops.push_back(to_eigen(a.floating()));
    scale = std::max(scale, ops.back().norm());
  }
  std::mt19937_64 rng(opts.seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    EigenMatrix c = EigenMatrix::Zero(static_cast<Index>(d), static_cast<Index>(d));
    for (const auto& a : ops) c += Complex(unit_draw(rng), unit_draw(rng)) * a;
    const double cnorm = std::max(1.0, c.norm());
    Eigen::ComplexEigenSolver<EigenMatrix> solver(c, true);
    const auto clusters = cluster_eigenvalues(solver.eigenvalues(), opts.cluster_radius, cnorm);

    SpectralDecomposition sd;
    bool separated = true;
    EigenMatrix all(static_cast<Index>(d), 0);
    for (const auto& cl : clusters) {
      const auto k = static_cast<Index>(cl.members.size());
      if (k > 1) {
        Eigen::VectorXcd vals(k);
        EigenMatrix vecs(static_cast<Index>(d), k);
        for (Index i = 0; i < k; ++i) {
          vals(i) = solver.eigenvalues()(cl.members[static_cast<std::size_t>(i)]);
          vecs.col(i) = solver.eigenvectors().col(cl.members[static_cast<std::size_t>(i)]).normalized();
        }
        Eigen::BDCSVD<EigenMatrix> vsvd(vecs);
        const double smallest = vsvd.singularValues()(k - 1);
        if (spread(vals) > 1e-12 * cnorm && smallest > 1e-4)
          throw Error(ErrorCode::ClusteringAmbiguity,
                      "distinct eigenvalues with independent eigenvectors fall within the clustering radius");
      }
      EigenMatrix shifted = c - cl.center * EigenMatrix::Identity(static_cast<Index>(d), static_cast<Index>(d));
      EigenMatrix power = EigenMatrix::Identity(static_cast<Index>(d), static_cast<Index>(d));
      for (Index i = 0; i < k; ++i) power = power * shifted;
      Eigen::BDCSVD<EigenMatrix> svd(power, Eigen::ComputeFullV);
      const EigenMatrix w = svd.matrixV().rightCols(k);
      Point lambda;
      for (const auto& a : ops) {
        const EigenMatrix r = w.adjoint() * a * w;
        if ((a * w - w * r).norm() > std::sqrt(opts.tol.relative) * scale)
          throw Error(ErrorCode::ClusteringAmbiguity, "cluster subspace is not invariant under the tuple");
        Eigen::ComplexEigenSolver<EigenMatrix> rs(r, false);
        const double bound = std::max(opts.cluster_radius, 10.0 * std::pow(2.2e-16 * scale, 1.0 / static_cast<double>(k)));
        if (spread(rs.eigenvalues()) > bound) separated = false;
        lambda.emplace_back(r.trace() / static_cast<double>(k));
      }
      if (!separated) break;
      EigenMatrix grown(static_cast<Index>(d), all.cols() + k);
      grown << all, w;
      all = std::move(grown);
      sd.components.push_back({std::move(lambda), {d, from_eigen(w)}});
    }
    if (!separated) continue;
    Eigen::BDCSVD<EigenMatrix> check(all);
    if (d > 0 && check.singularValues()(static_cast<Index>(d) - 1) < 1e-8 * std::max(1.0, check.singularValues()(0)))
      throw Error(ErrorCode::ClusteringAmbiguity, "cluster subspaces do not span the space");
    return sd;
  }
  throw Error(ErrorCode::ClusteringAmbiguity, "no linear combination separates the joint eigenvalues");
}

}  // namespace

std::size_t SpectralDecomposition::total_dim() const {
  std::size_t s = 0;
  for (const auto& c : components) s += c.space.dim();
  return s;
}

std::size_t SpectralDecomposition::find(const Point& lambda, double radius) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    const Point& mu = components[i].lambda;
    if (mu.size() != lambda.size()) continue;
    bool same = true;
    for (std::size_t j = 0; j < mu.size() && same; ++j) {
      if (mu[j].backend() == Backend::Exact && lambda[j].backend() == Backend::Exact)
        same = mu[j] == lambda[j];
      else
        same = std::abs(mu[j].to_complex() - lambda[j].to_complex()) <= radius;
    }
    if (same) return i;
  }
  return components.size();
}

SpectralDecomposition spectral_decomposition(const CommutingTuple& t, const SpectrumOptions& opts) {
  SpectralDecomposition sd;
  if (t.backend() == Backend::Exact) {
    ExactDecomposer dec(opts.seed, t.dim());
    dec.run(t.operators(), Matrix::identity(t.dim(), Backend::Exact), sd.components);
  } else {
    sd = float_decomposition(t, opts);
  }
  std::sort(sd.components.begin(), sd.components.end(),
            [](const SpectralComponent& a, const SpectralComponent& b) { return points_less(a.lambda, b.lambda); });
  if (!check_decomposition(t, sd, opts.tol))
    throw Error(ErrorCode::InvariantViolation, "joint spectral decomposition failed its own checks");
  return sd;
}

bool check_decomposition(const CommutingTuple& t, const SpectralDecomposition& sd, const Tolerance& tol) {
  const std::size_t d = t.dim();
  if (sd.total_dim() != d) return false;
  if (d == 0) return true;
  Matrix all = Matrix::zeros(d, 0, t.backend());
  for (const auto& c : sd.components) all = Matrix::hstack(all, c.space.basis);
  if (rank(all, tol) != d) return false;
  for (const auto& c : sd.components) {
    const std::size_t k = c.space.dim();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Tolerance loose{std::sqrt(tol.relative), std::sqrt(tol.relative) * t[i].frobenius_norm()};
      auto r = solve(c.space.basis, t[i] * c.space.basis, loose);
      if (!r) return false;
      const Matrix n = *r - Matrix::identity(k, t.backend()).scaled(c.lambda[i].to_backend(t.backend()));
      const Matrix p = n.pow(static_cast<unsigned>(k));
      if (t.backend() == Backend::Exact) {
        if (!p.is_zero()) return false;
      } else if (!negligible(p, std::pow(std::max(1.0, r->frobenius_norm()), static_cast<double>(k)), loose)) {
        return false;
      }
    }
  }
  return true;
}

std::size_t generalized_eigenspace_dim(const CommutingTuple& t, const Point& lambda, const Tolerance& tol) {
  const std::size_t d = t.dim();
  const CommutingTuple s = t.shifted(lambda);
  Subspace acc = Subspace::whole(d, t.backend());
  for (const auto& a : s.operators()) {
    Tolerance kt = tol;
    if (t.backend() == Backend::Float)
      kt.absolute = tol.relative * static_cast<double>(d) * std::pow(std::max(1.0, a.frobenius_norm()), static_cast<double>(d));
    acc = intersect(acc, kernel_basis(a.pow(static_cast<unsigned>(d)), kt), tol);
    if (acc.dim() == 0) break;
  }
  return acc.dim();
}

JointSpectrumReport joint_spectrum_equivalences(const CommutingTuple& t, const Point& lambda,
                                                const SpectrumOptions& opts) {
  JointSpectrumReport rep;
  const SpectralDecomposition sd = spectral_decomposition(t, opts);
  for (const auto& c : sd.components) rep.spectrum.emplace_back(c.lambda, c.space.dim());
  const CommutingTuple s = t.shifted(lambda);
  const HomologyProfile prof = koszul_homology(s, opts.tol);
  rep.in_taylor_spectrum = std::any_of(prof.dims.begin(), prof.dims.end(), [](std::size_t x) { return x > 0; });
  rep.is_joint_eigenvalue = generalized_eigenspace_dim(t, lambda, opts.tol) > 0;
  Matrix stacked = s[0];
  for (std::size_t i = 1; i < s.size(); ++i) stacked = Matrix::vstack(stacked, s[i]);
  rep.top_homology_nonzero = rank(stacked, opts.tol) < t.dim();
  return rep;
}

Matrix evaluate_polynomial(const Polynomial& p, const CommutingTuple& t) {
  if (p.vars() != t.size()) throw Error(ErrorCode::ArityMismatch, "polynomial arity differs from the tuple length");
  const Backend be = t.backend();
  const std::size_t d = t.dim();
  std::vector<std::vector<Matrix>> powers(t.size(), {Matrix::identity(d, be)});
  const auto power = [&](std::size_t i, unsigned e) -> const Matrix& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * t[i]);
    return powers[i][e];
  };
  Matrix out = Matrix::zeros(d, d, be);
  for (const auto& [m, c] : p.terms()) {
    Matrix term = Matrix::identity(d, be).scaled(Scalar(c).to_backend(be));
    for (std::size_t i = 0; i < t.size(); ++i)
      if (m[i]) term = term * power(i, m[i]);
    out += term;
  }
  return out;
}

CommutingTuple apply_polynomial_map(const CommutingTuple& t, const std::vector<Polynomial>& g, const Tolerance& tol) {
  if (g.empty()) throw Error(ErrorCode::ArityMismatch, "the polynomial map has no components");
  std::vector<Matrix> ops;
  for (const auto& p : g) ops.push_back(evaluate_polynomial(p, t));
  CommutingTuple out(std::move(ops), tol);
  for (const auto& m : out.operators())
    if (!commutes_with(t, m, tol)) throw Error(ErrorCode::InvariantViolation, "g(A) does not commute with A");
  return out;
}

std::vector<std::size_t> localized_homology(const CommutingTuple& t, const std::vector<Polynomial>& g,
                                            const Point& lambda, const SpectrumOptions& opts) {
  if (lambda.size() != t.size()) throw Error(ErrorCode::ArityMismatch, "point has the wrong number of coordinates");
  const KoszulComplex kc = build_complex(apply_polynomial_map(t, g, opts.tol), opts.tol);
  const std::size_t d = t.dim();
  const Tolerance loose{std::sqrt(opts.tol.relative)};
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= g.size(); ++k) {
    const HomologyPresentation h = present_homology(kc.chain, k, opts.tol);
    if (h.dim() == 0) {
      out.push_back(0);
      continue;
    }
    const std::size_t copies = kc.bases[k].size();
    std::vector<Matrix> induced;
    for (const auto& a : t.operators()) {
      Matrix lifted = Matrix::zeros(d * copies, d * copies, t.backend());
      for (std::size_t s = 0; s < copies; ++s) lifted.set_block(s * d, s * d, a);
      induced.push_back(induced_map(h, lifted, opts.tol));
    }
    out.push_back(generalized_eigenspace_dim(CommutingTuple(std::move(induced), loose), lambda, opts.tol));
  }
  return out;
}

}  // namespace koszul
