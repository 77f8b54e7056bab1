#include "koszul/koszul.hpp"

#include <map>
#include <utility>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

bool small(const Matrix& m, double scale, const Tolerance& tol) { return negligible(m, scale, tol); }

double tuple_scale(const std::vector<Matrix>& ops) {
  double s = 1.0;
  for (const auto& a : ops) s += a.frobenius_norm();
  return s * s;
}

}  // namespace

CommutingTuple::CommutingTuple(std::vector<Matrix> operators, const Tolerance& tol) : ops_(std::move(operators)) {
  if (ops_.empty()) throw Error(ErrorCode::InvalidArgument, "a commuting tuple needs at least one operator");
  dim_ = ops_.front().rows();
  backend_ = ops_.front().backend();
  for (const auto& a : ops_) {
    if (!a.is_square() || a.rows() != dim_)
      throw Error(ErrorCode::DimensionMismatch, "tuple operators must be square of a common size");
    if (a.backend() != backend_) throw Error(ErrorCode::BackendMismatch, "tuple operators use different backends");
  }
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    for (std::size_t j = i + 1; j < ops_.size(); ++j) {
      const double scale = ops_[i].frobenius_norm() * ops_[j].frobenius_norm();
      if (!small(Matrix::commutator(ops_[i], ops_[j]), scale, tol)) {
        throw Error(ErrorCode::NotCommuting,
                    "operators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");
      }
    }
  }
}

CommutingTuple CommutingTuple::shifted(const Point& lambda) const {
  if (lambda.size() != ops_.size()) throw Error(ErrorCode::ArityMismatch, "shift point has the wrong length");
  CommutingTuple out = *this;
  for (std::size_t i = 0; i < ops_.size(); ++i)
    out.ops_[i] -= Matrix::identity(dim_, backend_).scaled(lambda[i].to_backend(backend_));
  return out;
}

CommutingTuple CommutingTuple::concat(const CommutingTuple& other, const Tolerance& tol) const {
  std::vector<Matrix> ops = ops_;
  ops.insert(ops.end(), other.ops_.begin(), other.ops_.end());
  return CommutingTuple(std::move(ops), tol);
}

CommutingTuple CommutingTuple::to_backend(Backend backend) const {
  CommutingTuple out = *this;
  for (auto& a : out.ops_) a = a.to_backend(backend);
  out.backend_ = backend;
  return out;
}

bool commutes_with(const CommutingTuple& t, const Matrix& m, const Tolerance& tol) {
  if (!m.is_square() || m.rows() != t.dim()) return false;
  for (const auto& a : t.operators())
    if (!small(Matrix::commutator(a, m), a.frobenius_norm() * m.frobenius_norm(), tol)) return false;
  return true;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Matrix ChainComplex::differential(std::size_t k) const {
  if (k == 0) return Matrix::zeros(0, dims.empty() ? 0 : dims[0], backend);
  if (k > top()) return Matrix::zeros(dims.empty() ? 0 : dims[top()], 0, backend);
  return differentials[k];
}

void check_square_zero(const ChainComplex& c, double scale, const Tolerance& tol) {
  for (std::size_t k = 2; k <= c.top(); ++k) {
    if (!small(c.differentials[k - 1] * c.differentials[k], scale, tol))
      throw Error(ErrorCode::InvariantViolation, "d_" + std::to_string(k - 1) + " d_" + std::to_string(k) + " != 0");
  }
}

std::vector<std::size_t> homology_dims(const ChainComplex& c, const Tolerance& tol) {
  std::vector<std::size_t> ranks(c.top() + 2, 0);
  for (std::size_t k = 1; k <= c.top(); ++k) ranks[k] = rank(c.differentials[k], tol);
  std::vector<std::size_t> out(c.dims.size());
  for (std::size_t k = 0; k < c.dims.size(); ++k) out[k] = c.dims[k] - ranks[k] - ranks[k + 1];
  return out;
}

KoszulComplex build_complex(const CommutingTuple& t, const Tolerance& tol) {
  const std::size_t n = t.size();
  const std::size_t d = t.dim();
  KoszulComplex kc{t, {}, {}};
  kc.chain.backend = t.backend();
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    kc.bases.push_back(subsets(n, k));
    for (std::size_t p = 0; p < kc.bases[k].size(); ++p) index[k][kc.bases[k][p]] = p;
    kc.chain.dims.push_back(d * kc.bases[k].size());
  }
  kc.chain.differentials.push_back(Matrix::zeros(0, kc.chain.dims[0], t.backend()));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix dk = Matrix::zeros(kc.chain.dims[k - 1], kc.chain.dims[k], t.backend());
    for (std::size_t a = 0; a < kc.bases[k].size(); ++a) {
      const auto& subset = kc.bases[k][a];
      for (std::size_t pos = 0; pos < subset.size(); ++pos) {
        std::vector<std::size_t> rest = subset;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
        const std::size_t b = index[k - 1].at(rest);
        dk.set_block(b * d, a * d, t[subset[pos]], pos % 2 == 0 ? 1 : -1);
      }
    }
    kc.chain.differentials.push_back(std::move(dk));
  }
  check_square_zero(kc.chain, tuple_scale(t.operators()), tol);
  return kc;
}

HomologyProfile profile_from_dims(std::vector<std::size_t> dims) {
  HomologyProfile p;
  for (std::size_t k = 0; k < dims.size(); ++k) p.euler += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[k]);
  p.index = -p.euler;
  p.dims = std::move(dims);
  return p;
}

HomologyProfile homology(const KoszulComplex& c, const Tolerance& tol) {
  HomologyProfile p = profile_from_dims(homology_dims(c.chain, tol));
  const std::size_t d = c.dim();
  Matrix stacked = c.tuple[0];
  Matrix row = c.tuple[0];
  for (std::size_t i = 1; i < c.n(); ++i) {
    stacked = Matrix::vstack(stacked, c.tuple[i]);
    row = Matrix::hstack(row, c.tuple[i]);
  }
  if (p.dims[c.n()] != d - rank(stacked, tol))
    throw Error(ErrorCode::InvariantViolation, "top homology disagrees with the joint kernel");
  if (p.dims[0] != d - rank(row, tol))
    throw Error(ErrorCode::InvariantViolation, "H_0 disagrees with the joint cokernel");
  return p;
}

HomologyProfile koszul_homology(const CommutingTuple& t, const Tolerance& tol) {
  return homology(build_complex(t, tol), tol);
}

HomologyPresentation present_homology(const ChainComplex& c, std::size_t k, const Tolerance& tol) {
  const Subspace cycles = kernel_basis(c.differential(k), tol);
  const Subspace bounds = image_basis(c.differential(k + 1), tol);
  const Matrix joined = Matrix::hstack(bounds.basis, cycles.basis);
  std::vector<std::size_t> reps;
  for (std::size_t j : independent_columns(joined, tol))
    if (j >= bounds.dim()) reps.push_back(j);
  if (bounds.dim() + reps.size() != cycles.dim())
    throw Error(ErrorCode::InvariantViolation, "boundaries are not contained in cycles");
  return {bounds.basis, joined.select_cols(reps)};
}

Matrix homology_class(const HomologyPresentation& h, const Matrix& cycles, const Tolerance& tol) {
  const std::size_t nb = h.boundaries.cols();
  const auto x = solve(Matrix::hstack(h.boundaries, h.representatives), cycles, tol);
  if (!x) throw Error(ErrorCode::InvariantViolation, "vector is not a cycle");
  return x->block(nb, 0, h.dim(), cycles.cols());
}

Matrix induced_map(const HomologyPresentation& h, const Matrix& map_k, const Tolerance& tol) {
  return homology_class(h, map_k * h.representatives, tol);
}

namespace {

Matrix degreewise(const Matrix& b, std::size_t copies) {
  const std::size_t d = b.rows();
  Matrix out = Matrix::zeros(d * copies, d * copies, b.backend());
  for (std::size_t s = 0; s < copies; ++s) out.set_block(s * d, s * d, b);
  return out;
}

}  // namespace

ChainComplex mapping_cone(const KoszulComplex& c, const Matrix& b, const Tolerance& tol) {
  if (!commutes_with(c.tuple, b, tol)) throw Error(ErrorCode::NotCommuting, "cone map does not commute with the tuple");
  const std::size_t n = c.n();
  const std::size_t d = c.dim();
  const auto xdim = [&](std::ptrdiff_t k) -> std::size_t {
    return (k < 0 || k > static_cast<std::ptrdiff_t>(n)) ? 0 : c.chain.dims[static_cast<std::size_t>(k)];
  };
  ChainComplex cone;
  cone.backend = c.chain.backend;
  for (std::size_t k = 0; k <= n + 1; ++k) cone.dims.push_back(xdim(k) + xdim(static_cast<std::ptrdiff_t>(k) - 1));
  cone.differentials.push_back(Matrix::zeros(0, cone.dims[0], cone.backend));
  for (std::size_t k = 1; k <= n + 1; ++k) {
    Matrix m = Matrix::zeros(cone.dims[k - 1], cone.dims[k], cone.backend);
    const std::size_t xk = xdim(k), xk1 = xdim(static_cast<std::ptrdiff_t>(k) - 1);
    if (k <= n) m.set_block(0, 0, c.chain.differential(k));
    m.set_block(0, xk, degreewise(b, xk1 / d));
    if (k >= 2) m.set_block(xk1, xk, c.chain.differential(k - 1), -1);
    cone.differentials.push_back(std::move(m));
  }
  check_square_zero(cone, tuple_scale(c.tuple.operators()) + b.frobenius_norm() * b.frobenius_norm(), tol);
  return cone;
}

std::vector<Matrix> cone_isomorphism(const KoszulComplex& c) {
  const std::size_t n = c.n();
  const std::size_t d = c.dim();
  const Backend be = c.chain.backend;
  std::vector<Matrix> alpha;
  for (std::size_t k = 0; k <= n + 1; ++k) {
    const auto target = subsets(n + 1, k);
    std::map<std::vector<std::size_t>, std::size_t> where;
    for (std::size_t p = 0; p < target.size(); ++p) where[target[p]] = p;
    const std::size_t xk = k <= n ? c.bases[k].size() : 0;
    const std::size_t xk1 = k >= 1 ? c.bases[k - 1].size() : 0;
    Matrix a = Matrix::zeros(target.size() * d, (xk + xk1) * d, be);
    const Matrix id = Matrix::identity(d, be);
    for (std::size_t s = 0; s < xk; ++s) a.set_block(where.at(c.bases[k][s]) * d, s * d, id);
    for (std::size_t s = 0; s < xk1; ++s) {
      std::vector<std::size_t> j = c.bases[k - 1][s];
      const int sign = j.size() % 2 == 0 ? 1 : -1;  // e_{n+1} ^ e_J = (-1)^|J| e_{J u {n+1}}
      j.push_back(n);
      a.set_block(where.at(j) * d, (xk + s) * d, id, sign);
    }
    alpha.push_back(std::move(a));
  }
  return alpha;
}

bool verify_cone_isomorphism(const CommutingTuple& t, const Matrix& b, const Tolerance& tol) {
  const KoszulComplex kc = build_complex(t, tol);
  const ChainComplex cone = mapping_cone(kc, b, tol);
  const KoszulComplex ext = build_complex(t.concat(CommutingTuple({b}, tol), tol), tol);
  const std::vector<Matrix> alpha = cone_isomorphism(kc);
  const double scale = tuple_scale(ext.tuple.operators());
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (!alpha[k].is_square() || rank(alpha[k], tol) != alpha[k].rows()) return false;
    if (k == 0) continue;
    const Matrix lhs = ext.chain.differential(k) * alpha[k];
    const Matrix rhs = alpha[k - 1] * cone.differential(k);
    if (!small(lhs - rhs, scale, tol)) return false;
  }
  return true;
}

}  // namespace koszul
