#include "koszul/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace koszul {

namespace {

using EigenMatrix = Eigen::MatrixXcd;

EigenMatrix to_eigen(const FloatMatrix& m) {
  EigenMatrix out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return out;
}

Matrix from_eigen(const EigenMatrix& m) {
  FloatMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return Matrix(std::move(out));
}

struct GaussInt {
  mpz_class re;
  mpz_class im;
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  const mpz_class n = b.re * b.re + b.im * b.im;
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t())) {
    throw Error(ErrorCode::InvariantViolation, "Bareiss step produced an inexact division");
  }
  mpz_divexact(re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  return {std::move(re), std::move(im)};
}

std::size_t bareiss_rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<GaussInt>> a(rows, std::vector<GaussInt>(cols));
  // Scale each row by the lcm of its denominators to land in Z[i].
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).real().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).imag().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& re = m(i, j).real();
      const mpq_class& im = m(i, j).imag();
      a[i][j].re = re.get_num() * (l / re.get_den());
      a[i][j].im = im.get_num() * (l / im.get_den());
    }
  }
  GaussInt prev{1, 0};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const GaussInt& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const GaussInt lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (lead.is_zero() && a[i][j].is_zero()) continue;
        GaussInt t = sub(mul(piv, a[i][j]), mul(lead, a[r][j]));
        a[i][j] = (prev.re == 1 && sgn(prev.im) == 0) ? std::move(t) : exact_div(t, prev);
      }
      a[i][c] = GaussInt{0, 0};
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<double> singular_values(const EigenMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  Eigen::BDCSVD<EigenMatrix> svd(m);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

std::size_t float_rank(const EigenMatrix& m, const Tolerance& tol) {
  const auto s = singular_values(m);
  if (s.empty() || s.front() == 0.0) return 0;
  const double cut = std::max(tol.relative * s.front(), tol.absolute);
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [cut](double v) { return v > cut; }));
}

}  // namespace

std::vector<std::size_t> rref_in_place(ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const GaussianRational inv = GaussianRational{1} / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const GaussianRational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Matrix& m, const Tolerance& tol) {
  if (m.backend() == Backend::Exact) return bareiss_rank(m.exact());
  return float_rank(to_eigen(m.floating()), tol);
}

Subspace kernel_basis(const Matrix& m, const Tolerance& tol) {
  const std::size_t n = m.cols();
  if (m.backend() == Backend::Exact) {
    ExactMatrix r = m.exact();
    const auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    ExactMatrix basis(n, n - pivots.size());
    std::size_t col = 0;
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      basis(f, col) = GaussianRational{1};
      for (std::size_t row = 0; row < pivots.size(); ++row) basis(pivots[row], col) = -r(row, f);
      ++col;
    }
    return {n, Matrix(std::move(basis))};
  }
  const EigenMatrix e = to_eigen(m.floating());
  if (e.rows() == 0 || n == 0) return Subspace::whole(n, Backend::Float);
  Eigen::BDCSVD<EigenMatrix> svd(e, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  std::size_t rk = 0;
  if (s.size() && s(0) > 0.0)
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > std::max(tol.relative * s(0), tol.absolute)) ++rk;
  const EigenMatrix v = svd.matrixV();
  return {n, from_eigen(v.rightCols(static_cast<Eigen::Index>(n - rk)))};
}

Subspace image_basis(const Matrix& m, const Tolerance& tol) {
  const std::size_t rows = m.rows();
  if (m.backend() == Backend::Exact) return {rows, m.select_cols(independent_columns(m, tol))};
  const EigenMatrix e = to_eigen(m.floating());
  if (rows == 0 || e.cols() == 0) return Subspace::zero(rows, Backend::Float);
  Eigen::BDCSVD<EigenMatrix> svd(e, Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  std::size_t rk = 0;
  if (s.size() && s(0) > 0.0)
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > std::max(tol.relative * s(0), tol.absolute)) ++rk;
  const EigenMatrix u = svd.matrixU();
  return {rows, from_eigen(u.leftCols(static_cast<Eigen::Index>(rk)))};
}

std::vector<std::size_t> independent_columns(const Matrix& m, const Tolerance& tol) {
  if (m.backend() == Backend::Exact) {
    ExactMatrix r = m.exact();
    return rref_in_place(r);
  }
  const EigenMatrix e = to_eigen(m.floating());
  double scale = 0.0;
  for (Eigen::Index j = 0; j < e.cols(); ++j) scale = std::max(scale, e.col(j).norm());
  std::vector<std::size_t> kept;
  if (scale == 0.0) return kept;
  EigenMatrix q(e.rows(), 0);
  for (Eigen::Index j = 0; j < e.cols(); ++j) {
    Eigen::VectorXcd v = e.col(j);
    for (int pass = 0; pass < 2; ++pass)
      if (q.cols()) v -= q * (q.adjoint() * v);
    const double nv = v.norm();
    if (nv > tol.relative * scale * 10.0) {
      q.conservativeResize(Eigen::NoChange, q.cols() + 1);
      q.col(q.cols() - 1) = v / nv;
      kept.push_back(static_cast<std::size_t>(j));
    }
  }
  return kept;
}

std::size_t quotient_dim(const Subspace& big, const Subspace& small, const Tolerance& tol) {
  if (big.ambient != small.ambient) throw Error(ErrorCode::DimensionMismatch, "subspaces live in different spaces");
  if (!contains(big, small.basis, tol)) throw Error(ErrorCode::NotContained, "small subspace is not contained in big");
  return big.dim() - small.dim();
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  if (a.backend() != b.backend()) throw Error(ErrorCode::BackendMismatch, "mixed backends in solve");
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "row counts differ in solve");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  if (a.backend() == Backend::Exact) {
    ExactMatrix aug = Matrix::hstack(a, b).exact();
    const auto pivots = rref_in_place(aug);
    ExactMatrix x(n, k);
    for (std::size_t row = 0; row < pivots.size(); ++row) {
      if (pivots[row] >= n) return std::nullopt;
      for (std::size_t j = 0; j < k; ++j) x(pivots[row], j) = aug(row, n + j);
    }
    return Matrix(std::move(x));
  }
  const EigenMatrix ea = to_eigen(a.floating());
  const EigenMatrix eb = to_eigen(b.floating());
  EigenMatrix x = EigenMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
  if (n && a.rows()) {
    Eigen::BDCSVD<EigenMatrix> svd(ea, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(tol.relative);
    x = svd.solve(eb);
  }
  const double residual = (ea * x - eb).norm();
  const double scale = ea.norm() * x.norm() + eb.norm();
  if (residual > std::sqrt(tol.relative) * std::max(scale, 1e-300) + tol.absolute && residual > 1e-300) return std::nullopt;
  return from_eigen(x);
}

Subspace span(const Matrix& columns, const Tolerance& tol) { return image_basis(columns, tol); }

Subspace intersect(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  if (a.ambient != b.ambient) throw Error(ErrorCode::DimensionMismatch, "subspaces live in different spaces");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient, a.backend());
  const Subspace k = kernel_basis(Matrix::hstack(a.basis, -b.basis), tol);
  const Matrix coeffs = k.basis.block(0, 0, a.dim(), k.dim());
  return image_basis(a.basis * coeffs, tol);
}

Subspace sum(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  if (a.ambient != b.ambient) throw Error(ErrorCode::DimensionMismatch, "subspaces live in different spaces");
  return image_basis(Matrix::hstack(a.basis, b.basis), tol);
}

bool contains(const Subspace& big, const Matrix& vectors, const Tolerance& tol) {
  if (vectors.cols() == 0) return true;
  if (big.dim() == 0) return negligible(vectors, 1.0, tol);
  return rank(Matrix::hstack(big.basis, vectors), tol) == rank(big.basis, tol);
}

}  // namespace koszul
