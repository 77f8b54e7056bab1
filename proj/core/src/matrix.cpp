#include "koszul/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace koszul {

namespace {

template <class T>
T one_of() {
  if constexpr (std::is_same_v<T, Complex>) {
    return Complex{1.0, 0.0};
  } else {
    return T{1};
  }
}

template <class T>
bool is_zero_entry(const T& v) {
  if constexpr (std::is_same_v<T, Complex>) {
    return v == Complex{};
  } else {
    return v.is_zero();
  }
}

template <class T>
DenseMatrix<T> multiply(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  DenseMatrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (is_zero_entry(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (is_zero_entry(b(k, j))) continue;
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

void check_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.backend() != b.backend()) throw Error(ErrorCode::BackendMismatch, std::string("mixed backends in ") + op);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, std::string("shape mismatch in ") + op);
  }
}

}  // namespace

Matrix Matrix::zeros(std::size_t rows, std::size_t cols, Backend backend) {
  if (backend == Backend::Exact) return Matrix(ExactMatrix(rows, cols));
  return Matrix(FloatMatrix(rows, cols));
}

Matrix Matrix::identity(std::size_t n, Backend backend) {
  Matrix m = zeros(n, n, backend);
  std::visit(
      [n](auto& s) {
        using T = std::decay_t<decltype(s(0, 0))>;
        for (std::size_t i = 0; i < n; ++i) s(i, i) = one_of<T>();
      },
      m.storage_);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  Backend backend = Backend::Exact;
  bool first = true;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (const auto& v : row) {
      if (first) {
        backend = v.backend();
        first = false;
      } else if (v.backend() != backend) {
        throw Error(ErrorCode::BackendMismatch, "matrix entries mix exact and float scalars");
      }
    }
  }
  Matrix m = zeros(r, c, backend);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  return m;
}

Matrix Matrix::from_exact_rows(const std::vector<std::vector<GaussianRational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return Matrix(std::move(m));
}

Matrix Matrix::column(const std::vector<Scalar>& entries) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(entries.size());
  for (const auto& e : entries) rows.push_back({e});
  return from_rows(rows);
}

std::size_t Matrix::rows() const noexcept {
  return std::visit([](const auto& s) { return s.rows(); }, storage_);
}

std::size_t Matrix::cols() const noexcept {
  return std::visit([](const auto& s) { return s.cols(); }, storage_);
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  return std::visit([i, j](const auto& s) { return Scalar(s(i, j)); }, storage_);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& value) {
  if (value.backend() != backend()) throw Error(ErrorCode::BackendMismatch, "entry backend differs from matrix backend");
  if (backend() == Backend::Exact) {
    exact()(i, j) = value.exact();
  } else {
    floating()(i, j) = value.to_complex();
  }
}

const ExactMatrix& Matrix::exact() const {
  if (const auto* m = std::get_if<ExactMatrix>(&storage_)) return *m;
  throw Error(ErrorCode::BackendMismatch, "exact matrix expected");
}

ExactMatrix& Matrix::exact() {
  if (auto* m = std::get_if<ExactMatrix>(&storage_)) return *m;
  throw Error(ErrorCode::BackendMismatch, "exact matrix expected");
}

const FloatMatrix& Matrix::floating() const {
  if (const auto* m = std::get_if<FloatMatrix>(&storage_)) return *m;
  throw Error(ErrorCode::BackendMismatch, "float matrix expected");
}

FloatMatrix& Matrix::floating() {
  if (auto* m = std::get_if<FloatMatrix>(&storage_)) return *m;
  throw Error(ErrorCode::BackendMismatch, "float matrix expected");
}

Matrix Matrix::to_backend(Backend target) const {
  if (target == backend()) return *this;
  if (target == Backend::Exact) throw Error(ErrorCode::BackendMismatch, "float matrices cannot be made exact");
  const ExactMatrix& e = exact();
  FloatMatrix f(e.rows(), e.cols());
  for (std::size_t k = 0; k < e.data().size(); ++k) f.data()[k] = e.data()[k].to_complex();
  return Matrix(std::move(f));
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  std::visit(
      [](auto& s) {
        for (auto& v : s.data()) v = -v;
      },
      out.storage_);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  check_same_shape(*this, o, "addition");
  std::visit(
      [&o](auto& s) {
        using M = std::decay_t<decltype(s)>;
        const auto& od = std::get<M>(o.storage_).data();
        for (std::size_t k = 0; k < od.size(); ++k) s.data()[k] += od[k];
      },
      storage_);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  check_same_shape(*this, o, "subtraction");
  std::visit(
      [&o](auto& s) {
        using M = std::decay_t<decltype(s)>;
        const auto& od = std::get<M>(o.storage_).data();
        for (std::size_t k = 0; k < od.size(); ++k) s.data()[k] -= od[k];
      },
      storage_);
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.backend() != b.backend()) throw Error(ErrorCode::BackendMismatch, "mixed backends in product");
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ in product");
  if (a.backend() == Backend::Exact) return Matrix(multiply(a.exact(), b.exact()));
  return Matrix(multiply(a.floating(), b.floating()));
}

Matrix Matrix::scaled(const Scalar& s) const {
  if (s.backend() != backend()) throw Error(ErrorCode::BackendMismatch, "scalar backend differs from matrix backend");
  Matrix out = *this;
  if (backend() == Backend::Exact) {
    const GaussianRational& c = s.exact();
    for (auto& v : out.exact().data()) v *= c;
  } else {
    const Complex c = s.to_complex();
    for (auto& v : out.floating().data()) v *= c;
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.backend() == b.backend() && a.rows() == b.rows() && a.cols() == b.cols() &&
         a.storage_ == b.storage_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows() || c0 + nc > cols()) throw Error(ErrorCode::DimensionMismatch, "block out of range");
  Matrix out = zeros(nr, nc, backend());
  std::visit(
      [&](auto& dst) {
        using M = std::decay_t<decltype(dst)>;
        const M& src = std::get<M>(storage_);
        for (std::size_t i = 0; i < nr; ++i)
          for (std::size_t j = 0; j < nc; ++j) dst(i, j) = src(r0 + i, c0 + j);
      },
      out.storage_);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& src, int sign) {
  if (src.backend() != backend()) throw Error(ErrorCode::BackendMismatch, "mixed backends in set_block");
  if (r0 + src.rows() > rows() || c0 + src.cols() > cols()) {
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  }
  std::visit(
      [&](auto& dst) {
        using M = std::decay_t<decltype(dst)>;
        const M& s = std::get<M>(src.storage_);
        for (std::size_t i = 0; i < s.rows(); ++i)
          for (std::size_t j = 0; j < s.cols(); ++j) dst(r0 + i, c0 + j) = sign < 0 ? -s(i, j) : s(i, j);
      },
      storage_);
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix out = zeros(idx.size(), cols(), backend());
  std::visit(
      [&](auto& dst) {
        using M = std::decay_t<decltype(dst)>;
        const M& src = std::get<M>(storage_);
        for (std::size_t i = 0; i < idx.size(); ++i)
          for (std::size_t j = 0; j < src.cols(); ++j) dst(i, j) = src(idx[i], j);
      },
      out.storage_);
  return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix out = zeros(rows(), idx.size(), backend());
  std::visit(
      [&](auto& dst) {
        using M = std::decay_t<decltype(dst)>;
        const M& src = std::get<M>(storage_);
        for (std::size_t i = 0; i < src.rows(); ++i)
          for (std::size_t j = 0; j < idx.size(); ++j) dst(i, j) = src(i, idx[j]);
      },
      out.storage_);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out = zeros(cols(), rows(), backend());
  std::visit(
      [&](auto& dst) {
        using M = std::decay_t<decltype(dst)>;
        const M& src = std::get<M>(storage_);
        for (std::size_t i = 0; i < src.rows(); ++i)
          for (std::size_t j = 0; j < src.cols(); ++j) dst(j, i) = src(i, j);
      },
      out.storage_);
  return out;
}

Matrix Matrix::pow(unsigned k) const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "power of a non-square matrix");
  Matrix result = identity(rows(), backend());
  Matrix base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "trace of a non-square matrix");
  Scalar t = Scalar::zero(backend());
  for (std::size_t i = 0; i < rows(); ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::visit(
      [](const auto& s) {
        for (const auto& v : s.data())
          if (!is_zero_entry(v)) return false;
        return true;
      },
      storage_);
}

double Matrix::frobenius_norm() const {
  double acc = 0.0;
  if (backend() == Backend::Exact) {
    for (const auto& v : exact().data()) acc += v.norm().get_d();
  } else {
    for (const auto& v : floating().data()) acc += std::norm(v);
  }
  return std::sqrt(acc);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.backend() != b.backend()) throw Error(ErrorCode::BackendMismatch, "mixed backends in hstack");
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "row counts differ in hstack");
  Matrix out = zeros(a.rows(), a.cols() + b.cols(), a.backend());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.backend() != b.backend()) throw Error(ErrorCode::BackendMismatch, "mixed backends in vstack");
  if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "column counts differ in vstack");
  Matrix out = zeros(a.rows() + b.rows(), a.cols(), a.backend());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  if (a.backend() != b.backend()) throw Error(ErrorCode::BackendMismatch, "mixed backends in kron");
  Matrix out = zeros(a.rows() * b.rows(), a.cols() * b.cols(), a.backend());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar aij = a.at(i, j);
      if (aij.is_zero()) continue;
      out.set_block(i * b.rows(), j * b.cols(), b.scaled(aij));
    }
  }
  return out;
}

Matrix Matrix::commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

bool negligible(const Matrix& m, double scale, const Tolerance& tol) {
  if (m.backend() == Backend::Exact) return m.is_zero();
  return m.frobenius_norm() <= tol.relative * std::max(scale, 1e-300);
}

}  // namespace koszul
