#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/scalar.hpp"

namespace koszul {

/// Row-major dense storage over one scalar field.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const noexcept { return data_; }
  std::vector<T>& data() noexcept { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = DenseMatrix<GaussianRational>;
using FloatMatrix = DenseMatrix<Complex>;

/// Dense matrix whose entries all share one backend.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(ExactMatrix m) : storage_(std::move(m)) {}
  explicit Matrix(FloatMatrix m) : storage_(std::move(m)) {}

  static Matrix zeros(std::size_t rows, std::size_t cols, Backend backend);
  static Matrix identity(std::size_t n, Backend backend);
  /// Throws BackendMismatch on mixed rows, DimensionMismatch on ragged rows.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_exact_rows(const std::vector<std::vector<GaussianRational>>& rows);
  /// Column vector.
  static Matrix column(const std::vector<Scalar>& entries);

  std::size_t rows() const noexcept;
  std::size_t cols() const noexcept;
  Backend backend() const noexcept {
    return std::holds_alternative<ExactMatrix>(storage_) ? Backend::Exact : Backend::Float;
  }
  bool is_square() const noexcept { return rows() == cols(); }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& value);

  const ExactMatrix& exact() const;
  ExactMatrix& exact();
  const FloatMatrix& floating() const;
  FloatMatrix& floating();

  Matrix to_backend(Backend backend) const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& s) const;

  /// Exact comparison (entrywise equality, same backend and shape).
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// this[r0.., c0..] = sign * src
  void set_block(std::size_t r0, std::size_t c0, const Matrix& src, int sign = 1);
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix col(std::size_t j) const { return block(0, j, rows(), 1); }

  Matrix transpose() const;
  Matrix pow(unsigned k) const;
  Scalar trace() const;
  /// Exactly zero (both backends).
  bool is_zero() const;
  double frobenius_norm() const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix kron(const Matrix& a, const Matrix& b);
  /// a*b - b*a
  static Matrix commutator(const Matrix& a, const Matrix& b);

 private:
  std::variant<ExactMatrix, FloatMatrix> storage_;
};

/// Relative tolerance policy for the float backend. Values travel explicitly;
/// there is no global default state.
struct Tolerance {
  double relative = 1e-9;
  /// Singular values at or below this are zero even when the matrix itself
  /// is tiny.
  double absolute = 0.0;
};

/// Exact zero in EXACT mode, otherwise ||m||_F <= tol * scale.
bool negligible(const Matrix& m, double scale, const Tolerance& tol);

}  // namespace koszul
