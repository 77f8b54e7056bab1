#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "koszul/matrix.hpp"

namespace koszul {

/// A subspace of C^ambient given by linearly independent basis columns.
struct Subspace {
  std::size_t ambient = 0;
  Matrix basis;  // ambient x dim

  std::size_t dim() const noexcept { return basis.cols(); }
  Backend backend() const noexcept { return basis.backend(); }

  static Subspace zero(std::size_t ambient, Backend backend) {
    return {ambient, Matrix::zeros(ambient, 0, backend)};
  }
  static Subspace whole(std::size_t ambient, Backend backend) {
    return {ambient, Matrix::identity(ambient, backend)};
  }
};

// EXACT: fraction-free (Bareiss) elimination over the Gaussian integers.
// FLOAT: count of singular values above tol * sigma_max.
std::size_t rank(const Matrix& m, const Tolerance& tol = {});

/// Kernel basis; dim = cols - rank. EXACT uses reduced row echelon form,
/// FLOAT uses the trailing right singular vectors.
Subspace kernel_basis(const Matrix& m, const Tolerance& tol = {});

/// Column-space basis. EXACT returns the pivot columns of m itself.
Subspace image_basis(const Matrix& m, const Tolerance& tol = {});

/// dim big - dim small, after checking small is contained in big
/// (NotContained otherwise).
std::size_t quotient_dim(const Subspace& big, const Subspace& small, const Tolerance& tol = {});

/// Indices of the columns kept by a left-to-right greedy scan for linear
/// independence.
std::vector<std::size_t> independent_columns(const Matrix& m, const Tolerance& tol = {});

/// Some X with a * X = b, or nullopt if the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

Subspace span(const Matrix& columns, const Tolerance& tol = {});
Subspace intersect(const Subspace& a, const Subspace& b, const Tolerance& tol = {});
Subspace sum(const Subspace& a, const Subspace& b, const Tolerance& tol = {});
bool contains(const Subspace& big, const Matrix& vectors, const Tolerance& tol = {});

/// Reduced row echelon form over Q(i); returns pivot column indices.
std::vector<std::size_t> rref_in_place(ExactMatrix& m);

}  // namespace koszul
