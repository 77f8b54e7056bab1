#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "koszul/linalg.hpp"
#include "koszul/matrix.hpp"

namespace koszul {

/// n square matrices of a common size, checked pairwise commuting at
/// construction: exactly in EXACT mode, ||[A_i,A_j]|| <= tol*||A_i||*||A_j||
/// in FLOAT mode.
class CommutingTuple {
 public:
  CommutingTuple(std::vector<Matrix> operators, const Tolerance& tol = {});

  std::size_t size() const noexcept { return ops_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  Backend backend() const noexcept { return backend_; }
  const std::vector<Matrix>& operators() const noexcept { return ops_; }
  const Matrix& operator[](std::size_t i) const { return ops_[i]; }

  /// (A_1 - lambda_1, ..., A_n - lambda_n).
  CommutingTuple shifted(const Point& lambda) const;
  /// A followed by B; the union must commute.
  CommutingTuple concat(const CommutingTuple& other, const Tolerance& tol = {}) const;
  CommutingTuple to_backend(Backend backend) const;

 private:
  CommutingTuple() = default;

  std::vector<Matrix> ops_;
  std::size_t dim_ = 0;
  Backend backend_ = Backend::Exact;
};

/// True when m commutes with every operator of t.
bool commutes_with(const CommutingTuple& t, const Matrix& m, const Tolerance& tol = {});

std::uint64_t binomial(unsigned n, unsigned k);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

/// Chain spaces C_0..C_top with differentials d_k : C_k -> C_{k-1}.
/// differentials[0] is the zero map C_0 -> 0.
struct ChainComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix> differentials;
  Backend backend = Backend::Exact;

  std::size_t top() const noexcept { return dims.empty() ? 0 : dims.size() - 1; }
  /// d_k for 0 <= k <= top + 1 (the out-of-range ends are zero maps).
  Matrix differential(std::size_t k) const;
};

/// Throws InvariantViolation unless d_{k-1} d_k = 0 for every k.
void check_square_zero(const ChainComplex& c, double scale, const Tolerance& tol = {});

std::vector<std::size_t> homology_dims(const ChainComplex& c, const Tolerance& tol = {});

struct KoszulComplex {
  CommutingTuple tuple;
  ChainComplex chain;  // chain.dims[k] = dim * C(n, k); basis index = subset_pos * dim + v
  std::vector<std::vector<std::vector<std::size_t>>> bases;  // bases[k] = k-subsets

  std::size_t n() const noexcept { return tuple.size(); }
  std::size_t dim() const noexcept { return tuple.dim(); }
};

/// Matrix of sum_i A_i (x) eps_i^*, with eps_i^*(e_I) = (-1)^(pos of i in I, 0-based) e_{I\i}.
/// Asserts d^2 = 0.
KoszulComplex build_complex(const CommutingTuple& t, const Tolerance& tol = {});

struct HomologyProfile {
  std::vector<std::size_t> dims;
  long long euler = 0;
  long long index = 0;
};

HomologyProfile profile_from_dims(std::vector<std::size_t> dims);

/// Homology dims, with H_n checked against the joint kernel and H_0 against
/// the cokernel of [A_1 ... A_n] (InvariantViolation on disagreement).
HomologyProfile homology(const KoszulComplex& c, const Tolerance& tol = {});
HomologyProfile koszul_homology(const CommutingTuple& t, const Tolerance& tol = {});

/// H_k = Z_k / B_k presented by a basis of B_k followed by representative
/// cycles completing it to a basis of Z_k.
struct HomologyPresentation {
  Matrix boundaries;       // C_k x dim B_k
  Matrix representatives;  // C_k x dim H_k
  std::size_t dim() const noexcept { return representatives.cols(); }
};

HomologyPresentation present_homology(const ChainComplex& c, std::size_t k, const Tolerance& tol = {});

/// Coordinates, in the representative basis, of the class of each column of
/// `cycles` (which must be cycles).
Matrix homology_class(const HomologyPresentation& h, const Matrix& cycles, const Tolerance& tol = {});

/// Matrix on H_k of a chain map acting on C_k by `map_k`.
Matrix induced_map(const HomologyPresentation& h, const Matrix& map_k, const Tolerance& tol = {});

/// Cone of the chain map b (x) 1 on K(A,V): C_k = K_k (+) K_{k-1}, d = [[d, b], [0, -d]].
ChainComplex mapping_cone(const KoszulComplex& c, const Matrix& b, const Tolerance& tol = {});

/// alpha_k : C_k -> K_k(A (+) b, V), (xi (x) e_I, eta (x) e_J) -> xi (x) e_I + eta (x) e_{n+1} ^ e_J.
std::vector<Matrix> cone_isomorphism(const KoszulComplex& c);

/// True iff alpha is a chain map and each alpha_k is bijective.
bool verify_cone_isomorphism(const CommutingTuple& t, const Matrix& b, const Tolerance& tol = {});

}  // namespace koszul
