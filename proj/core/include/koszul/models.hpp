#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koszul/koszul.hpp"
#include "koszul/multiplicity.hpp"

namespace koszul {

/// Polydisc (one radius per coordinate) or ball (single radius) in C^n.
/// The coordinate tuple T_z on the associated Hardy/Bergman space has
/// Ind(T_z - lambda) = -1 for lambda inside and 0 outside the closure.
struct DomainDescriptor {
  enum class Kind { Polydisc, Ball };

  Kind kind = Kind::Polydisc;
  std::vector<GaussianRational> center;
  std::vector<mpq_class> radii;

  DomainDescriptor(Kind kind, std::vector<GaussianRational> center, std::vector<mpq_class> radii);
  static DomainDescriptor unit_polydisc(std::size_t n);
  static DomainDescriptor unit_ball(std::size_t n);

  std::size_t dim() const noexcept { return center.size(); }
  std::string to_string() const;
};

std::string_view to_string(DomainDescriptor::Kind kind) noexcept;

enum class Location { Inside, Outside, Boundary };

std::string_view to_string(Location loc) noexcept;

/// Exact comparison of |lambda_i - c_i|^2 with r^2 for exact points; FLOAT
/// points within `margin` of the boundary are reported as Boundary.
Location locate(const DomainDescriptor& domain, const Point& lambda, double margin = 1e-6);

/// Ind(T_z - lambda): -1 inside, 0 outside, ZeroOnBoundary on the boundary.
int coordinate_index(const DomainDescriptor& domain, const Point& lambda, double margin = 1e-6);

struct ModelTuple {
  DomainDescriptor domain;
  std::vector<Polynomial> system;  // square
};

struct ZeroRecord {
  Point lambda;
  std::size_t multiplicity = 0;
  Location location = Location::Outside;
  int coordinate_index = 0;
};

struct ModelOptions {
  Backend backend = Backend::Exact;  // how the zero table is computed
  SpectrumOptions spectrum;
  MultiplicityOptions multiplicity;
  double boundary_margin = 1e-6;
  std::size_t winding_samples = 4096;
};

/// Zeros with multiplicities, tagged by location. Throws ZeroOnBoundary.
std::vector<ZeroRecord> classify_zeros(const ModelTuple& mt, const ModelOptions& opts = {});

struct Verdict {
  std::string name;
  bool pass = false;
};

struct IndexReport {
  std::vector<ZeroRecord> zeros;
  std::vector<long long> local_indices;  // aligned with zeros
  long long global_index = 0;
  std::size_t quotient_dim = 0;
  Backend zero_backend = Backend::Exact;
  std::optional<double> winding;  // n = 1 only
  std::vector<Verdict> verdicts;

  bool pass() const;
};

/// Ind(T_g) = sum over interior zeros of deg_lambda(g) * Ind(T_z - lambda),
/// with the cross-checks attached as verdicts.
IndexReport global_index(const ModelTuple& mt, const ModelOptions& opts = {});

/// -deg_lambda(g) inside, 0 outside; ZeroOnBoundary on the boundary,
/// NotAZero when g(lambda) != 0.
long long local_index(const ModelTuple& mt, const std::vector<GaussianRational>& lambda,
                      const ModelOptions& opts = {});

using IntMatrix = std::vector<std::vector<long long>>;

/// R(n): rows x cols with entries C(n, i - j).
IntMatrix binomial_right(unsigned n, std::size_t rows, std::size_t cols);
/// L(n): rows x cols with entries (-1)^(i-j) C(n + i - j - 1, i - j).
IntMatrix binomial_left(unsigned n, std::size_t rows, std::size_t cols);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct BinomialIdentityCheck {
  std::size_t cases = 0;
  std::size_t failures = 0;
  bool pass() const { return failures == 0; }
};

/// For 1 <= n <= m <= max_m: L(n)R(n) = I, L(n)R(m) = [C(m-n, i-j)], and
/// sum_k (-1)^k C(n+k-1, k) C(m, t-k) = C(m-n, t) for 0 <= t <= range.
BinomialIdentityCheck check_binomial_identities(unsigned max_m, unsigned range);

/// dims of H_q(g, H_lambda) predicted from dims of H(A - lambda) (n + 1
/// entries) for m >= n equations: sum_p C(m-n, p) dims[q-p], q = 0..m.
std::vector<long long> regular_case_identities(const std::vector<long long>& dims, std::size_t m);

struct ReciprocityTerm {
  Point lambda;
  std::size_t multiplicity = 0;
  Location in_a = Location::Outside;
  Location in_b = Location::Outside;
};

struct ReciprocityReport {
  std::vector<ReciprocityTerm> zeros;
  long long lhs = 0;  // sum_mu Ind(mu - A) Ind_mu(g(B))
  long long rhs = 0;  // sum_lambda Ind_lambda(g(A)) Ind(lambda - B)
  bool holds() const { return lhs == rhs; }
};

/// Throws ZeroOnBoundary if some zero of g lies on either boundary.
ReciprocityReport reciprocity_check(const DomainDescriptor& a, const DomainDescriptor& b,
                                    const std::vector<Polynomial>& g, const ModelOptions& opts = {});

struct TensorIndexReport {
  std::vector<std::size_t> dims_a;
  std::vector<std::size_t> dims_tensor;  // H(A (x) 1 + 1 (x) C)
  std::vector<std::size_t> flag;         // dims of the socle series of C
  std::size_t nilpotent_dim = 0;
  long long index_tensor = 0;
  long long index_product = 0;           // Ind(A) * dim W
  bool bookkeeping = false;              // every long exact sequence step is consistent
  bool holds() const { return bookkeeping && index_tensor == index_product; }
};

/// A (x) 1 + 1 (x) C for a nilpotent commuting tuple C of the same length,
/// checked step by step along the socle series of C. Throws NotNilpotent.
TensorIndexReport tensor_index_identity(const CommutingTuple& a, const CommutingTuple& nilpotent,
                                        const Tolerance& tol = {});

}  // namespace koszul
