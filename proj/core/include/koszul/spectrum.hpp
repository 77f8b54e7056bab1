#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "koszul/koszul.hpp"
#include "koszul/poly.hpp"

namespace koszul {

struct SpectrumOptions {
  Tolerance tol;
  /// FLOAT only: candidate eigenvalues closer than this are merged.
  double cluster_radius = 1e-6;
  /// Seeds the generator for the separating combination sum c_i A_i.
  std::uint64_t seed = 0x5eed;
};

struct SpectralComponent {
  Point lambda;
  Subspace space;  // generalized joint eigenspace V(lambda)
};

struct SpectralDecomposition {
  std::vector<SpectralComponent> components;  // sorted by lambda

  std::size_t total_dim() const;
  /// Index of the component at lambda, or components.size().
  std::size_t find(const Point& lambda, double radius = 1e-6) const;
};

/// Joint generalized eigenspaces. EXACT: eigenvalues of a random
/// Gaussian-rational combination, certified exactly (IrrationalSpectrum when
/// some eigenvalue is not a Gaussian rational). FLOAT: clustered eigenvalues
/// (ClusteringAmbiguity when a cluster is not a single joint eigenvalue).
SpectralDecomposition spectral_decomposition(const CommutingTuple& t, const SpectrumOptions& opts = {});

/// Direct sum = V, invariance, and nilpotency of A_i - lambda_i on each piece.
bool check_decomposition(const CommutingTuple& t, const SpectralDecomposition& sd, const Tolerance& tol = {});

/// dim of the intersection of ker (A_i - lambda_i)^d.
std::size_t generalized_eigenspace_dim(const CommutingTuple& t, const Point& lambda, const Tolerance& tol = {});

struct JointSpectrumReport {
  std::vector<std::pair<Point, std::size_t>> spectrum;  // (lambda, dim V(lambda))
  bool in_taylor_spectrum = false;  // K(A - lambda) not exact
  bool is_joint_eigenvalue = false;  // V(lambda) != 0
  bool top_homology_nonzero = false;  // H_n(A - lambda) != 0
  bool agree() const {
    return in_taylor_spectrum == is_joint_eigenvalue && is_joint_eigenvalue == top_homology_nonzero;
  }
};

JointSpectrumReport joint_spectrum_equivalences(const CommutingTuple& t, const Point& lambda,
                                                const SpectrumOptions& opts = {});

/// p(A) for a polynomial in t.size() variables.
Matrix evaluate_polynomial(const Polynomial& p, const CommutingTuple& t);

/// (g_1(A), ..., g_m(A)); checked to commute with A.
CommutingTuple apply_polynomial_map(const CommutingTuple& t, const std::vector<Polynomial>& g,
                                    const Tolerance& tol = {});

/// dim of the generalized lambda-eigenspace of the action of A on
/// H_k(g(A), V), for k = 0..m.
std::vector<std::size_t> localized_homology(const CommutingTuple& t, const std::vector<Polynomial>& g,
                                            const Point& lambda, const SpectrumOptions& opts = {});

}  // namespace koszul
