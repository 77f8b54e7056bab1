#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "koszul/poly.hpp"
#include "koszul/spectrum.hpp"

namespace koszul {

struct MultiplicityOptions {
  unsigned max_order = 30;  // N_max
};

struct MultiplicityCertificate {
  std::vector<GaussianRational> at;
  std::size_t multiplicity = 0;
  unsigned stable_order = 0;         // N*: first N with codim(N) = codim(N+1)
  std::vector<std::size_t> codims;   // codim(1), ..., codim(N* + 1)
  std::vector<std::string> methods;  // oracles that agreed on the value
};

/// codim(N) = #{monomials in (z - lambda) of degree < N} minus the rank of
/// the shifts m * g_i truncated at degree N.
std::size_t truncated_codimension(const std::vector<Polynomial>& shifted, unsigned order);

/// dim O_lambda / (g) O_lambda for a square system g with g(lambda) = 0.
/// Throws NotAZero, NotIsolated (no plateau by max_order), ArityMismatch.
MultiplicityCertificate local_multiplicity(const std::vector<Polynomial>& g, const std::vector<GaussianRational>& at,
                                           const MultiplicityOptions& opts = {});

GaussianRational jacobian_determinant(const std::vector<Polynomial>& g, const std::vector<GaussianRational>& at);
bool jacobian_regular(const std::vector<Polynomial>& g, const std::vector<GaussianRational>& at);

/// h(z, w) = (z - w, g(z)) in the variables z_1..z_n, w_1..w_n.
std::vector<Polynomial> build_diagonal_system(const std::vector<Polynomial>& g);

struct DiagonalDegreeCheck {
  std::size_t degree_g = 0;
  std::size_t degree_h = 0;
  bool holds() const { return degree_g == degree_h; }
};

DiagonalDegreeCheck verify_diagonal_degree(const std::vector<Polynomial>& g, const std::vector<GaussianRational>& at,
                                           const MultiplicityOptions& opts = {});

struct ZeroEntry {
  Point lambda;
  std::size_t multiplicity = 0;
};

struct MultiplicityTable {
  std::vector<ZeroEntry> zeros;
  std::size_t quotient_dim = 0;  // dim C[z]/(g)
  Backend backend = Backend::Exact;
};

/// Zeros and multiplicities as the joint spectrum of the multiplication
/// matrices of C[z]/(g). Falls back to FLOAT when the zeros are not all
/// Gaussian rational. With backend FLOAT the zeros are always clustered
/// numerically.
MultiplicityTable global_multiplicity_table(const std::vector<Polynomial>& g, const SpectrumOptions& opts = {},
                                            Backend backend = Backend::Exact);

/// Winding number of g(c + r e^{i theta}) around 0 for univariate g, by
/// summing phase increments over `samples` points.
double winding_number(const Polynomial& g, Complex center, double radius, std::size_t samples = 4096);

}  // namespace koszul
