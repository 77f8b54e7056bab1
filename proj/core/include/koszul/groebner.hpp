#pragma once

#include <cstddef>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/poly.hpp"

namespace koszul {

struct GroebnerBasis {
  std::size_t vars = 0;
  MonomialOrder order = MonomialOrder::DegRevLex;
  std::vector<Polynomial> generators;  // monic, sorted by descending leading monomial
  bool reduced = false;

  bool is_unit() const;
  bool is_zero_ideal() const { return generators.empty(); }
  std::vector<Monomial> leading_monomials() const;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

/// Full reduction: no term of the result is divisible by a leading monomial.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors, MonomialOrder order);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Reduced Groebner basis (Buchberger, normal selection, product and chain
/// criteria). An empty generator list yields the zero ideal.
GroebnerBasis groebner(const std::vector<Polynomial>& gens, MonomialOrder order = MonomialOrder::DegRevLex);

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p);

struct QuotientAlgebra {
  GroebnerBasis gb;
  std::vector<Monomial> basis;          // standard monomials
  std::vector<Matrix> multiplication;   // M_{z_i}, EXACT, column j = nf(z_i * basis[j])

  std::size_t dim() const noexcept { return basis.size(); }
  /// Coordinates of nf(p) in the standard monomial basis.
  std::vector<GaussianRational> coordinates(const Polynomial& p) const;
  /// Matrix of multiplication by p.
  Matrix multiplication_by(const Polynomial& p) const;
};

/// Throws NotZeroDimensional when some variable has no pure-power leading
/// monomial.
QuotientAlgebra quotient_algebra(const GroebnerBasis& gb);

}  // namespace koszul
