#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "koszul/koszul.hpp"
#include "koszul/poly.hpp"

namespace koszul {

/// Deterministic draws (plain modulo reduction, so streams do not depend on
/// the standard library's distribution implementations).
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool coin() { return (rng_() & 1U) != 0; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Integer matrix with determinant 1 built from elementary row operations;
/// returns {S, S^-1}.
std::pair<Matrix, Matrix> random_unimodular(Draw& draw, std::size_t d);

/// Commuting tuple S * blockdiag(p_{i,b}(N_b)) * S^-1 with nilpotent Jordan
/// shifts N_b and small integer polynomials p_{i,b}; eigenvalues in {-1,0,1,2},
/// with about half of the blocks at the joint eigenvalue 0.
CommutingTuple random_commuting_tuple(Draw& draw, std::size_t n, std::size_t d);

/// A matrix commuting with every operator of t: a random polynomial in
/// the operators.
Matrix random_commutant(Draw& draw, const CommutingTuple& t);

/// Commuting nilpotent tuple of length n on C^d (polynomials without constant
/// term in a conjugated Jordan shift).
CommutingTuple random_nilpotent_tuple(Draw& draw, std::size_t n, std::size_t d);

/// M * g(S z + t) with g_i(z) = product of distinct linear factors in z_i:
/// every zero is regular and has rational coordinates.
std::vector<Polynomial> random_regular_system(Draw& draw, std::size_t n);

}  // namespace koszul
