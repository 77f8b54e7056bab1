#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "koszul/scalar.hpp"

namespace koszul {

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}

  static Monomial one(std::size_t n) { return Monomial(std::vector<unsigned>(n, 0)); }
  static Monomial variable(std::size_t n, std::size_t i, unsigned power = 1);

  std::size_t vars() const noexcept { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return exps_; }
  unsigned degree() const noexcept;
  bool is_one() const noexcept { return degree() == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  /// Canonical (lexicographic on exponent vectors) ordering, used for storage.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<unsigned> exps_;
};

enum class MonomialOrder { DegRevLex, Lex };

std::string_view to_string(MonomialOrder order) noexcept;

/// Strict comparison a < b in the given term order, with z1 > z2 > ... > zn.
bool order_less(MonomialOrder order, const Monomial& a, const Monomial& b);

/// Polynomial over Q(i) with no stored zero coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  explicit Polynomial(std::size_t n = 0) : n_(n) {}

  static Polynomial constant(std::size_t n, const GaussianRational& c);
  static Polynomial variable(std::size_t n, std::size_t i);
  static Polynomial term(const Monomial& m, const GaussianRational& c);

  std::size_t vars() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;
  /// Lowest total degree among the terms (0 for the zero polynomial).
  unsigned order_of_vanishing() const;
  GaussianRational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const GaussianRational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  Polynomial operator-() const;
  Polynomial pow(unsigned k) const;
  /// Multiplies by c * m.
  Polynomial times_term(const Monomial& m, const GaussianRational& c) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Monomial leading_monomial(MonomialOrder order) const;
  GaussianRational leading_coefficient(MonomialOrder order) const;

  Polynomial derivative(std::size_t i) const;
  GaussianRational evaluate(const std::vector<GaussianRational>& point) const;
  Complex evaluate(const std::vector<Complex>& point) const;
  /// q(z) = p(z + shift).
  Polynomial translated(const std::vector<GaussianRational>& shift) const;
  /// Re-homes the polynomial into `new_n` variables, variable i becoming
  /// variable offset + i.
  Polynomial embedded(std::size_t new_n, std::size_t offset) const;
  /// Drops every term of total degree >= bound.
  Polynomial truncated(unsigned bound) const;

  std::string to_string() const;

 private:
  std::size_t n_;
  Terms terms_;
};

/// Parses `;`-separated polynomials in z1..zn (`z` is accepted when n == 1).
/// Operators: + - * / ^ and parentheses; `/` only by nonzero constants.
/// Throws SyntaxError (with line/column) or Error(UnknownVariable).
std::vector<Polynomial> parse_system(std::string_view text, std::size_t n);

/// Largest k such that `zk` occurs in text (1 for bare `z`), 0 if none.
std::size_t infer_variable_count(std::string_view text);

std::string to_string(const std::vector<Polynomial>& system);

}  // namespace koszul
