#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace koszul {

enum class Backend { Exact, Float };

std::string_view to_string(Backend backend) noexcept;

using Complex = std::complex<double>;

/// An element of Q(i), stored as two canonical GMP rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational imaginary_unit() { return {0, 1}; }

  const mpq_class& real() const noexcept { return re_; }
  const mpq_class& imag() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, always rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order used only for deterministic sorting (real part, then imaginary).
  friend bool lex_less(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ < b.re_ || (a.re_ == b.re_ && a.im_ < b.im_);
  }

  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Renders in the literal grammar `[-]a[/b][(+|-)c[/d]i]`.
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

/// Parses `[-]a[/b][(+|-)c[/d]i]` (pure imaginary `ci` and `i` also accepted).
/// Throws SyntaxError.
GaussianRational parse_gaussian(std::string_view text);

/// Best Gaussian-rational approximation of a complex double, with denominators
/// bounded by `max_denominator`. Used to propose exact candidates that callers
/// then certify exactly.
GaussianRational rationalize(Complex z, long max_denominator = 1000000);

/// A scalar tagged with its backend. Mixed-backend arithmetic throws
/// BackendMismatch.
class Scalar {
 public:
  Scalar() : value_(GaussianRational{}) {}
  Scalar(GaussianRational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Complex v) : value_(v) {}                      // NOLINT(google-explicit-constructor)

  static Scalar zero(Backend b);
  static Scalar one(Backend b);

  Backend backend() const noexcept {
    return std::holds_alternative<GaussianRational>(value_) ? Backend::Exact : Backend::Float;
  }
  const GaussianRational& exact() const;
  Complex to_complex() const;
  /// Converts to the requested backend; Float -> Exact is refused.
  Scalar to_backend(Backend b) const;

  bool is_zero() const;
  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<GaussianRational, Complex> value_;
};

/// A point of C^n.
using Point = std::vector<Scalar>;

/// Parses a comma-separated list of scalar literals, e.g. "1/2,0,-i".
std::vector<GaussianRational> parse_point(std::string_view text);
Point to_point(const std::vector<GaussianRational>& coords);
std::string to_string(const Point& p);

}  // namespace koszul
