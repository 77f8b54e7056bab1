#include "koszul/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "koszul/errors.hpp"

namespace koszul {

std::string_view to_string(Backend backend) noexcept {
  return backend == Backend::Exact ? "exact" : "float";
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in Q(i)");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) {
    out = re_.get_str();
    if (sgn(im_) > 0) out += '+';
  }
  out += im_.get_str();
  out += 'i';
  return out;
}

namespace {

class LiteralReader {
 public:
  explicit LiteralReader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("invalid scalar literal '" + std::string(text_) + "': " + what, 1, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int sign() {
    if (accept('-')) return -1;
    accept('+');
    return 1;
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  mpq_class rational() {
    mpz_class num = integer();
    mpz_class den = 1;
    if (accept('/')) {
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GaussianRational parse_gaussian(std::string_view text) {
  LiteralReader in(text);
  if (in.done()) in.fail("empty literal");
  const int s1 = in.sign();
  if (in.accept('i')) {
    if (!in.done()) in.fail("trailing characters");
    return {0, s1};
  }
  mpq_class first = in.rational() * s1;
  if (in.accept('i')) {
    if (!in.done()) in.fail("trailing characters");
    return {0, first};
  }
  if (in.done()) return {first, 0};
  const char c = in.peek();
  if (c != '+' && c != '-') in.fail("expected '+' or '-' before imaginary part");
  const int s2 = in.sign();
  mpq_class second = 1;
  if (in.at_digit()) second = in.rational();
  if (!in.accept('i')) in.fail("expected 'i'");
  if (!in.done()) in.fail("trailing characters");
  return {first, second * s2};
}

namespace {

mpq_class best_rational(double x, long max_den) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "cannot rationalize a non-finite value");
  // Continued fraction convergents p/q with q <= max_den.
  const bool neg = x < 0;
  double v = std::fabs(x);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(v);
    if (a > 1e15) break;
    const mpz_class ai(static_cast<unsigned long>(a));
    const mpz_class p2 = ai * p1 + p0;
    const mpz_class q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = v - a;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  if (q1 == 0) return 0;
  mpq_class q(neg ? mpz_class(-p1) : p1, q1);
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational rationalize(Complex z, long max_denominator) {
  return {best_rational(z.real(), max_denominator), best_rational(z.imag(), max_denominator)};
}

Scalar Scalar::zero(Backend b) { return b == Backend::Exact ? Scalar(GaussianRational{}) : Scalar(Complex{}); }

Scalar Scalar::one(Backend b) {
  return b == Backend::Exact ? Scalar(GaussianRational{1}) : Scalar(Complex{1.0, 0.0});
}

const GaussianRational& Scalar::exact() const {
  if (const auto* v = std::get_if<GaussianRational>(&value_)) return *v;
  throw Error(ErrorCode::BackendMismatch, "exact scalar requested from a float scalar");
}

Complex Scalar::to_complex() const {
  if (const auto* v = std::get_if<GaussianRational>(&value_)) return v->to_complex();
  return std::get<Complex>(value_);
}

Scalar Scalar::to_backend(Backend b) const {
  if (b == backend()) return *this;
  if (b == Backend::Float) return Scalar(to_complex());
  throw Error(ErrorCode::BackendMismatch, "float scalars cannot be converted to exact ones");
}

bool Scalar::is_zero() const {
  if (const auto* v = std::get_if<GaussianRational>(&value_)) return v->is_zero();
  return std::get<Complex>(value_) == Complex{};
}

std::string Scalar::to_string() const {
  if (const auto* v = std::get_if<GaussianRational>(&value_)) return v->to_string();
  const Complex c = std::get<Complex>(value_);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
  return buf;
}

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend()) throw Error(ErrorCode::BackendMismatch, "mixed-backend scalar arithmetic");
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(*this, o);
  std::visit([&o](auto& v) { v += std::get<std::decay_t<decltype(v)>>(o.value_); }, value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(*this, o);
  std::visit([&o](auto& v) { v -= std::get<std::decay_t<decltype(v)>>(o.value_); }, value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(*this, o);
  std::visit([&o](auto& v) { v *= std::get<std::decay_t<decltype(v)>>(o.value_); }, value_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(*this, o);
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  std::visit([&o](auto& v) { v /= std::get<std::decay_t<decltype(v)>>(o.value_); }, value_);
  return *this;
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) { return Scalar(-v); }, value_);
}

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

std::vector<GaussianRational> parse_point(std::string_view text) {
  std::vector<GaussianRational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_gaussian(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

Point to_point(const std::vector<GaussianRational>& coords) { return {coords.begin(), coords.end()}; }

std::string to_string(const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += p[i].to_string();
  }
  return out;
}

}  // namespace koszul
