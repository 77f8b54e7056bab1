#include "koszul/poly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "koszul/errors.hpp"

namespace koszul {

Monomial Monomial::variable(std::size_t n, std::size_t i, unsigned power) {
  std::vector<unsigned> e(n, 0);
  e.at(i) = power;
  return Monomial(std::move(e));
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (unsigned e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= divisor.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<unsigned> e(a.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] && b.exps_[i]) return false;
  return true;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (!exps_[i]) continue;
    if (!out.empty()) out += '*';
    out += 'z' + std::to_string(i + 1);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::string_view to_string(MonomialOrder order) noexcept {
  return order == MonomialOrder::DegRevLex ? "degrevlex" : "lex";
}

bool order_less(MonomialOrder order, const Monomial& a, const Monomial& b) {
  const std::size_t n = a.vars();
  if (order == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Polynomial Polynomial::constant(std::size_t n, const GaussianRational& c) {
  Polynomial p(n);
  p.add_term(Monomial::one(n), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
  Polynomial p(n);
  p.add_term(Monomial::variable(n, i), GaussianRational{1});
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const GaussianRational& c) {
  Polynomial p(m.vars());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

unsigned Polynomial::order_of_vanishing() const {
  if (terms_.empty()) return 0;
  unsigned d = ~0U;
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

GaussianRational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
  if (m.vars() != n_) throw Error(ErrorCode::ArityMismatch, "monomial has the wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw Error(ErrorCode::ArityMismatch, "polynomials in different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw Error(ErrorCode::ArityMismatch, "polynomials in different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::ArityMismatch, "polynomials in different rings");
  Polynomial out(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(n_, GaussianRational{1});
  Polynomial base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::times_term(const Monomial& m, const GaussianRational& c) const {
  Polynomial out(n_);
  if (c.is_zero()) return out;
  for (const auto& [mm, cc] : terms_) out.terms_.emplace(mm * m, cc * c);
  return out;
}

Monomial Polynomial::leading_monomial(MonomialOrder order) const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading monomial");
  const Monomial* best = &terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    if (order_less(order, *best, m)) best = &m;
  return *best;
}

GaussianRational Polynomial::leading_coefficient(MonomialOrder order) const {
  return coefficient(leading_monomial(order));
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial out(n_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    std::vector<unsigned> e = m.exponents();
    const unsigned k = e[i]--;
    out.add_term(Monomial(std::move(e)), c * GaussianRational{static_cast<long>(k)});
  }
  return out;
}

GaussianRational Polynomial::evaluate(const std::vector<GaussianRational>& point) const {
  if (point.size() != n_) throw Error(ErrorCode::ArityMismatch, "point has the wrong number of coordinates");
  GaussianRational acc;
  for (const auto& [m, c] : terms_) {
    GaussianRational t = c;
    for (std::size_t i = 0; i < n_; ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

Complex Polynomial::evaluate(const std::vector<Complex>& point) const {
  if (point.size() != n_) throw Error(ErrorCode::ArityMismatch, "point has the wrong number of coordinates");
  Complex acc{};
  for (const auto& [m, c] : terms_) {
    Complex t = c.to_complex();
    for (std::size_t i = 0; i < n_; ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::translated(const std::vector<GaussianRational>& shift) const {
  if (shift.size() != n_) throw Error(ErrorCode::ArityMismatch, "shift has the wrong number of coordinates");
  std::vector<Polynomial> images;
  images.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) images.push_back(variable(n_, i) + constant(n_, shift[i]));
  Polynomial out(n_);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(n_, c);
    for (std::size_t i = 0; i < n_; ++i)
      if (m[i]) t = t * images[i].pow(m[i]);
    out += t;
  }
  return out;
}

Polynomial Polynomial::embedded(std::size_t new_n, std::size_t offset) const {
  if (offset + n_ > new_n) throw Error(ErrorCode::ArityMismatch, "embedding does not fit");
  Polynomial out(new_n);
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> e(new_n, 0);
    for (std::size_t i = 0; i < n_; ++i) e[offset + i] = m[i];
    out.terms_.emplace(Monomial(std::move(e)), c);
  }
  return out;
}

Polynomial Polynomial::truncated(unsigned bound) const {
  Polynomial out(n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() < bound) out.terms_.emplace(m, c);
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
    return order_less(MonomialOrder::DegRevLex, b->first, a->first);
  });
  std::string out;
  for (const auto* t : sorted) {
    const auto& [m, c] = *t;
    std::string coeff;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.real()) < 0;
      mpq_class a = abs(c.real());
      if (!(a == 1 && !m.is_one())) coeff = a.get_str();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (!coeff.empty()) {
      out += coeff;
      if (!m.is_one()) out += '*';
    }
    if (!m.is_one()) out += m.to_string();
  }
  return out;
}

std::string to_string(const std::vector<Polynomial>& system) {
  std::string out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (i) out += "; ";
    out += system[i].to_string();
  }
  return out;
}

namespace {

enum class Tok { Number, Ident, Op, End };

struct Token {
  Tok kind = Tok::End;
  char op = '\0';
  std::string text;
  GaussianRational value;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= s_.size()) return t;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Number;
      mpz_class num = digits();
      mpz_class den = 1;
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        advance();
        den = digits();
        if (den == 0) throw SyntaxError("zero denominator", t.line, t.column);
      }
      mpq_class q(num, den);
      q.canonicalize();
      if (pos_ < s_.size() && s_[pos_] == 'i' &&
          (pos_ + 1 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
        advance();
        t.value = GaussianRational(0, q);
      } else {
        t.value = GaussianRational(q, 0);
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        t.text += s_[pos_];
        advance();
      }
      return t;
    }
    if (std::string_view("+-*/^();").find(c) != std::string_view::npos) {
      t.kind = Tok::Op;
      t.op = c;
      advance();
      return t;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", t.line, t.column);
  }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
  }
  mpz_class digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) advance();
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : lex_(text), n_(n) { tok_ = lex_.next(); }

  std::vector<Polynomial> system() {
    std::vector<Polynomial> out;
    if (tok_.kind == Tok::End) return out;
    out.push_back(expr());
    while (is_op(';')) {
      consume();
      if (tok_.kind == Tok::End) break;  // trailing separator
      out.push_back(expr());
    }
    if (tok_.kind != Tok::End) fail("expected ';' or end of input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, tok_.line, tok_.column); }
  bool is_op(char c) const { return tok_.kind == Tok::Op && tok_.op == c; }
  void consume() { tok_ = lex_.next(); }

  Polynomial expr() {
    Polynomial acc = term();
    while (is_op('+') || is_op('-')) {
      const char op = tok_.op;
      consume();
      Polynomial rhs = term();
      if (op == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (is_op('*') || is_op('/')) {
      const char op = tok_.op;
      const Token at = tok_;
      consume();
      Polynomial rhs = unary();
      if (op == '*') {
        acc = acc * rhs;
      } else {
        if (!rhs.is_constant() || rhs.is_zero()) {
          throw SyntaxError("division is only allowed by nonzero constants", at.line, at.column);
        }
        acc *= GaussianRational{1} / rhs.coefficient(Monomial::one(n_));
      }
    }
    return acc;
  }

  Polynomial unary() {
    if (is_op('-')) {
      consume();
      return -unary();
    }
    if (is_op('+')) {
      consume();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (is_op('^')) {
      consume();
      if (tok_.kind != Tok::Number || !tok_.value.is_real() || tok_.value.real().get_den() != 1 ||
          sgn(tok_.value.real()) < 0) {
        fail("exponent must be a non-negative integer");
      }
      const mpz_class e = tok_.value.real().get_num();
      if (e > 10000) fail("exponent too large");
      consume();
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial primary() {
    if (tok_.kind == Tok::Number) {
      Polynomial p = Polynomial::constant(n_, tok_.value);
      consume();
      return p;
    }
    if (tok_.kind == Tok::Ident) {
      const Token id = tok_;
      consume();
      if (id.text == "i") return Polynomial::constant(n_, GaussianRational::imaginary_unit());
      return variable(id);
    }
    if (is_op('(')) {
      consume();
      Polynomial inner = expr();
      if (!is_op(')')) fail("expected ')'");
      consume();
      return inner;
    }
    if (tok_.kind == Tok::End) fail("unexpected end of input");
    fail(std::string("unexpected '") + tok_.op + "'");
  }

  Polynomial variable(const Token& id) {
    std::size_t index = 0;
    if (id.text == "z" && n_ == 1) {
      index = 1;
    } else if (id.text.size() > 1 && id.text[0] == 'z' &&
               std::all_of(id.text.begin() + 1, id.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
               id.text.size() < 9) {
      index = std::stoul(id.text.substr(1));
    }
    if (index == 0 || index > n_) {
      throw Error(ErrorCode::UnknownVariable, "unknown variable '" + id.text + "' at line " + std::to_string(id.line) +
                                                  ", column " + std::to_string(id.column) + " (ring has " +
                                                  std::to_string(n_) + " variables)");
    }
    return Polynomial::variable(n_, index - 1);
  }

  Lexer lex_;
  std::size_t n_;
  Token tok_;
};

}  // namespace

std::vector<Polynomial> parse_system(std::string_view text, std::size_t n) {
  return Parser(text, n).system();
}

std::size_t infer_variable_count(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'z') continue;
    if (i > 0 && (std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_')) continue;
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j < text.size() && (std::isalpha(static_cast<unsigned char>(text[j])) || text[j] == '_')) continue;
    if (j == i + 1) {
      best = std::max<std::size_t>(best, 1);
    } else if (j - i - 1 < 9) {
      best = std::max<std::size_t>(best, std::stoul(std::string(text.substr(i + 1, j - i - 1))));
    }
  }
  return best;
}

}  // namespace koszul
