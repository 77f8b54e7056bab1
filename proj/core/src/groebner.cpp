#include "koszul/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "koszul/errors.hpp"

namespace koszul {

bool GroebnerBasis::is_unit() const {
  return generators.size() == 1 && generators.front().is_constant() && !generators.front().is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.leading_monomial(order));
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  const Monomial lf = f.leading_monomial(order);
  const Monomial lg = g.leading_monomial(order);
  const Monomial l = Monomial::lcm(lf, lg);
  const GaussianRational one{1};
  return f.times_term(l / lf, one / f.coefficient(lf)) - g.times_term(l / lg, one / g.coefficient(lg));
}

namespace {

struct Divisor {
  const Polynomial* poly;
  Monomial lead;
  GaussianRational lead_coeff;
};

std::vector<Divisor> prepare(const std::vector<Polynomial>& divisors, MonomialOrder order) {
  std::vector<Divisor> out;
  for (const auto& d : divisors) {
    if (d.is_zero()) continue;
    const Monomial lm = d.leading_monomial(order);
    out.push_back({&d, lm, d.coefficient(lm)});
  }
  return out;
}

Polynomial reduce(Polynomial p, const std::vector<Divisor>& divs, MonomialOrder order) {
  Polynomial rem(p.vars());
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial(order);
    const GaussianRational lc = p.coefficient(lm);
    const Divisor* hit = nullptr;
    for (const auto& d : divs) {
      if (d.lead.divides(lm)) {
        hit = &d;
        break;
      }
    }
    if (hit) {
      p -= hit->poly->times_term(lm / hit->lead, lc / hit->lead_coeff);
    } else {
      rem.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return rem;
}

Polynomial monic(Polynomial p, MonomialOrder order) {
  if (p.is_zero()) return p;
  const GaussianRational inv = GaussianRational{1} / p.leading_coefficient(order);
  p *= inv;
  return p;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors, MonomialOrder order) {
  for (const auto& d : divisors)
    if (d.vars() != p.vars()) throw Error(ErrorCode::ArityMismatch, "normal form across different rings");
  return reduce(p, prepare(divisors, order), order);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(p, gb.generators, gb.order);
}

GroebnerBasis groebner(const std::vector<Polynomial>& gens, MonomialOrder order) {
  GroebnerBasis out;
  out.order = order;
  out.vars = gens.empty() ? 0 : gens.front().vars();
  for (const auto& g : gens)
    if (g.vars() != out.vars) throw Error(ErrorCode::ArityMismatch, "generators live in different rings");

  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      out.generators = {Polynomial::constant(out.vars, GaussianRational{1})};
      out.reduced = true;
      return out;
    }
    basis.push_back(monic(g, order));
  }
  std::vector<Monomial> leads;
  for (const auto& b : basis) leads.push_back(b.leading_monomial(order));

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);

  const auto pending = [&pairs](std::size_t a, std::size_t b) {
    return pairs.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!pairs.empty()) {
    auto best = pairs.begin();
    Monomial best_lcm = Monomial::lcm(leads[best->first], leads[best->second]);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = Monomial::lcm(leads[it->first], leads[it->second]);
      if (order_less(order, l, best_lcm)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pairs.erase(best);

    if (Monomial::coprime(leads[i], leads[j])) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = leads[k].divides(best_lcm) && !pending(i, k) && !pending(j, k);
    }
    if (chain) continue;

    Polynomial r = reduce(s_polynomial(basis[i], basis[j], order), prepare(basis, order), order);
    if (r.is_zero()) continue;
    if (r.is_constant()) {
      out.generators = {Polynomial::constant(out.vars, GaussianRational{1})};
      out.reduced = true;
      return out;
    }
    r = monic(std::move(r), order);
    const std::size_t k = basis.size();
    leads.push_back(r.leading_monomial(order));
    basis.push_back(std::move(r));
    for (std::size_t a = 0; a < k; ++a) pairs.emplace(a, k);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b || !leads[b].divides(leads[a])) continue;
      redundant = leads[a] != leads[b] || b < a;
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  // Interreduce.
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    const Monomial lm = minimal[a].leading_monomial(order);
    const GaussianRational lc = minimal[a].coefficient(lm);
    Polynomial tail = minimal[a];
    tail.add_term(lm, -lc);
    Polynomial reduced_tail = reduce(tail, prepare(others, order), order);
    reduced_tail.add_term(lm, lc);
    minimal[a] = monic(std::move(reduced_tail), order);
  }
  std::sort(minimal.begin(), minimal.end(), [order](const Polynomial& x, const Polynomial& y) {
    return order_less(order, y.leading_monomial(order), x.leading_monomial(order));
  });
  out.generators = std::move(minimal);
  out.reduced = true;
  return out;
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) { return normal_form(p, gb).is_zero(); }

std::vector<GaussianRational> QuotientAlgebra::coordinates(const Polynomial& p) const {
  const Polynomial r = normal_form(p, gb);
  std::vector<GaussianRational> out(basis.size());
  for (const auto& [m, c] : r.terms()) {
    const auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end()) throw Error(ErrorCode::InvariantViolation, "normal form left the standard monomials");
    out[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return out;
}

Matrix QuotientAlgebra::multiplication_by(const Polynomial& p) const {
  ExactMatrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto col = coordinates(p * Polynomial::term(basis[j], GaussianRational{1}));
    for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = col[i];
  }
  return Matrix(std::move(m));
}

QuotientAlgebra quotient_algebra(const GroebnerBasis& gb) {
  QuotientAlgebra qa;
  qa.gb = gb;
  const std::size_t n = gb.vars;
  if (gb.is_unit()) {
    for (std::size_t i = 0; i < n; ++i) qa.multiplication.push_back(Matrix::zeros(0, 0, Backend::Exact));
    return qa;
  }
  const std::vector<Monomial> leads = gb.leading_monomials();
  std::vector<unsigned> bound(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& lm : leads) {
      if (lm.degree() == lm[i] && lm[i] > 0 && (bound[i] == 0 || lm[i] < bound[i])) bound[i] = lm[i];
    }
    if (bound[i] == 0) {
      throw Error(ErrorCode::NotZeroDimensional,
                  "ideal is not zero-dimensional: no pure power of z" + std::to_string(i + 1) + " is a leading term");
    }
  }
  std::vector<unsigned> e(n, 0);
  while (true) {
    Monomial m(e);
    if (std::none_of(leads.begin(), leads.end(), [&m](const Monomial& l) { return l.divides(m); }))
      qa.basis.push_back(std::move(m));
    std::size_t k = 0;
    while (k < n && ++e[k] == bound[k]) e[k++] = 0;
    if (k == n) break;
  }
  std::sort(qa.basis.begin(), qa.basis.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return order_less(MonomialOrder::Lex, b, a);
  });
  for (std::size_t i = 0; i < n; ++i) qa.multiplication.push_back(qa.multiplication_by(Polynomial::variable(n, i)));
  return qa;
}

}  // namespace koszul
