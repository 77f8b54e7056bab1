#include "koszul/generators.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

Matrix shift_matrix(std::size_t s) {
  Matrix n = Matrix::zeros(s, s, Backend::Exact);
  for (std::size_t i = 0; i + 1 < s; ++i) n.set(i, i + 1, GaussianRational{1});
  return n;
}

Matrix integer_polynomial(const Matrix& n, const std::vector<long>& coeffs) {
  const std::size_t s = n.rows();
  Matrix out = Matrix::zeros(s, s, Backend::Exact);
  Matrix power = Matrix::identity(s, Backend::Exact);
  for (long c : coeffs) {
    out += power.scaled(GaussianRational{c});
    power = power * n;
  }
  return out;
}

}  // namespace

std::pair<Matrix, Matrix> random_unimodular(Draw& draw, std::size_t d) {
  Matrix s = Matrix::identity(d, Backend::Exact);
  Matrix inv = Matrix::identity(d, Backend::Exact);
  if (d < 2) return {s, inv};
  for (std::size_t step = 0; step < d + 1; ++step) {
    const std::size_t i = draw.index(d);
    std::size_t j = draw.index(d - 1);
    if (j >= i) ++j;
    const long k = draw.integer(-1, 1);
    if (k == 0) continue;
    // E = I + k e_i e_j^T, E^-1 = I - k e_i e_j^T.
    Matrix e = Matrix::identity(d, Backend::Exact);
    e.set(i, j, GaussianRational{k});
    Matrix einv = Matrix::identity(d, Backend::Exact);
    einv.set(i, j, GaussianRational{-k});
    s = e * s;
    inv = inv * einv;
  }
  return {s, inv};
}

CommutingTuple random_commuting_tuple(Draw& draw, std::size_t n, std::size_t d) {
  static constexpr long kEigen[] = {0, 0, 1, -1, 2};
  std::vector<std::size_t> blocks;
  for (std::size_t left = d; left > 0;) {
    const std::size_t s = std::min<std::size_t>(left, static_cast<std::size_t>(draw.integer(1, 3)));
    blocks.push_back(s);
    left -= s;
  }
  std::vector<Matrix> ops(n, Matrix::zeros(d, d, Backend::Exact));
  std::size_t offset = 0;
  for (std::size_t s : blocks) {
    const Matrix shift = shift_matrix(s);
    // Half the blocks sit at the joint eigenvalue 0 so homology is often nonzero.
    const bool at_origin = draw.coin();
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long> coeffs{at_origin ? 0 : kEigen[draw.index(5)]};
      for (std::size_t k = 1; k < s; ++k) coeffs.push_back(draw.integer(-1, 1));
      ops[i].set_block(offset, offset, integer_polynomial(shift, coeffs));
    }
    offset += s;
  }
  const auto [s, inv] = random_unimodular(draw, d);
  for (auto& a : ops) a = s * a * inv;
  return CommutingTuple(std::move(ops));
}

Matrix random_commutant(Draw& draw, const CommutingTuple& t) {
  const std::size_t d = t.dim();
  Matrix out = Matrix::identity(d, t.backend()).scaled(GaussianRational{draw.coin() ? 0 : draw.integer(-1, 2)});
  for (const auto& a : t.operators()) {
    out += a.scaled(GaussianRational{draw.integer(-1, 1)});
    if (draw.coin()) out += (a * a).scaled(GaussianRational{draw.integer(-1, 1)});
  }
  return out;
}

CommutingTuple random_nilpotent_tuple(Draw& draw, std::size_t n, std::size_t d) {
  std::vector<Matrix> ops;
  const Matrix shift = shift_matrix(d);
  const auto [s, inv] = random_unimodular(draw, d);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> coeffs{0};
    for (std::size_t k = 1; k < std::max<std::size_t>(d, 2); ++k) coeffs.push_back(draw.integer(-1, 1));
    ops.push_back(s * integer_polynomial(shift, coeffs) * inv);
  }
  return CommutingTuple(std::move(ops));
}

std::vector<Polynomial> random_regular_system(Draw& draw, std::size_t n) {
  // Decoupled factors g_i(y) = prod_k (y_i - r_ik).
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < n; ++i) {
    const long degree = n == 1 ? draw.integer(1, 3) : draw.integer(1, 2);
    std::vector<long> roots;
    while (static_cast<long>(roots.size()) < degree) {
      const long r = draw.integer(-3, 3);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    Polynomial p = Polynomial::constant(n, GaussianRational{1});
    for (long r : roots) p = p * (Polynomial::variable(n, i) - Polynomial::constant(n, GaussianRational{r}));
    g.push_back(std::move(p));
  }
  // Substitute y = S z + t.
  const auto [s, s_inv] = random_unimodular(draw, n);
  std::vector<Polynomial> y;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial yi = Polynomial::constant(n, GaussianRational{draw.integer(-1, 1)});
    for (std::size_t j = 0; j < n; ++j) {
      const GaussianRational c = s.at(i, j).exact();
      if (!c.is_zero()) yi += Polynomial::variable(n, j) * c;
    }
    y.push_back(std::move(yi));
  }
  std::vector<Polynomial> composed;
  for (const auto& p : g) {
    Polynomial q(n);
    for (const auto& [m, c] : p.terms()) {
      Polynomial t = Polynomial::constant(n, c);
      for (std::size_t i = 0; i < n; ++i)
        if (m[i]) t = t * y[i].pow(m[i]);
      q += t;
    }
    composed.push_back(std::move(q));
  }
  // Mix the equations with an invertible integer matrix.
  const auto [mix, mix_inv] = random_unimodular(draw, n);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial r(n);
    for (std::size_t j = 0; j < n; ++j) {
      const GaussianRational c = mix.at(i, j).exact();
      if (!c.is_zero()) r += composed[j] * c;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace koszul
