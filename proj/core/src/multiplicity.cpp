#include "koszul/multiplicity.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "koszul/errors.hpp"
#include "koszul/groebner.hpp"

namespace koszul {

namespace {

using SparseRow = std::map<std::size_t, GaussianRational>;

/// Incremental echelon form over Q(i) for sparse rows.
class Echelon {
 public:
  /// Returns true when the row was independent of those already added.
  bool add(SparseRow row) {
    while (!row.empty()) {
      const auto lead = row.begin();
      const auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) {
        const GaussianRational inv = GaussianRational{1} / lead->second;
        for (auto& [c, v] : row) v *= inv;
        pivots_.emplace(lead->first, std::move(row));
        return true;
      }
      const GaussianRational f = lead->second;
      for (const auto& [c, v] : it->second) {
        auto [slot, inserted] = row.try_emplace(c, GaussianRational{});
        slot->second -= f * v;
        if (slot->second.is_zero()) row.erase(slot);
      }
    }
    return false;
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

void monomials_below(std::size_t n, unsigned bound, std::vector<Monomial>& out) {
  std::vector<unsigned> e(n, 0);
  const auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == n) {
      out.emplace_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  if (bound > 0) rec(rec, 0, bound - 1);
}

void require_square(const std::vector<Polynomial>& g, std::size_t points) {
  if (g.empty()) throw Error(ErrorCode::ArityMismatch, "empty polynomial system");
  const std::size_t n = g.front().vars();
  for (const auto& p : g)
    if (p.vars() != n) throw Error(ErrorCode::ArityMismatch, "polynomials live in different rings");
  if (g.size() != n) throw Error(ErrorCode::ArityMismatch, "system must have as many equations as variables");
  if (points != n) throw Error(ErrorCode::ArityMismatch, "point has the wrong number of coordinates");
}

}  // namespace

std::size_t truncated_codimension(const std::vector<Polynomial>& shifted, unsigned order) {
  if (shifted.empty()) return 0;
  const std::size_t n = shifted.front().vars();
  std::vector<Monomial> mons;
  monomials_below(n, order, mons);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);
  Echelon ech;
  for (const auto& f : shifted) {
    const unsigned ord = f.order_of_vanishing();
    if (f.is_zero() || ord >= order) continue;
    for (const auto& m : mons) {
      if (m.degree() + ord >= order) continue;
      SparseRow row;
      for (const auto& [t, c] : f.terms()) {
        const Monomial prod = t * m;
        if (prod.degree() < order) row.emplace(index.at(prod), c);
      }
      ech.add(std::move(row));
    }
  }
  return mons.size() - ech.rank();
}

MultiplicityCertificate local_multiplicity(const std::vector<Polynomial>& g, const std::vector<GaussianRational>& at,
                                           const MultiplicityOptions& opts) {
  require_square(g, at.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].evaluate(at).is_zero())
      throw Error(ErrorCode::NotAZero, "g_" + std::to_string(i + 1) + " does not vanish at the point");
  }
  std::vector<Polynomial> shifted;
  for (const auto& p : g) shifted.push_back(p.translated(at));
  MultiplicityCertificate cert;
  cert.at = at;
  std::size_t prev = truncated_codimension(shifted, 1);
  cert.codims.push_back(prev);
  for (unsigned order = 1; order < opts.max_order; ++order) {
    const std::size_t next = truncated_codimension(shifted, order + 1);
    cert.codims.push_back(next);
    if (next == prev) {
      cert.multiplicity = next;
      cert.stable_order = order;
      cert.methods.emplace_back("macaulay_truncation");
      return cert;
    }
    prev = next;
  }
  throw Error(ErrorCode::NotIsolated,
              "local codimension did not stabilize by order " + std::to_string(opts.max_order) + "; zero is not isolated");
}

GaussianRational jacobian_determinant(const std::vector<Polynomial>& g, const std::vector<GaussianRational>& at) {
  require_square(g, at.size());
  const std::size_t n = g.size();
  ExactMatrix j(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) j(r, c) = g[r].derivative(c).evaluate(at);
  GaussianRational det{1};
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && j(p, c).is_zero()) ++p;
    if (p == n) return GaussianRational{};
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(j(p, k), j(c, k));
      det = -det;
    }
    det *= j(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (j(r, c).is_zero()) continue;
      const GaussianRational f = j(r, c) / j(c, c);
      for (std::size_t k = c; k < n; ++k) j(r, k) -= f * j(c, k);
    }
  }
  return det;
}

bool jacobian_regular(const std::vector<Polynomial>& g, const std::vector<GaussianRational>& at) {
  return !jacobian_determinant(g, at).is_zero();
}

std::vector<Polynomial> build_diagonal_system(const std::vector<Polynomial>& g) {
  if (g.empty()) throw Error(ErrorCode::ArityMismatch, "empty polynomial system");
  const std::size_t n = g.front().vars();
  std::vector<Polynomial> h;
  for (std::size_t i = 0; i < n; ++i) h.push_back(Polynomial::variable(2 * n, i) - Polynomial::variable(2 * n, n + i));
  for (const auto& p : g) h.push_back(p.embedded(2 * n, 0));
  return h;
}

DiagonalDegreeCheck verify_diagonal_degree(const std::vector<Polynomial>& g, const std::vector<GaussianRational>& at,
                                           const MultiplicityOptions& opts) {
  DiagonalDegreeCheck out;
  out.degree_g = local_multiplicity(g, at, opts).multiplicity;
  std::vector<GaussianRational> doubled = at;
  doubled.insert(doubled.end(), at.begin(), at.end());
  out.degree_h = local_multiplicity(build_diagonal_system(g), doubled, opts).multiplicity;
  return out;
}

MultiplicityTable global_multiplicity_table(const std::vector<Polynomial>& g, const SpectrumOptions& opts,
                                            Backend backend) {
  if (g.empty()) throw Error(ErrorCode::ArityMismatch, "empty polynomial system");
  const QuotientAlgebra qa = quotient_algebra(groebner(g));
  MultiplicityTable table;
  table.quotient_dim = qa.dim();
  if (qa.dim() == 0) return table;
  const CommutingTuple tuple(qa.multiplication);
  SpectralDecomposition sd;
  if (backend == Backend::Float) {
    sd = spectral_decomposition(tuple.to_backend(Backend::Float), opts);
    table.backend = Backend::Float;
  } else try {
    sd = spectral_decomposition(tuple, opts);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IrrationalSpectrum) throw;
    sd = spectral_decomposition(tuple.to_backend(Backend::Float), opts);
    table.backend = Backend::Float;
  }
  for (const auto& c : sd.components) table.zeros.push_back({c.lambda, c.space.dim()});
  return table;
}

double winding_number(const Polynomial& g, Complex center, double radius, std::size_t samples) {
  if (g.vars() != 1) throw Error(ErrorCode::ArityMismatch, "winding numbers are computed for univariate g only");
  double total = 0.0;
  const auto value = [&](std::size_t k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k % samples) / static_cast<double>(samples);
    return g.evaluate(std::vector<Complex>{center + radius * std::polar(1.0, theta)});
  };
  Complex prev = value(0);
  for (std::size_t k = 1; k <= samples; ++k) {
    const Complex cur = value(k);
    total += std::arg(cur / prev);
    prev = cur;
  }
  return total / (2.0 * std::numbers::pi);
}

}  // namespace koszul
