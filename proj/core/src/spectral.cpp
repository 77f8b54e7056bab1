#include "koszul/spectral.hpp"

#include <algorithm>
#include <utility>

#include "koszul/errors.hpp"

namespace koszul {

std::size_t Bicomplex::dim(std::size_t p, std::size_t q) const {
  if (p > n || q > m) return 0;
  return d * binomial(static_cast<unsigned>(n), static_cast<unsigned>(p)) *
         binomial(static_cast<unsigned>(m), static_cast<unsigned>(q));
}

std::vector<std::size_t> Bicomplex::coordinates(std::size_t p, std::size_t q) const {
  std::vector<std::size_t> out;
  if (p > n || q > m) return out;
  const auto& deg = filtration_degree[p + q];
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] == p) out.push_back(i);
  return out;
}

Bicomplex build_bicomplex(const CommutingTuple& a, const CommutingTuple& b) {
  if (a.backend() != Backend::Exact || b.backend() != Backend::Exact)
    throw Error(ErrorCode::BackendMismatch, "spectral sequences are computed with the exact backend");
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "tuples act on different spaces");
  Bicomplex bc{a.size(), b.size(), a.dim(), build_complex(a.concat(b)), {}, {}, {}};
  const std::size_t top = bc.n + bc.m;
  for (std::size_t k = 0; k <= top; ++k) {
    std::vector<std::size_t> deg;
    for (const auto& subset : bc.total.bases[k]) {
      const auto p = static_cast<std::size_t>(
          std::count_if(subset.begin(), subset.end(), [&](std::size_t i) { return i < bc.n; }));
      deg.insert(deg.end(), bc.d, p);
    }
    bc.filtration_degree.push_back(std::move(deg));
  }
  for (std::size_t k = 0; k <= top; ++k) {
    const Matrix dk = bc.total.chain.differential(k);
    ExactMatrix v(dk.rows(), dk.cols());
    ExactMatrix h(dk.rows(), dk.cols());
    for (std::size_t i = 0; i < dk.rows(); ++i) {
      for (std::size_t j = 0; j < dk.cols(); ++j) {
        const GaussianRational& x = dk.exact()(i, j);
        if (x.is_zero()) continue;
        if (bc.filtration_degree[k - 1][i] == bc.filtration_degree[k][j])
          h(i, j) = x;
        else
          v(i, j) = x;
      }
    }
    bc.vertical.emplace_back(std::move(v));
    bc.horizontal.emplace_back(std::move(h));
  }
  for (std::size_t k = 2; k <= top; ++k) {
    const bool ok = (bc.vertical[k - 1] * bc.vertical[k]).is_zero() &&
                    (bc.horizontal[k - 1] * bc.horizontal[k]).is_zero() &&
                    (bc.vertical[k - 1] * bc.horizontal[k] + bc.horizontal[k - 1] * bc.vertical[k]).is_zero();
    if (!ok) throw Error(ErrorCode::InvariantViolation, "bicomplex differentials do not anticommute");
  }
  for (std::size_t k = 0; k <= top; ++k) {
    std::size_t sum = 0;
    for (std::size_t p = 0; p <= std::min(k, bc.n); ++p) sum += bc.dim(p, k - p);
    if (sum != bc.total.chain.dims[k]) throw Error(ErrorCode::InvariantViolation, "bigraded dimensions do not add up");
  }
  return bc;
}

BigradedDims SpectralPage::dims() const {
  BigradedDims out(entries.size());
  for (std::size_t p = 0; p < entries.size(); ++p)
    for (const auto& e : entries[p]) out[p].push_back(e.dim());
  return out;
}

bool SpectralPage::differential_vanishes() const {
  for (const auto& row : entries)
    for (const auto& e : row)
      if (!e.differential.is_zero()) return false;
  return true;
}

long long SpectralPage::euler() const {
  long long s = 0;
  for (std::size_t p = 0; p < entries.size(); ++p)
    for (std::size_t q = 0; q < entries[p].size(); ++q)
      s += ((p + q) % 2 == 0 ? 1 : -1) * static_cast<long long>(entries[p][q].dim());
  return s;
}

namespace {

class Engine {
 public:
  explicit Engine(const Bicomplex& bc) : bc_(bc) {}

  std::size_t total_dim(long k) const {
    if (k < 0 || k > static_cast<long>(bc_.n + bc_.m)) return 0;
    return bc_.total.chain.dims[static_cast<std::size_t>(k)];
  }

  /// Z^r_p in T_k: {x in F_p : Dx in F_{p-r}}, with Z^r_p = F_p for r <= 0.
  Matrix cycles(long r, long p, long k) const {
    const std::size_t dim = total_dim(k);
    if (p < 0 || dim == 0) return Matrix::zeros(dim, 0, Backend::Exact);
    const auto& deg = bc_.filtration_degree[static_cast<std::size_t>(k)];
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < deg.size(); ++i)
      if (static_cast<long>(deg[i]) <= p) cols.push_back(i);
    const Matrix embed = Matrix::identity(dim, Backend::Exact).select_cols(cols);
    if (r <= 0 || k == 0) return embed;
    const auto& below = bc_.filtration_degree[static_cast<std::size_t>(k - 1)];
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < below.size(); ++i)
      if (static_cast<long>(below[i]) > p - r) rows.push_back(i);
    if (rows.empty()) return embed;
    const Matrix restricted = bc_.total.chain.differential(static_cast<std::size_t>(k)).select_rows(rows).select_cols(cols);
    return embed * kernel_basis(restricted).basis;
  }

  Matrix project(const Matrix& x, std::size_t p, std::size_t q) const {
    return x.select_rows(bc_.coordinates(p, q));
  }

  PageEntry entry(long r, std::size_t p, std::size_t q) const {
    const long k = static_cast<long>(p + q);
    const long pl = static_cast<long>(p);
    const Matrix z = cycles(r, pl, k);
    const Matrix zp = project(z, p, q);
    Matrix bp = Matrix::zeros(bc_.dim(p, q), 0, Backend::Exact);
    if (total_dim(k + 1) > 0) {
      const Matrix src = cycles(r - 1, pl + r - 1, k + 1);
      bp = image_basis(project(bc_.total.chain.differential(static_cast<std::size_t>(k + 1)) * src, p, q)).basis;
    }
    const Matrix joined = Matrix::hstack(bp, zp);
    std::vector<std::size_t> picked;
    for (std::size_t j : independent_columns(joined))
      if (j >= bp.cols()) picked.push_back(j - bp.cols());
    if (bp.cols() + picked.size() != rank(zp))
      throw Error(ErrorCode::InvariantViolation, "page denominator escapes its numerator");
    PageEntry e;
    e.boundaries = bp;
    e.representatives = zp.select_cols(picked);
    e.lifts = z.select_cols(picked);
    return e;
  }

 private:
  const Bicomplex& bc_;
};

}  // namespace

SpectralSequence page_sequence(const Bicomplex& bc, std::size_t r_max) {
  const Engine engine(bc);
  const std::size_t last = std::max(r_max, bc.n + 1);
  SpectralSequence ss;
  for (std::size_t r = 0; r <= last; ++r) {
    SpectralPage page;
    page.r = r;
    page.entries.assign(bc.n + 1, std::vector<PageEntry>(bc.m + 1));
    for (std::size_t p = 0; p <= bc.n; ++p)
      for (std::size_t q = 0; q <= bc.m; ++q) page.entries[p][q] = engine.entry(static_cast<long>(r), p, q);
    for (std::size_t p = 0; p <= bc.n; ++p) {
      for (std::size_t q = 0; q <= bc.m; ++q) {
        PageEntry& e = page.entries[p][q];
        const bool target_exists = p >= r && q + r >= 1 && q + r - 1 <= bc.m;
        if (!target_exists || e.dim() == 0) {
          const std::size_t rows = target_exists ? page.entries[p - r][q + r - 1].dim() : 0;
          e.differential = Matrix::zeros(rows, e.dim(), Backend::Exact);
          continue;
        }
        const PageEntry& t = page.entries[p - r][q + r - 1];
        const Matrix image = bc.total.chain.differential(p + q) * e.lifts;
        const Matrix projected = image.select_rows(bc.coordinates(p - r, q + r - 1));
        e.differential = homology_class({t.boundaries, t.representatives}, projected);
      }
    }
    if (!page.differential_vanishes()) ss.stable_page = r + 1;
    if (!ss.pages.empty()) {
      const SpectralPage& prev = ss.pages.back();
      for (std::size_t p = 0; p <= bc.n; ++p) {
        for (std::size_t q = 0; q <= bc.m; ++q) {
          const std::size_t out = rank(prev.entries[p][q].differential);
          std::size_t in = 0;
          const std::size_t pr = prev.r;
          if (p + pr <= bc.n && q + 1 >= pr && q + 1 - pr <= bc.m)
            in = rank(prev.entries[p + pr][q + 1 - pr].differential);
          if (page.entries[p][q].dim() + out + in != prev.entries[p][q].dim())
            throw Error(ErrorCode::InvariantViolation, "page is not the homology of its predecessor at (" +
                                                           std::to_string(p) + "," + std::to_string(q) + ")");
        }
      }
    }
    ss.pages.push_back(std::move(page));
  }
  ss.infinity = ss.pages[bc.n + 1].dims();
  return ss;
}

BigradedDims e2_via_row_homology(const Bicomplex& bc) {
  std::vector<Matrix> a_ops(bc.total.tuple.operators().begin(),
                            bc.total.tuple.operators().begin() + static_cast<std::ptrdiff_t>(bc.n));
  std::vector<Matrix> b_ops(bc.total.tuple.operators().begin() + static_cast<std::ptrdiff_t>(bc.n),
                            bc.total.tuple.operators().end());
  const KoszulComplex rows = build_complex(CommutingTuple(b_ops));
  BigradedDims out(bc.n + 1, std::vector<std::size_t>(bc.m + 1, 0));
  for (std::size_t q = 0; q <= bc.m; ++q) {
    const HomologyPresentation h = present_homology(rows.chain, q);
    if (h.dim() == 0) continue;
    const std::size_t copies = rows.bases[q].size();
    std::vector<Matrix> induced;
    for (const auto& a : a_ops) {
      Matrix lifted = Matrix::zeros(bc.d * copies, bc.d * copies, Backend::Exact);
      for (std::size_t s = 0; s < copies; ++s) lifted.set_block(s * bc.d, s * bc.d, a);
      induced.push_back(induced_map(h, lifted));
    }
    const HomologyProfile prof = koszul_homology(CommutingTuple(std::move(induced)));
    for (std::size_t p = 0; p <= bc.n; ++p) out[p][q] = prof.dims[p];
  }
  return out;
}

SpectralPage e2_page(const Bicomplex& bc) {
  SpectralSequence ss = page_sequence(bc, 2);
  if (ss.pages[2].dims() != e2_via_row_homology(bc))
    throw Error(ErrorCode::InvariantViolation, "E^2 disagrees with H_p(A, H_q(B, V))");
  return std::move(ss.pages[2]);
}

long long euler_via_e2(const Bicomplex& bc) { return -e2_page(bc).euler(); }

SpectralChecks check_spectral_sequence(const Bicomplex& bc, const SpectralSequence& ss) {
  SpectralChecks c;
  c.e2 = ss.pages.at(2).dims();
  c.total = homology(bc.total);
  c.e2_pipelines_agree = c.e2 == e2_via_row_homology(bc);
  c.index_via_e2 = -ss.pages[2].euler();
  c.index_matches = c.index_via_e2 == c.total.index;

  c.euler_constant = true;
  for (std::size_t r = 2; r < ss.pages.size(); ++r)
    c.euler_constant = c.euler_constant && ss.pages[r].euler() == c.total.euler;

  const std::size_t top = bc.n + bc.m;
  std::vector<std::size_t> diag_inf(top + 1, 0), diag_e2(top + 1, 0);
  for (std::size_t p = 0; p <= bc.n; ++p) {
    for (std::size_t q = 0; q <= bc.m; ++q) {
      diag_inf[p + q] += ss.infinity[p][q];
      diag_e2[p + q] += c.e2[p][q];
    }
  }
  c.converges = diag_inf == c.total.dims;

  c.vanishing = true;
  for (std::size_t k = 0; k <= top; ++k)
    if (diag_e2[k] == 0 && c.total.dims[k] != 0) c.vanishing = false;

  c.nonvanishing = true;
  for (std::size_t p = 0; p <= bc.n; ++p) {
    for (std::size_t q = 0; q <= bc.m; ++q) {
      if (c.e2[p][q] == 0) continue;
      bool found = false;
      for (std::size_t k = p + q; k <= top && !found; ++k) found = c.total.dims[k] != 0;
      c.nonvanishing = c.nonvanishing && found;
    }
  }
  return c;
}

}  // namespace koszul
