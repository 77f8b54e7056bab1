#include <algorithm>

#include "koszul/generators.hpp"
#include "koszul/linalg.hpp"
#include "support.hpp"

namespace koszul {
namespace {

using test::expect_code;
using test::imat;
using test::mat;

GaussianRational random_gaussian(Draw& draw) {
  return {mpq_class(draw.integer(-20, 20), draw.integer(1, 9)), mpq_class(draw.integer(-20, 20), draw.integer(1, 9))};
}

Matrix random_integer_matrix(Draw& draw, std::size_t rows, std::size_t cols, long lo, long hi) {
  Matrix m = Matrix::zeros(rows, cols, Backend::Exact);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, GaussianRational{draw.integer(lo, hi)});
  return m;
}

/// Rank-deficient by construction: product of a rows x k and a k x cols factor.
Matrix random_low_rank(Draw& draw, std::size_t rows, std::size_t cols) {
  const std::size_t k = draw.index(std::min(rows, cols) + 1);
  return random_integer_matrix(draw, rows, k, -3, 3) * random_integer_matrix(draw, k, cols, -3, 3);
}

TEST(Scalar, ParsesLiteralGrammar) {
  EXPECT_EQ(parse_gaussian("3/4-1/2i"), GaussianRational(mpq_class(3, 4), mpq_class(-1, 2)));
  EXPECT_EQ(parse_gaussian("-7"), GaussianRational(-7));
  EXPECT_EQ(parse_gaussian("i"), GaussianRational::imaginary_unit());
  EXPECT_EQ(parse_gaussian("-2i"), GaussianRational(0, -2));
  EXPECT_EQ(parse_gaussian("4/6"), GaussianRational(mpq_class(2, 3)));
  expect_code(ErrorCode::SyntaxError, [] { parse_gaussian("1/0"); });
  expect_code(ErrorCode::SyntaxError, [] { parse_gaussian("1+"); });
  expect_code(ErrorCode::SyntaxError, [] { parse_gaussian("abc"); });
}

TEST(Scalar, PrintParseRoundTrip) {
  Draw draw(11);
  for (int i = 0; i < 200; ++i) {
    const GaussianRational z = random_gaussian(draw);
    EXPECT_EQ(parse_gaussian(z.to_string()), z) << z.to_string();
  }
}

TEST(Scalar, CanonicalFormAndExactArithmetic) {
  Draw draw(12);
  for (int i = 0; i < 300; ++i) {
    const GaussianRational a = random_gaussian(draw);
    const GaussianRational b = random_gaussian(draw);
    const GaussianRational c = a * b + a / (b.is_zero() ? GaussianRational(1) : b);
    for (const mpq_class* q : {&c.real(), &c.imag()}) {
      EXPECT_GT(sgn(q->get_den()), 0);
      EXPECT_EQ(gcd(q->get_num(), q->get_den()), 1);
    }
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(Scalar, MixedBackendsAreRejected) {
  const Scalar e = Scalar::one(Backend::Exact);
  const Scalar f = Scalar::one(Backend::Float);
  expect_code(ErrorCode::BackendMismatch, [&] { (void)(e + f); });
  expect_code(ErrorCode::BackendMismatch, [&] { Matrix::from_rows({{e, f}}); });
  expect_code(ErrorCode::BackendMismatch, [&] {
    (void)(Matrix::identity(2, Backend::Exact) * Matrix::identity(2, Backend::Float));
  });
  expect_code(ErrorCode::BackendMismatch, [&] { (void)f.to_backend(Backend::Exact); });
}

TEST(Scalar, RationalizeRecoversSmallFractions) {
  EXPECT_EQ(rationalize({0.75, -1.0 / 3.0}), GaussianRational(mpq_class(3, 4), mpq_class(-1, 3)));
  EXPECT_EQ(rationalize({-2.0, 0.0}), GaussianRational(-2));
}

TEST(Rank, Examples) {
  for (Backend b : {Backend::Exact, Backend::Float}) {
    EXPECT_EQ(rank(Matrix::identity(3, b)), 3u);
    EXPECT_EQ(rank(Matrix::zeros(2, 2, b)), 0u);
    EXPECT_EQ(rank(imat({{1, 2}, {2, 4}}).to_backend(b)), 1u);
  }
  EXPECT_EQ(rank(mat({{"1", "i"}, {"i", "-1"}})), 1u);
  EXPECT_EQ(rank(mat({{"1", "i"}, {"-i", "-1"}})), 2u);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(Matrix::zeros(2, 2, Backend::Exact)).dim(), 2u);
  EXPECT_EQ(kernel_basis(Matrix::identity(3, Backend::Exact)).dim(), 0u);
  const Subspace k = kernel_basis(imat({{1, 2}, {2, 4}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(contains(span(imat({{2}, {-1}})), k.basis));
  EXPECT_TRUE((imat({{1, 2}, {2, 4}}) * k.basis).is_zero());

  const Subspace kf = kernel_basis(imat({{1, 2}, {2, 4}}).to_backend(Backend::Float));
  ASSERT_EQ(kf.dim(), 1u);
  const Complex ratio = kf.basis.at(0, 0).to_complex() / kf.basis.at(1, 0).to_complex();
  EXPECT_NEAR(std::abs(ratio - Complex(-2.0, 0.0)), 0.0, 1e-12);
}

TEST(Image, Examples) {
  EXPECT_EQ(image_basis(Matrix::identity(3, Backend::Exact)).dim(), 3u);
  EXPECT_EQ(image_basis(Matrix::zeros(3, 3, Backend::Exact)).dim(), 0u);
  const Subspace im = image_basis(imat({{1, 2}, {2, 4}}));
  ASSERT_EQ(im.dim(), 1u);
  EXPECT_TRUE(contains(span(imat({{1}, {2}})), im.basis));
}

TEST(QuotientDim, Examples) {
  const Subspace whole = Subspace::whole(3, Backend::Exact);
  EXPECT_EQ(quotient_dim(whole, whole), 0u);
  EXPECT_EQ(quotient_dim(whole, Subspace::zero(3, Backend::Exact)), 3u);
  const Matrix j = imat({{0, 1}, {0, 0}});
  EXPECT_EQ(quotient_dim(kernel_basis(j), image_basis(j)), 0u);
  expect_code(ErrorCode::NotContained, [] {
    quotient_dim(span(imat({{1}, {0}})), span(imat({{0}, {1}})));
  });
}

TEST(Solve, ConsistentAndInconsistent) {
  const Matrix a = imat({{1, 2}, {2, 4}});
  const auto x = solve(a, imat({{3}, {6}}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, imat({{3}, {6}}));
  EXPECT_FALSE(solve(a, imat({{1}, {0}})).has_value());
}

TEST(Tolerance, IsAnExplicitPolicy) {
  FloatMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = 1e-7;
  const Matrix f(m);
  EXPECT_EQ(rank(f, Tolerance{1e-9}), 2u);
  EXPECT_EQ(rank(f, Tolerance{1e-6}), 1u);
}

TEST(LinalgProperty, RankNullityBothBackends) {
  Draw draw(21);
  for (int i = 0; i < 100; ++i) {
    const std::size_t rows = 1 + draw.index(6);
    const std::size_t cols = 1 + draw.index(6);
    const Matrix m = random_low_rank(draw, rows, cols);
    for (Backend b : {Backend::Exact, Backend::Float}) {
      const Matrix mb = m.to_backend(b);
      const std::size_t r = rank(mb);
      EXPECT_EQ(r + kernel_basis(mb).dim(), cols);
      EXPECT_EQ(image_basis(mb).dim(), r);
    }
  }
}

TEST(LinalgProperty, RankOfProductIsBounded) {
  Draw draw(22);
  for (int i = 0; i < 100; ++i) {
    const Matrix a = random_low_rank(draw, 6, 6);
    const Matrix b = random_low_rank(draw, 6, 6);
    EXPECT_LE(rank(a * b), std::min(rank(a), rank(b)));
  }
}

TEST(LinalgProperty, BackendsAgreeOnIntegerRank) {
  Draw draw(23);
  for (int i = 0; i < 200; ++i) {
    const std::size_t rows = 1 + draw.index(6);
    const std::size_t cols = 1 + draw.index(6);
    const Matrix m = draw.coin() ? random_integer_matrix(draw, rows, cols, -5, 5) : random_low_rank(draw, rows, cols);
    EXPECT_EQ(rank(m), rank(m.to_backend(Backend::Float)));
  }
}

TEST(LinalgProperty, KernelVectorsAreAnnihilated) {
  Draw draw(24);
  for (int i = 0; i < 100; ++i) {
    const Matrix m = random_low_rank(draw, 1 + draw.index(6), 1 + draw.index(6));
    EXPECT_TRUE((m * kernel_basis(m).basis).is_zero());
    const Matrix f = m.to_backend(Backend::Float);
    const Subspace k = kernel_basis(f);
    EXPECT_LE((f * k.basis).frobenius_norm(), 1e-9 * std::max(1.0, f.frobenius_norm()) * std::max(1.0, k.basis.frobenius_norm()));
  }
}

}  // namespace
}  // namespace koszul
