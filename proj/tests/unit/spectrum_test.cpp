#include "koszul/generators.hpp"
#include "koszul/groebner.hpp"
#include "koszul/spectrum.hpp"
#include "support.hpp"

namespace koszul {
namespace {

using test::expect_code;
using test::imat;
using test::jordan;
using test::sys;

Point P(const std::string& text) { return to_point(test::pt(text)); }

Point to_float(const Point& p) {
  Point out;
  for (const auto& s : p) out.push_back(s.to_backend(Backend::Float));
  return out;
}

CommutingTuple diagonal_pair() { return CommutingTuple({imat({{1, 0}, {0, 2}}), imat({{3, 0}, {0, 4}})}); }

TEST(SpectralDecomposition, Examples) {
  const auto sd = spectral_decomposition(diagonal_pair());
  ASSERT_EQ(sd.components.size(), 2u);
  EXPECT_EQ(sd.components[0].lambda, P("1,3"));
  EXPECT_EQ(sd.components[1].lambda, P("2,4"));
  EXPECT_EQ(sd.components[0].space.dim(), 1u);

  const auto qz = quotient_algebra(groebner(sys("z^2")));
  const auto single = spectral_decomposition(CommutingTuple(qz.multiplication));
  ASSERT_EQ(single.components.size(), 1u);
  EXPECT_EQ(single.components[0].lambda, P("0"));
  EXPECT_EQ(single.components[0].space.dim(), 2u);

  const auto q = quotient_algebra(groebner(sys("z1^2 - z2 ; z2^2")));
  const auto nil = spectral_decomposition(CommutingTuple(q.multiplication));
  ASSERT_EQ(nil.components.size(), 1u);
  EXPECT_EQ(nil.components[0].lambda, P("0,0"));
  EXPECT_EQ(nil.components[0].space.dim(), 4u);
}

TEST(SpectralDecomposition, GaussianEigenvalues) {
  const CommutingTuple rot({imat({{0, -1}, {1, 0}})});
  const auto sd = spectral_decomposition(rot);
  ASSERT_EQ(sd.components.size(), 2u);
  EXPECT_EQ(sd.components[0].lambda, P("-i"));
  EXPECT_EQ(sd.components[1].lambda, P("i"));
  EXPECT_TRUE(check_decomposition(rot, sd));
}

TEST(SpectralDecomposition, IrrationalEigenvaluesNeedTheFloatBackend) {
  const CommutingTuple t({imat({{0, 2}, {1, 0}})});
  expect_code(ErrorCode::IrrationalSpectrum, [&] { spectral_decomposition(t); });
  const CommutingTuple f = t.to_backend(Backend::Float);
  const auto sd = spectral_decomposition(f);
  ASSERT_EQ(sd.components.size(), 2u);
  EXPECT_NEAR(sd.components[0].lambda[0].to_complex().real(), -std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(sd.components[1].lambda[0].to_complex().real(), std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(check_decomposition(f, sd));
}

TEST(SpectralDecomposition, FloatJordanBlocksCluster) {
  for (std::size_t d : {2u, 3u, 4u}) {
    const Matrix shifted = Matrix::identity(d, Backend::Exact).scaled(GaussianRational(2)) + jordan(d);
    const CommutingTuple t = CommutingTuple({shifted}).to_backend(Backend::Float);
    const auto sd = spectral_decomposition(t);
    ASSERT_EQ(sd.components.size(), 1u) << d;
    EXPECT_EQ(sd.components[0].space.dim(), d);
    EXPECT_NEAR(std::abs(sd.components[0].lambda[0].to_complex() - Complex(2.0, 0.0)), 0.0, 1e-3);
  }
}

TEST(JointSpectrum, Equivalences) {
  const auto in = joint_spectrum_equivalences(diagonal_pair(), P("1,3"));
  EXPECT_TRUE(in.in_taylor_spectrum && in.is_joint_eigenvalue && in.top_homology_nonzero);
  const auto out = joint_spectrum_equivalences(diagonal_pair(), P("1,4"));
  EXPECT_FALSE(out.in_taylor_spectrum || out.is_joint_eigenvalue || out.top_homology_nonzero);
  const CommutingTuple j({jordan(3), jordan(3) * jordan(3)});
  EXPECT_TRUE(joint_spectrum_equivalences(j, P("0,0")).agree());
  EXPECT_EQ(generalized_eigenspace_dim(j, P("0,0")), 3u);
}

TEST(PolynomialMap, Examples) {
  const CommutingTuple t = diagonal_pair();
  const auto id = apply_polynomial_map(t, sys("z1 ; z2", 2));
  EXPECT_EQ(id.operators(), t.operators());
  EXPECT_EQ(apply_polynomial_map(t, sys("5", 2))[0], Matrix::identity(2, Backend::Exact).scaled(GaussianRational(5)));
  EXPECT_EQ(apply_polynomial_map(t, sys("z1 + z2", 2))[0], imat({{4, 0}, {0, 6}}));
  expect_code(ErrorCode::ArityMismatch, [&] { evaluate_polynomial(sys("z1", 1)[0], t); });
}

TEST(LocalizedHomology, Examples) {
  const auto q = quotient_algebra(groebner(sys("z^2")));
  const CommutingTuple t(q.multiplication);
  EXPECT_EQ(localized_homology(t, sys("z"), P("0")), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(localized_homology(t, sys("z"), P("1")), (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(localized_homology(t, sys("z - 3"), P("0")), (std::vector<std::size_t>{0, 0}));
}

TEST(SpectrumProperty, DecompositionSpansAndCharacterizationsAgree) {
  Draw draw(61);
  for (int i = 0; i < 40; ++i) {
    const CommutingTuple t = random_commuting_tuple(draw, 1 + draw.index(3), 1 + draw.index(6));
    const auto sd = spectral_decomposition(t);
    EXPECT_EQ(sd.total_dim(), t.dim());
    EXPECT_TRUE(check_decomposition(t, sd));
    for (const auto& c : sd.components) {
      EXPECT_EQ(generalized_eigenspace_dim(t, c.lambda), c.space.dim());
      EXPECT_TRUE(joint_spectrum_equivalences(t, c.lambda).agree());
      EXPECT_TRUE(joint_spectrum_equivalences(t, c.lambda).is_joint_eigenvalue);
    }
    Point off(t.size(), Scalar(GaussianRational(mpq_class(7, 3))));
    EXPECT_FALSE(joint_spectrum_equivalences(t, off).in_taylor_spectrum);
  }
}

TEST(SpectrumProperty, BackendsAgree) {
  Draw draw(62);
  for (int i = 0; i < 40; ++i) {
    const CommutingTuple t = random_commuting_tuple(draw, 1 + draw.index(3), 1 + draw.index(6));
    const auto exact = spectral_decomposition(t);
    const auto floating = spectral_decomposition(t.to_backend(Backend::Float));
    ASSERT_EQ(floating.components.size(), exact.components.size());
    for (const auto& c : exact.components) {
      const std::size_t k = floating.find(to_float(c.lambda), 1e-4);
      ASSERT_LT(k, floating.components.size());
      EXPECT_EQ(floating.components[k].space.dim(), c.space.dim());
    }
  }
}

}  // namespace
}  // namespace koszul
