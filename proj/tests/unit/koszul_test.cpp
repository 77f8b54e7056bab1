#include "koszul/generators.hpp"
#include "koszul/linalg.hpp"
#include "support.hpp"

namespace koszul {
namespace {

using test::expect_code;
using test::imat;
using test::jordan;

std::vector<std::size_t> dims_of(std::vector<Matrix> ops) { return koszul_homology(CommutingTuple(std::move(ops))).dims; }

std::size_t joint_kernel_dim(const CommutingTuple& t) {
  Matrix stacked = t[0];
  for (std::size_t i = 1; i < t.size(); ++i) stacked = Matrix::vstack(stacked, t[i]);
  return kernel_basis(stacked).dim();
}

std::size_t cokernel_dim(const CommutingTuple& t) {
  Matrix row = t[0];
  for (std::size_t i = 1; i < t.size(); ++i) row = Matrix::hstack(row, t[i]);
  return t.dim() - rank(row);
}

TEST(CommutingTuple, RejectsNonCommutingAndMismatchedInput) {
  expect_code(ErrorCode::NotCommuting, [] { CommutingTuple({imat({{0, 1}, {0, 0}}), imat({{0, 0}, {1, 0}})}); });
  expect_code(ErrorCode::DimensionMismatch, [] { CommutingTuple({imat({{1}}), Matrix::identity(2, Backend::Exact)}); });
  expect_code(ErrorCode::BackendMismatch,
              [] { CommutingTuple({Matrix::identity(2, Backend::Exact), Matrix::identity(2, Backend::Float)}); });
}

TEST(BuildComplex, DifferentialLayout) {
  const Matrix a1 = imat({{2}});
  const Matrix a2 = imat({{3}});
  const KoszulComplex k = build_complex(CommutingTuple({a1, a2}));
  EXPECT_EQ(k.chain.dims, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(k.chain.differential(1), imat({{2, 3}}));
  EXPECT_EQ(k.chain.differential(2), imat({{-3}, {2}}));
  EXPECT_TRUE((k.chain.differential(1) * k.chain.differential(2)).is_zero());
}

TEST(Homology, Examples) {
  EXPECT_EQ(dims_of({jordan(2)}), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(dims_of({imat({{2, 1}, {0, 3}})}), (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(dims_of({imat({{0}}), imat({{0}})}), (std::vector<std::size_t>{1, 2, 1}));
  const HomologyProfile p = koszul_homology(CommutingTuple({jordan(3)}));
  EXPECT_EQ(p.euler, 0);
  EXPECT_EQ(p.index, 0);
}

// Dimensions from an independent Koszul rank computation in a computer
// algebra system, for polynomials in the 4 x 4 lower shift J.
TEST(Homology, OracleFixtures) {
  const Matrix j = jordan(4);
  const Matrix j2 = j * j;
  const Matrix j3 = j2 * j;
  EXPECT_EQ(dims_of({j2, j3}), (std::vector<std::size_t>{2, 4, 2}));
  EXPECT_EQ(dims_of({j2, j3, j + j2}), (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_EQ(dims_of({j2, j3, j2}), (std::vector<std::size_t>{2, 6, 6, 2}));
  const Matrix d = imat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 0}});
  EXPECT_EQ(dims_of({d, d * d - d}), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(Homology, ShiftedTupleMovesTheSpectrum) {
  const CommutingTuple t({imat({{1, 0}, {0, 2}}), Matrix::identity(2, Backend::Exact)});
  EXPECT_EQ(koszul_homology(t.shifted(to_point(test::pt("1,1")))).dims, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(koszul_homology(t.shifted(to_point(test::pt("3,1")))).dims, (std::vector<std::size_t>{0, 0, 0}));
}

TEST(Homology, FloatBackendAgrees) {
  const Matrix j = jordan(4);
  const CommutingTuple t({j * j, j * j * j});
  EXPECT_EQ(koszul_homology(t.to_backend(Backend::Float)).dims, koszul_homology(t).dims);
}

TEST(MappingCone, JordanExample) {
  const CommutingTuple t({imat({{0}})});
  EXPECT_TRUE(verify_cone_isomorphism(t, imat({{0}})));
  EXPECT_TRUE(verify_cone_isomorphism(t, imat({{5}})));
  const KoszulComplex k = build_complex(t);
  const ChainComplex c = mapping_cone(k, imat({{0}}));
  EXPECT_EQ(homology_dims(c), (std::vector<std::size_t>{1, 2, 1}));
  expect_code(ErrorCode::NotCommuting,
              [] { verify_cone_isomorphism(CommutingTuple({imat({{0, 1}, {0, 0}})}), imat({{0, 0}, {1, 0}})); });
}

TEST(HomologyPresentation, InducedMapOfCommutingOperator) {
  // On H_1(J) = ker J, multiplication by J acts as zero; by 1 + J as identity.
  const Matrix j = jordan(3);
  const KoszulComplex k = build_complex(CommutingTuple({j}));
  const HomologyPresentation h = present_homology(k.chain, 1);
  ASSERT_EQ(h.dim(), 1u);
  EXPECT_TRUE(induced_map(h, j).is_zero());
  EXPECT_EQ(induced_map(h, Matrix::identity(3, Backend::Exact) + j), Matrix::identity(1, Backend::Exact));
}

TEST(KoszulProperty, EulerCharacteristicAndEnds) {
  Draw draw(41);
  for (int i = 0; i < 60; ++i) {
    const CommutingTuple t = random_commuting_tuple(draw, 1 + draw.index(3), 1 + draw.index(6));
    const KoszulComplex k = build_complex(t);
    for (std::size_t d = 1; d <= k.chain.top(); ++d)
      EXPECT_TRUE((k.chain.differential(d) * k.chain.differential(d + 1)).is_zero());
    const HomologyProfile p = homology(k);
    EXPECT_EQ(p.index, 0);
    EXPECT_EQ(p.dims.back(), joint_kernel_dim(t));
    EXPECT_EQ(p.dims.front(), cokernel_dim(t));
  }
}

TEST(KoszulProperty, ConeIsomorphismAndHomology) {
  Draw draw(42);
  for (int i = 0; i < 40; ++i) {
    const CommutingTuple t = random_commuting_tuple(draw, 1 + draw.index(2), 1 + draw.index(5));
    const Matrix b = random_commutant(draw, t);
    EXPECT_TRUE(verify_cone_isomorphism(t, b));
    std::vector<Matrix> ext = t.operators();
    ext.push_back(b);
    EXPECT_EQ(homology_dims(mapping_cone(build_complex(t), b)), koszul_homology(CommutingTuple(ext)).dims);
  }
}

TEST(KoszulProperty, PermutingOperatorsPreservesHomology) {
  Draw draw(43);
  for (int i = 0; i < 40; ++i) {
    const CommutingTuple t = random_commuting_tuple(draw, 2 + draw.index(2), 1 + draw.index(5));
    std::vector<Matrix> reversed(t.operators().rbegin(), t.operators().rend());
    EXPECT_EQ(koszul_homology(t).dims, koszul_homology(CommutingTuple(reversed)).dims);
  }
}

TEST(Binomial, SubsetsAndCoefficients) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(3, 5), 0u);
  const auto s = subsets(3, 2);
  EXPECT_EQ(s, (std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}}));
}

}  // namespace
}  // namespace koszul
