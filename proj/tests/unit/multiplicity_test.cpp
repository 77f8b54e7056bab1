#include "koszul/generators.hpp"
#include "koszul/groebner.hpp"
#include "koszul/multiplicity.hpp"
#include "koszul/spectrum.hpp"
#include "support.hpp"

namespace koszul {
namespace {

using test::expect_code;
using test::pt;
using test::sys;

std::size_t local(const std::string& system, const std::string& at) {
  return local_multiplicity(sys(system), pt(at)).multiplicity;
}

TEST(LocalMultiplicity, Examples) {
  for (unsigned k = 1; k <= 5; ++k) EXPECT_EQ(local("z^" + std::to_string(k), "0"), k);
  EXPECT_EQ(local("z1^2 ; z2^3", "0,0"), 6u);
  EXPECT_EQ(local("z1^2 - z2 ; z2^2", "0,0"), 4u);
  EXPECT_EQ(local("z1 + z2 ; z1 - z2", "0,0"), 1u);
  EXPECT_EQ(local("z1*(z1 - 1) ; z2", "1,0"), 1u);
  // Single zero at the origin; quotient dimension 3 from an independent
  // Groebner computation.
  EXPECT_EQ(local("z1^3 - 2*z1*z2 ; z1^2*z2 - 2*z2^2 + z1", "0,0"), 3u);
}

TEST(LocalMultiplicity, CertificateRecordsThePlateau) {
  const auto c = local_multiplicity(sys("z^3"), pt("0"));
  EXPECT_EQ(c.codims, (std::vector<std::size_t>{1, 2, 3, 3}));
  EXPECT_EQ(c.stable_order, 3u);
  EXPECT_EQ(truncated_codimension(sys("z^3"), 2), 2u);
}

TEST(LocalMultiplicity, Errors) {
  expect_code(ErrorCode::NotAZero, [] { local("z - 1", "0"); });
  expect_code(ErrorCode::ArityMismatch, [] { local_multiplicity(sys("z1 ; z2 ; z1 + z2"), pt("0,0")); });
  expect_code(ErrorCode::NotIsolated, [] { local_multiplicity(sys("z1*z2 ; z1*z2"), pt("0,0"), {8}); });
}

TEST(Jacobian, Examples) {
  EXPECT_TRUE(jacobian_regular(sys("z1 ; z2"), pt("0,0")));
  EXPECT_FALSE(jacobian_regular(sys("z1^2 ; z2"), pt("0,0")));
  EXPECT_TRUE(jacobian_regular(sys("z1 + z2 ; z1 - z2"), pt("0,0")));
  EXPECT_EQ(jacobian_determinant(sys("z1 + z2 ; z1 - z2"), pt("0,0")), GaussianRational(-2));
}

TEST(DiagonalSystem, Construction) {
  const auto h = build_diagonal_system(sys("z^2"));
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0], sys("z1 - z2")[0]);
  EXPECT_EQ(h[1], sys("z1^2", 2)[0]);
  const auto h4 = build_diagonal_system(sys("z1^2 - z2 ; z2^2"));
  ASSERT_EQ(h4.size(), 4u);
  EXPECT_EQ(h4[0].vars(), 4u);
}

TEST(DiagonalDegree, Examples) {
  const auto a = verify_diagonal_degree(sys("z^2"), pt("0"));
  EXPECT_EQ(a.degree_g, 2u);
  EXPECT_EQ(a.degree_h, 2u);
  const auto b = verify_diagonal_degree(sys("z1^2 - z2 ; z2^2"), pt("0,0"));
  EXPECT_EQ(b.degree_g, 4u);
  EXPECT_TRUE(b.holds());
  EXPECT_EQ(verify_diagonal_degree(sys("z1 + z2 ; z1 - z2"), pt("0,0")).degree_h, 1u);
}

TEST(GlobalTable, Examples) {
  const auto a = global_multiplicity_table(sys("z^2 - 1/4"));
  ASSERT_EQ(a.zeros.size(), 2u);
  EXPECT_EQ(a.zeros[0].lambda, to_point(pt("-1/2")));
  EXPECT_EQ(a.zeros[1].lambda, to_point(pt("1/2")));
  EXPECT_EQ(a.zeros[0].multiplicity, 1u);

  const auto b = global_multiplicity_table(sys("z1^2 - z2 ; z2^2"));
  ASSERT_EQ(b.zeros.size(), 1u);
  EXPECT_EQ(b.zeros[0].multiplicity, 4u);
  EXPECT_EQ(b.quotient_dim, 4u);

  const auto c = global_multiplicity_table(sys("z1*(z1 - 1) ; z2"));
  ASSERT_EQ(c.zeros.size(), 2u);
  EXPECT_EQ(c.zeros[0].lambda, to_point(pt("0,0")));
  EXPECT_EQ(c.zeros[1].lambda, to_point(pt("1,0")));
  EXPECT_EQ(c.backend, Backend::Exact);

  expect_code(ErrorCode::NotZeroDimensional, [] { global_multiplicity_table(sys("z1*z2 ; z1^2")); });
}

TEST(GlobalTable, IrrationalZerosFallBackToFloat) {
  // Zeros: (0,0), (1,1) and four irrational points, all simple; quotient
  // dimension 6 from an independent Groebner computation.
  const auto t = global_multiplicity_table(sys("z1^3 - z2 ; z2^2 - z1"));
  EXPECT_EQ(t.backend, Backend::Float);
  EXPECT_EQ(t.quotient_dim, 6u);
  ASSERT_EQ(t.zeros.size(), 6u);
  for (const auto& z : t.zeros) EXPECT_EQ(z.multiplicity, 1u);
}

TEST(Winding, UnivariateOracle) {
  EXPECT_NEAR(winding_number(sys("z^2 - 1/4")[0], {0, 0}, 1.0), 2.0, 0.1);
  EXPECT_NEAR(winding_number(sys("z - 2")[0], {0, 0}, 1.0), 0.0, 0.1);
  EXPECT_NEAR(winding_number(sys("(z - 1 - i)^3")[0], {1, 1}, 0.5), 3.0, 0.1);
}

// Three independent numbers per zero: truncated Macaulay codimension, Groebner
// quotient dimension summed over zeros, and the generalized eigenspace of the
// multiplication tuple.
TEST(MultiplicityProperty, TripleOracleOnRegularSystems) {
  Draw draw(71);
  for (int i = 0; i < 15; ++i) {
    const std::size_t n = 1 + draw.index(2);
    const auto g = random_regular_system(draw, n);
    const auto table = global_multiplicity_table(g);
    ASSERT_EQ(table.backend, Backend::Exact);
    const CommutingTuple mult(quotient_algebra(groebner(g)).multiplication);
    std::size_t total = 0;
    for (const auto& z : table.zeros) {
      std::vector<GaussianRational> at;
      for (const auto& s : z.lambda) at.push_back(s.exact());
      EXPECT_EQ(local_multiplicity(g, at).multiplicity, 1u);
      EXPECT_EQ(generalized_eigenspace_dim(mult, z.lambda), 1u);
      EXPECT_TRUE(jacobian_regular(g, at));
      EXPECT_TRUE(verify_diagonal_degree(g, at).holds());
      total += z.multiplicity;
    }
    EXPECT_EQ(total, table.quotient_dim);
  }
}

TEST(MultiplicityProperty, TranslationInvariance) {
  Draw draw(72);
  const auto g = sys("z1^2 - z2 ; z2^2");
  for (int i = 0; i < 10; ++i) {
    const std::vector<GaussianRational> shift{GaussianRational(draw.integer(-3, 3), draw.integer(-3, 3)),
                                              GaussianRational(draw.integer(-3, 3))};
    std::vector<GaussianRational> minus{-shift[0], -shift[1]};
    std::vector<Polynomial> moved;
    for (const auto& p : g) moved.push_back(p.translated(minus));
    EXPECT_EQ(local_multiplicity(moved, shift).multiplicity, 4u);
  }
}

}  // namespace
}  // namespace koszul
