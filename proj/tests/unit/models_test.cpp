#include "koszul/generators.hpp"
#include "koszul/models.hpp"
#include "support.hpp"

namespace koszul {
namespace {

using test::expect_code;
using test::imat;
using test::jordan;
using test::pt;
using test::sys;

DomainDescriptor disc(const std::string& center, const mpq_class& r) {
  return {DomainDescriptor::Kind::Polydisc, pt(center), {r}};
}

ModelTuple model(DomainDescriptor d, const std::string& system) {
  const std::size_t n = d.dim();
  return {std::move(d), sys(system, n)};
}

TEST(Location, ExactComparison) {
  const auto unit = DomainDescriptor::unit_polydisc(2);
  EXPECT_EQ(locate(unit, to_point(pt("1/2,-1/2i"))), Location::Inside);
  EXPECT_EQ(locate(unit, to_point(pt("1,0"))), Location::Boundary);
  EXPECT_EQ(locate(unit, to_point(pt("0,2"))), Location::Outside);
  const auto ball = DomainDescriptor::unit_ball(2);
  EXPECT_EQ(locate(ball, to_point(pt("3/4,3/4"))), Location::Outside);
  EXPECT_EQ(locate(ball, to_point(pt("3/5,4/5"))), Location::Boundary);
  EXPECT_EQ(coordinate_index(ball, to_point(pt("1/2,1/2"))), -1);
  EXPECT_EQ(coordinate_index(ball, to_point(pt("1,1"))), 0);
  expect_code(ErrorCode::ZeroOnBoundary, [&] { coordinate_index(ball, to_point(pt("0,1"))); });
}

TEST(Location, FloatMargin) {
  const auto unit = DomainDescriptor::unit_polydisc(1);
  EXPECT_EQ(locate(unit, {Scalar(Complex(1.0 - 1e-9, 0.0))}), Location::Boundary);
  EXPECT_EQ(locate(unit, {Scalar(Complex(0.9, 0.0))}), Location::Inside);
}

TEST(ClassifyZeros, Examples) {
  const auto a = classify_zeros(model(DomainDescriptor::unit_polydisc(1), "z^2 - 1/4"));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].location, Location::Inside);
  EXPECT_EQ(a[1].location, Location::Inside);
  const auto b = classify_zeros(model(DomainDescriptor::unit_polydisc(1), "z - 2"));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].location, Location::Outside);
  const auto c = classify_zeros(model(DomainDescriptor::unit_polydisc(2), "z1^2 ; z2^2"));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].multiplicity, 4u);
  expect_code(ErrorCode::ZeroOnBoundary, [] { classify_zeros(model(DomainDescriptor::unit_polydisc(1), "z - i")); });
}

TEST(GlobalIndex, Examples) {
  const auto a = global_index(model(DomainDescriptor::unit_polydisc(1), "z^2 - 1/4"));
  EXPECT_EQ(a.global_index, -2);
  ASSERT_TRUE(a.winding.has_value());
  EXPECT_NEAR(*a.winding, 2.0, 0.1);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(global_index(model(DomainDescriptor::unit_polydisc(1), "z - 2")).global_index, 0);
  const auto c = global_index(model(DomainDescriptor::unit_polydisc(2), "z1^2 ; z2^2"));
  EXPECT_EQ(c.global_index, -4);
  EXPECT_EQ(c.quotient_dim, 4u);
  EXPECT_TRUE(c.pass());
  EXPECT_EQ(global_index(model(disc("1+i", mpq_class(1, 2)), "(z - 1 - i)^3")).global_index, -3);
}

TEST(GlobalIndex, FloatZeroTable) {
  ModelOptions opts;
  opts.backend = Backend::Float;
  const auto r = global_index(model(DomainDescriptor::unit_polydisc(1), "z^2 - 1/2"), opts);
  EXPECT_EQ(r.global_index, -2);
  EXPECT_TRUE(r.pass());
  const auto outside = global_index(model(DomainDescriptor::unit_polydisc(1), "z^2 - 2"), opts);
  EXPECT_EQ(outside.global_index, 0);
}

TEST(LocalIndex, Examples) {
  const auto unit = DomainDescriptor::unit_polydisc(1);
  EXPECT_EQ(local_index(model(unit, "z^2 - 1/4"), pt("1/2")), -1);
  EXPECT_EQ(local_index(model(DomainDescriptor::unit_polydisc(2), "z1^2 ; z2^2"), pt("0,0")), -4);
  EXPECT_EQ(local_index(model(unit, "z - 2"), pt("2")), 0);
  expect_code(ErrorCode::NotAZero, [&] { local_index(model(unit, "z - 2"), pt("0")); });
}

TEST(Binomial, TransformMatrices) {
  const IntMatrix id = multiply(binomial_left(1, 4, 4), binomial_right(1, 4, 4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(id[i][j], i == j ? 1 : 0);
  EXPECT_EQ(binomial_right(2, 3, 3), (IntMatrix{{1, 0, 0}, {2, 1, 0}, {1, 2, 1}}));
  EXPECT_EQ(binomial_left(2, 3, 3), (IntMatrix{{1, 0, 0}, {-2, 1, 0}, {3, -2, 1}}));
  const auto check = check_binomial_identities(8, 8);
  EXPECT_TRUE(check.pass());
  EXPECT_GT(check.cases, 0u);
}

TEST(RegularCase, Examples) {
  EXPECT_EQ(regular_case_identities({1, 0}, 1), (std::vector<long long>{1, 0}));
  EXPECT_EQ(regular_case_identities({1, 0}, 2), (std::vector<long long>{1, 1, 0}));
  EXPECT_EQ(regular_case_identities({1, 0, 0}, 4), (std::vector<long long>{1, 2, 1, 0, 0}));
  expect_code(ErrorCode::InvalidArgument, [] { regular_case_identities({1, 0, 0}, 1); });
}

TEST(Reciprocity, Examples) {
  const auto worked = reciprocity_check(DomainDescriptor::unit_polydisc(1), disc("0", mpq_class(1, 2)), sys("z*(z - 3/4)"));
  EXPECT_EQ(worked.lhs, 1);
  EXPECT_EQ(worked.rhs, 1);
  const auto disjoint = reciprocity_check(disc("0", 1), disc("5", 1), sys("z*(z - 5)"));
  EXPECT_EQ(disjoint.lhs, 0);
  EXPECT_TRUE(disjoint.holds());
  const auto same = reciprocity_check(disc("0", 1), disc("0", 1), sys("z^2 - 1/4"));
  EXPECT_EQ(same.lhs, 2);
  EXPECT_TRUE(same.holds());
  const auto bidisc = reciprocity_check(DomainDescriptor::unit_polydisc(2),
                                        {DomainDescriptor::Kind::Polydisc, pt("0,0"), {mpq_class(1, 2), mpq_class(1, 2)}},
                                        sys("z1*(z1 - 3/4) ; z2^2"));
  EXPECT_EQ(bidisc.lhs, 2);
  EXPECT_TRUE(bidisc.holds());
  expect_code(ErrorCode::ZeroOnBoundary,
              [] { reciprocity_check(disc("0", 1), disc("0", mpq_class(3, 4)), sys("z*(z - 3/4)")); });
}

TEST(TensorIdentity, Examples) {
  const CommutingTuple a({imat({{0}})});
  const auto zero = tensor_index_identity(a, CommutingTuple({imat({{0}})}));
  EXPECT_EQ(zero.dims_tensor, zero.dims_a);
  EXPECT_TRUE(zero.holds());
  const auto jordan_case = tensor_index_identity(a, CommutingTuple({jordan(2)}));
  EXPECT_EQ(jordan_case.dims_tensor, (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(jordan_case.holds());
  const auto flat = tensor_index_identity(a, CommutingTuple({imat({{0, 0}, {0, 0}})}));
  EXPECT_EQ(flat.dims_tensor, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(flat.index_tensor, 0);
  expect_code(ErrorCode::NotNilpotent, [&] { tensor_index_identity(a, CommutingTuple({imat({{1}})})); });
}

TEST(ModelsProperty, RegularZerosHaveLocalIndexMinusOne) {
  Draw draw(81);
  for (int i = 0; i < 15; ++i) {
    const std::size_t n = 1 + draw.index(2);
    const ModelTuple mt{n == 1 ? disc("0", mpq_class(5, 2))
                               : DomainDescriptor{DomainDescriptor::Kind::Ball, pt("0,0"), {mpq_class(5, 2)}},
                        random_regular_system(draw, n)};
    try {
      const auto report = global_index(mt);
      long long sum = 0;
      for (std::size_t k = 0; k < report.zeros.size(); ++k) {
        const auto& z = report.zeros[k];
        EXPECT_EQ(report.local_indices[k], z.location == Location::Inside ? -1 : 0);
        sum += report.local_indices[k];
      }
      EXPECT_EQ(sum, report.global_index);
      EXPECT_TRUE(report.pass());
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ZeroOnBoundary) << e.what();
    }
  }
}

TEST(ModelsProperty, ReciprocityOnRandomDiscs) {
  Draw draw(82);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_regular_system(draw, 1);
    const auto a = disc(std::to_string(draw.integer(-1, 1)), mpq_class(2 * draw.integer(1, 4) + 1, 4));
    const auto b = disc(std::to_string(draw.integer(-1, 1)), mpq_class(2 * draw.integer(1, 4) + 1, 4));
    try {
      EXPECT_TRUE(reciprocity_check(a, b, g).holds());
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ZeroOnBoundary) << e.what();
    }
  }
}

TEST(ModelsProperty, TensorBookkeeping) {
  Draw draw(83);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + draw.index(2);
    const auto r = tensor_index_identity(random_commuting_tuple(draw, n, 1 + draw.index(4)),
                                         random_nilpotent_tuple(draw, n, 1 + draw.index(3)));
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(r.index_tensor, 0);
  }
}

}  // namespace
}  // namespace koszul
