#include "framed/exact_linalg.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "framed/errors.hpp"
#include "test_support.hpp"

namespace framed {
namespace {

using testing::Rng;

void expect_smith_invariants(const IntegerMatrix& a, const SmithDecomposition& snf) {
  ASSERT_EQ(snf.U.rows(), a.rows());
  ASSERT_EQ(snf.V.rows(), a.cols());
  EXPECT_EQ(snf.U * a * snf.V, snf.S);
  EXPECT_EQ(abs(determinant(snf.U)), 1);
  EXPECT_EQ(abs(determinant(snf.V)), 1);
  EXPECT_EQ(snf.U * snf.U_inverse, IntegerMatrix::identity(a.rows()));
  EXPECT_EQ(snf.V * snf.V_inverse, IntegerMatrix::identity(a.cols()));
  for (std::size_t i = 0; i < snf.S.rows(); ++i)
    for (std::size_t j = 0; j < snf.S.cols(); ++j)
      if (i != j) EXPECT_EQ(snf.S(i, j), 0) << "off-diagonal at " << i << "," << j;
  const IntegerVector d = snf.diagonal();
  bool seen_zero = false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_GE(d[i], 0);
    if (d[i] == 0) seen_zero = true;
    else EXPECT_FALSE(seen_zero) << "nonzero entry after a zero at " << i;
    if (i + 1 < d.size() && d[i] != 0)
      EXPECT_TRUE(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()))
          << d[i] << " does not divide " << d[i + 1];
  }
}

TEST(SmithNormalForm, IdentityIsFixed) {
  const IntegerMatrix id = IntegerMatrix::identity(3);
  const SmithDecomposition snf = smith_normal_form(id);
  EXPECT_EQ(snf.S, id);
  EXPECT_EQ(snf.U, id);
  EXPECT_EQ(snf.V, id);
}

// gcd(2,3) = 1 and the determinant 6 is preserved.
TEST(SmithNormalForm, DiagTwoThree) {
  const IntegerMatrix a{{2, 0}, {0, 3}};
  const SmithDecomposition snf = smith_normal_form(a);
  EXPECT_EQ(snf.S, (IntegerMatrix{{1, 0}, {0, 6}}));
  expect_smith_invariants(a, snf);
}

TEST(SmithNormalForm, ZeroOneByOne) {
  const SmithDecomposition snf = smith_normal_form(IntegerMatrix{{0}});
  EXPECT_EQ(snf.S, IntegerMatrix{{0}});
}

TEST(SmithNormalForm, ZeroDimensionalMatrices) {
  for (auto [r, c] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 3}, {2, 0}}) {
    const IntegerMatrix a(r, c);
    const SmithDecomposition snf = smith_normal_form(a);
    EXPECT_EQ(snf.rank(), 0u);
    EXPECT_EQ(snf.U, IntegerMatrix::identity(r));
    EXPECT_EQ(snf.V, IntegerMatrix::identity(c));
  }
}

TEST(SmithNormalForm, NegativeAndRectangular) {
  const IntegerMatrix a{{-4, 6, 2}, {8, -12, 10}};
  const SmithDecomposition snf = smith_normal_form(a);
  expect_smith_invariants(a, snf);
  // gcd of entries 2, gcd of 2x2 minors (0, -56, 84) is 28
  EXPECT_EQ(snf.diagonal(), (IntegerVector{2, 14}));
}

TEST(SmithNormalForm, LargeEntriesDoNotOverflow) {
  IntegerMatrix a(2, 2);
  a(0, 0) = Integer("123456789012345678901234567890");
  a(0, 1) = Integer("987654321098765432109876543210");
  a(1, 0) = 3;
  a(1, 1) = Integer("-99999999999999999999999999999");
  const SmithDecomposition snf = smith_normal_form(a);
  expect_smith_invariants(a, snf);
  EXPECT_EQ(snf.S(0, 0) * snf.S(1, 1), abs(determinant(a)));
}

TEST(SmithNormalForm, Deterministic) {
  Rng rng(7);
  const IntegerMatrix a = testing::random_matrix(rng, 5, 6, -9, 9);
  const SmithDecomposition x = smith_normal_form(a), y = smith_normal_form(a);
  EXPECT_EQ(x.U, y.U);
  EXPECT_EQ(x.S, y.S);
  EXPECT_EQ(x.V, y.V);
}

TEST(SmithNormalForm, RandomPropertySuite) {
  Rng rng(20240501);
  for (int trial = 0; trial < 500; ++trial) {
    const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
    const auto cols = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
    const IntegerMatrix a = testing::random_matrix(rng, rows, cols, -20, 20);
    SCOPED_TRACE("trial " + std::to_string(trial) + "\n" + to_string(a));
    const SmithDecomposition snf = smith_normal_form(a);
    expect_smith_invariants(a, snf);
    if (rows == cols) {
      const __int128 det = testing::leibniz_determinant(a);
      Integer product = 1;
      for (const Integer& d : snf.diagonal()) product *= d;
      const __int128 magnitude = det < 0 ? -det : det;
      EXPECT_EQ(product, Integer(static_cast<long>(magnitude)));
    }
  }
}

TEST(Determinant, AgreesWithLeibnizExpansion) {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 7));
    const IntegerMatrix a = testing::random_matrix(rng, n, n, -6, 6);
    EXPECT_EQ(determinant(a), Integer(static_cast<long>(testing::leibniz_determinant(a))));
  }
}

TEST(CokernelStructure, Examples) {
  EXPECT_EQ(cokernel_structure(IntegerMatrix{{0}}), (CokernelStructure{1, {}}));
  EXPECT_EQ(cokernel_structure(IntegerMatrix{{5}}), (CokernelStructure{0, {5}}));
  EXPECT_EQ(cokernel_structure(IntegerMatrix{{2, 0}, {0, 3}}), (CokernelStructure{0, {6}}));
  // Z^3 / <(2,0,0),(0,4,0)> = Z + Z_2 + Z_4
  EXPECT_EQ(cokernel_structure(IntegerMatrix{{2, 0}, {0, 4}, {0, 0}}),
            (CokernelStructure{1, {2, 4}}));
}

TEST(CokernelStructure, InvariantUnderUnimodularChanges) {
  Rng rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    const auto cols = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    const IntegerMatrix a = testing::random_matrix(rng, rows, cols, -10, 10);
    const IntegerMatrix b =
        testing::random_unimodular(rng, rows) * a * testing::random_unimodular(rng, cols);
    EXPECT_EQ(cokernel_structure(a), cokernel_structure(b));
  }
}

TEST(CokernelStructure, FreeRankMatchesRationalRank) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const IntegerMatrix a = testing::random_matrix(
        rng, static_cast<std::size_t>(testing::uniform(rng, 1, 6)),
        static_cast<std::size_t>(testing::uniform(rng, 1, 6)), -2, 2);
    EXPECT_EQ(cokernel_structure(a).free_rank, a.rows() - testing::rational_rank(a));
  }
}

TEST(SolveDiophantine, Identity) {
  const IntegerVector b{7, -2};
  EXPECT_EQ(solve_diophantine(IntegerMatrix::identity(2), b), b);
}

TEST(SolveDiophantine, ParityObstruction) {
  EXPECT_FALSE(solve_diophantine(IntegerMatrix{{2}}, IntegerVector{3}).has_value());
}

TEST(SolveDiophantine, DimensionMismatchThrows) {
  EXPECT_THROW(solve_diophantine(IntegerMatrix{{1, 2}}, IntegerVector{1, 2}), DomainError);
}

TEST(SolveDiophantine, RecoversConstructedRightHandSides) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const IntegerMatrix a = testing::random_matrix(rng, 3, 4, -9, 9);
    IntegerVector x0(4);
    for (auto& v : x0) v = testing::uniform(rng, -9, 9);
    const IntegerVector b = a * std::span<const Integer>(x0);
    const auto x = solve_diophantine(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a * std::span<const Integer>(*x), b);
  }
}

TEST(MatrixText, ReadWrite) {
  std::istringstream in("2 3\n1 -2 3\n0 0 12345678901234567890\n");
  const IntegerMatrix m = read_matrix(in);
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m(1, 2), Integer("12345678901234567890"));
  std::istringstream again(to_string(m));
  EXPECT_EQ(read_matrix(again), m);
}

TEST(MatrixText, Malformed) {
  for (const char* text : {"2 2\n1 2\n3\n", "x 2\n", "1 1\nfoo\n", "2 1\n1\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_matrix(in), FormatError) << text;
  }
}

}  // namespace
}  // namespace framed
