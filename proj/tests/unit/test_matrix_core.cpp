#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tepkit/decompositions.hpp"
#include "tepkit/fixtures.hpp"
#include "tepkit/generators.hpp"
#include "tepkit/matrix_core.hpp"

using namespace tepkit;

namespace {

const Tolerance kTol;

CMatrix unit_column(Index n, Index k) {
  CMatrix e = CMatrix::Zero(n, 1);
  e(k, 0) = 1.0;
  return e;
}

}  // namespace

TEST(ConjTranspose, ConjugatesAndTransposes) {
  const CMatrix a = fixtures::t_hermitian_not_ep();
  const CMatrix expected = from_rows({{0, 0, 0}, {1, 0, 1}, {1, 0, 1}});
  EXPECT_EQ(conj_transpose(a), expected);
  EXPECT_EQ(conj_transpose(CMatrix::Identity(3, 3)), CMatrix::Identity(3, 3));

  const CMatrix i = from_rows({{Complex(0, 1)}});
  EXPECT_EQ(conj_transpose(i)(0, 0), Complex(0, -1));

  const CMatrix rect = from_rows({{Complex(1, 2), Complex(3, -4), 5.0}});
  const CMatrix rt = conj_transpose(rect);
  ASSERT_EQ(rt.rows(), 3);
  ASSERT_EQ(rt.cols(), 1);
  EXPECT_EQ(rt(1, 0), Complex(3, 4));
}

TEST(ConjTranspose, IsABitExactInvolution) {
  Sampler s(11);
  for (int k = 0; k < 50; ++k) {
    const CMatrix a = s.gaussian(s.integer(1, 9), s.integer(1, 9));
    EXPECT_EQ(conj_transpose(conj_transpose(a)), a);
    EXPECT_LE(std::abs(frobenius(a) - frobenius(conj_transpose(a))), kTol.eq_atol);
  }
}

TEST(ApproxEq, Examples) {
  Sampler s(1);
  const CMatrix a = s.gaussian(3, 4);
  EXPECT_TRUE(approx_eq(a, a, kTol));

  CMatrix tiny = CMatrix::Zero(3, 3);
  tiny(1, 2) = 1e-13;
  EXPECT_TRUE(approx_eq(CMatrix::Zero(3, 3), tiny, kTol));

  EXPECT_FALSE(approx_eq(CMatrix::Identity(2, 2), 2.0 * CMatrix::Identity(2, 2), kTol));
}

TEST(ApproxEq, ShapeMismatchIsAnError) {
  EXPECT_THROW(approx_eq(CMatrix::Zero(2, 3), CMatrix::Zero(3, 2), kTol), UsageError);
}

TEST(ApproxEq, ThresholdScalesWithNorm) {
  const CMatrix big = 1e6 * CMatrix::Identity(2, 2);
  CMatrix off = big;
  off(0, 0) += 1e-5;  // relative change 1e-11
  EXPECT_TRUE(approx_eq(big, off, kTol));
  off(0, 0) += 1e-2;
  EXPECT_FALSE(approx_eq(big, off, kTol));
}

TEST(Verdict, MarginAndBorderline) {
  const Verdict clear = make_verdict(1e-16, 1e-10);
  EXPECT_TRUE(clear.holds);
  EXPECT_FALSE(clear.borderline());
  const Verdict edge = make_verdict(2e-10, 1e-10);
  EXPECT_FALSE(edge.holds);
  EXPECT_TRUE(edge.borderline());

  const Verdict both = all_of({make_verdict(1e-15, 1e-10), make_verdict(5.0, 1e-10)});
  EXPECT_FALSE(both.holds);
  EXPECT_DOUBLE_EQ(both.residual, 5.0);
}

TEST(Tolerance, ValidateRejectsNegativeAndNonFinite) {
  Tolerance t;
  EXPECT_NO_THROW(t.validate());
  t.eq_rtol = -1.0;
  EXPECT_THROW(t.validate(), UsageError);
  t.eq_rtol = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(t.validate(), UsageError);
  t = Tolerance{};
  t.rank_rtol = std::numeric_limits<double>::infinity();
  EXPECT_THROW(t.validate(), UsageError);
}

TEST(FromRows, RaggedRowsRejected) {
  EXPECT_THROW(from_rows({{1, 2}, {3}}), UsageError);
}

TEST(CheckFinite, RejectsNaN) {
  CMatrix a = CMatrix::Identity(2, 2);
  a(1, 0) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  EXPECT_THROW(check_finite(a), InputError);
}

TEST(BlockDiag, HandlesEmptyBlocks) {
  const CMatrix a = CMatrix::Identity(2, 2);
  EXPECT_EQ(block_diag(a, CMatrix(0, 0)), a);
  const CMatrix d = block_diag(a, CMatrix::Zero(1, 3));
  EXPECT_EQ(d.rows(), 3);
  EXPECT_EQ(d.cols(), 5);
}

TEST(RangesEqual, Examples) {
  Sampler s(2);
  const CMatrix a = s.low_rank(5, 3, 2, 10.0);
  const CMatrix m = s.gaussian(3, 4);  // rank(A M) = rank(A) with probability 1
  EXPECT_TRUE(ranges_equal(a, a * m, kTol));

  const CMatrix e2 = fixtures::t_hermitian_not_ep();
  const CMatrix t = fixtures::skip_isometry();
  EXPECT_TRUE(ranges_equal(e2, t * e2.adjoint() * t, kTol));

  EXPECT_FALSE(ranges_equal(unit_column(3, 0), unit_column(3, 1), kTol));
  EXPECT_THROW(ranges_equal(CMatrix::Zero(2, 2), CMatrix::Zero(3, 2), kTol), UsageError);
}

TEST(RangesEqual, AgreesWithRankOracle) {
  Sampler s(3);
  int agreed_true = 0;
  for (int k = 0; k < 200; ++k) {
    const Index m = s.integer(1, 6);
    const CMatrix basis = s.isometry(m, s.integer(0, m));
    // Either the same subspace twice or two independent draws.
    const CMatrix a = basis * s.gaussian(basis.cols(), s.integer(1, 4));
    const CMatrix b = s.coin() ? CMatrix(basis * s.gaussian(basis.cols(), s.integer(1, 4)))
                               : s.low_rank(m, 3, s.integer(0, std::min<Index>(m, 3)), 10.0);
    const bool got = ranges_equal(a, b, kTol);
    EXPECT_EQ(got, oracle::range_eq(a, b)) << "draw " << k;
    agreed_true += got;
  }
  EXPECT_GT(agreed_true, 20);
}

TEST(RangesEqual, IsAnEquivalenceOnGeneratedInstances) {
  Sampler s(4);
  for (int k = 0; k < 100; ++k) {
    const Index m = s.integer(1, 6);
    const CMatrix basis = s.isometry(m, s.integer(0, m));
    const CMatrix a = basis * s.gaussian(basis.cols(), 3);
    const CMatrix b = basis * s.gaussian(basis.cols(), 2);
    const CMatrix c = s.coin() ? CMatrix(basis * s.gaussian(basis.cols(), 4)) : s.gaussian(m, 1);
    EXPECT_TRUE(ranges_equal(a, a, kTol));
    EXPECT_EQ(ranges_equal(a, b, kTol), ranges_equal(b, a, kTol));
    if (ranges_equal(a, b, kTol) && ranges_equal(b, c, kTol)) {
      EXPECT_TRUE(ranges_equal(a, c, kTol));
    }
  }
}

TEST(RangesEqual, RangeOfAAStarA) {
  Sampler s(5);
  for (int k = 0; k < 50; ++k) {
    const Index m = s.integer(1, 6), n = s.integer(1, 6);
    const CMatrix a = s.low_rank(m, n, s.integer(0, std::min(m, n)), 100.0);
    EXPECT_TRUE(ranges_equal(a, a * a.adjoint() * a, kTol));
  }
}

TEST(NullspaceContained, Examples) {
  const CMatrix t = fixtures::shift_isometry();
  const CMatrix a = fixtures::t_ep_not_t_normal();
  EXPECT_TRUE(nullspace_contained(t, a, kTol));
  EXPECT_TRUE(nullspace_contained(a, a, kTol));

  Sampler s(6);
  EXPECT_TRUE(nullspace_contained(CMatrix::Identity(4, 4), s.gaussian(2, 4), kTol));
  EXPECT_FALSE(nullspace_contained(CMatrix::Zero(2, 4), s.gaussian(2, 4), kTol));
  EXPECT_THROW(nullspace_contained(CMatrix::Zero(2, 4), CMatrix::Zero(2, 3), kTol), UsageError);
}

TEST(NullspaceContained, AgreesWithRankOracle) {
  Sampler s(7);
  for (int k = 0; k < 200; ++k) {
    const Index n = s.integer(1, 6);
    const Index m = s.integer(1, 6);
    const CMatrix a = s.low_rank(m, n, s.integer(0, std::min(m, n)), 10.0);
    const CMatrix b = s.coin() ? CMatrix(s.gaussian(3, a.rows()) * a)
                               : s.low_rank(3, n, s.integer(0, std::min<Index>(3, n)), 10.0);
    EXPECT_EQ(nullspace_contained(a, b, kTol), oracle::null_in(a, b)) << "draw " << k;
  }
}

TEST(Subspaces, InclusionAndNullEquality) {
  Sampler s(8);
  const CMatrix basis = s.isometry(5, 3);
  const CMatrix a = basis.leftCols(2) * s.gaussian(2, 2);
  EXPECT_TRUE(range_inclusion(a, basis, kTol).holds);
  EXPECT_FALSE(range_inclusion(basis, a, kTol).holds);

  const CMatrix m = s.gaussian(2, 2);  // invertible with probability 1
  EXPECT_TRUE(null_space_equality(a.adjoint(), m * a.adjoint(), kTol).holds);
  EXPECT_FALSE(null_space_equality(a.adjoint(), basis.adjoint(), kTol).holds);
}

TEST(Vanishes, ScalesWithReference) {
  CMatrix x = CMatrix::Zero(2, 2);
  x(0, 0) = 1e-8;
  EXPECT_TRUE(vanishes(x, 1e3, kTol).holds);
  EXPECT_FALSE(vanishes(x, 1.0, kTol).holds);
}
