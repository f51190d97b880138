#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tepkit/canonical.hpp"
#include "tepkit/decompositions.hpp"
#include "tepkit/fixtures.hpp"
#include "tepkit/generators.hpp"
#include "tepkit/matrix_classes.hpp"

using namespace tepkit;

namespace {

const Tolerance kTol;

void expect_common_invariants(const TepCanonical& f, const CMatrix& a, const CMatrix& t) {
  const Index r = f.rank;
  EXPECT_EQ(r, oracle::rank(a));
  EXPECT_LE((f.reconstruct(t) - a).norm(), 1e-10 * a.norm());
  EXPECT_EQ(oracle::rank(f.d), r);
  EXPECT_TRUE(oracle::is_ep(f.ep_factor));
  EXPECT_TRUE(oracle::near(f.ep_factor * t, a));
  EXPECT_TRUE(oracle::near(t * t.adjoint() * f.ep_factor, f.ep_factor));
  EXPECT_TRUE(oracle::near(f.ep_factor * t * t.adjoint(), f.ep_factor));
  EXPECT_TRUE(oracle::near(pinv_via_canonical(f, t), oracle::pinv(a)));
  const Index m = f.u.rows();
  EXPECT_LE((f.u.adjoint() * f.u - CMatrix::Identity(m, m)).norm(), 1e-12);
}

}  // namespace

TEST(CanonicalRect, ShiftExample) {
  const CMatrix a = fixtures::t_ep_not_t_normal();
  const CMatrix t = fixtures::shift_isometry();
  const TepCanonical f = tep_canonical_rect(a, t, kTol);
  EXPECT_EQ(f.kind, CanonicalKind::Rectangular);
  EXPECT_LE((f.reconstruct(t) - a).norm(), 1e-10 * a.norm());
  expect_common_invariants(f, a, t);
}

TEST(CanonicalRect, PartialIsometryItself) {
  Sampler s(1);
  for (int k = 0; k < 20; ++k) {
    const Index m = s.integer(1, 6), n = s.integer(1, 6);
    const CMatrix t = s.partial_isometry(m, n, s.integer(1, std::min(m, n)));
    const TepCanonical f = tep_canonical_rect(t, t, kTol);
    expect_common_invariants(f, t, t);
    // D is unitary: T = U diag(D, 0) U^* T with singular values 1.
    EXPECT_LE((f.d * f.d.adjoint() - CMatrix::Identity(f.rank, f.rank)).norm(), 1e-10);
    EXPECT_TRUE(oracle::near(ep_factor(t, t, kTol), t * t.adjoint()));
    EXPECT_TRUE(oracle::near(pinv_via_factor(t, t, kTol), t.adjoint()));
  }
}

TEST(CanonicalRect, PearlFormForEpMatrices) {
  Sampler s(2);
  for (int k = 0; k < 20; ++k) {
    const Index n = s.integer(1, 7);
    const CMatrix a = s.ep(n, s.integer(1, n), 100.0);
    const CMatrix id = CMatrix::Identity(n, n);
    const TepCanonical f = tep_canonical_rect(a, id, kTol);
    EXPECT_TRUE(oracle::near(f.u * f.core() * f.u.adjoint(), a));
    EXPECT_TRUE(oracle::near(ep_factor(a, id, kTol), a));
    EXPECT_TRUE(oracle::near(pinv_via_factor(a, id, kTol), oracle::pinv(a)));
  }
}

TEST(CanonicalRect, BlockInvariantsOnGeneratedPairs) {
  Sampler s(3);
  for (int k = 0; k < 100; ++k) {
    const Index m = s.integer(1, 8), n = s.integer(1, 8);
    auto [a, t] = sample_t_ep(s, m, n, s.integer(1, std::min(m, n)), 100.0);
    const TepCanonical f = tep_canonical_rect(a, t, kTol);
    const Index r = f.rank;
    expect_common_invariants(f, a, t);
    EXPECT_LE((f.t1 * f.t1.adjoint() - CMatrix::Identity(r, r)).norm(), 1e-10);
    EXPECT_LE((f.t4 - f.t4 * f.t4.adjoint() * f.t4).norm(), 1e-10);
    EXPECT_LE(f.t2.norm() + f.t3.norm(), 1e-10);
    EXPECT_TRUE(oracle::near(f.u * block_diag(f.t1, f.t4) * f.v.adjoint(), t));
    // T^*A = R diag(D,0) R^* with R = T^* U a partial isometry
    const CMatrix rr = t.adjoint() * f.u;
    EXPECT_TRUE(oracle::near(t.adjoint() * a, rr * f.core() * rr.adjoint()));
    EXPECT_TRUE(oracle::near(rr, rr * rr.adjoint() * rr));
  }
}

TEST(CanonicalRect, StressAtDimension32) {
  Sampler s(4);
  for (int k = 0; k < 5; ++k) {
    const Index m = s.integer(24, 32), n = s.integer(24, 32);
    auto [a, t] = sample_t_ep(s, m, n, s.integer(1, std::min(m, n)), 100.0);
    const TepCanonical f = tep_canonical_rect(a, t, kTol);
    EXPECT_LE((f.reconstruct(t) - a).norm(), 1e-10 * a.norm());
    EXPECT_LE((pinv_via_factor(a, t, kTol) - oracle::pinv(a)).norm(), 1e-8);
  }
}

TEST(CanonicalRect, Errors) {
  const CMatrix t = fixtures::skip_isometry();
  EXPECT_THROW(tep_canonical_rect(CMatrix::Zero(3, 3), t, kTol), DomainError);
  Sampler s(5);
  const CMatrix generic = s.gaussian(3, 3);
  try {
    tep_canonical_rect(generic, t, kTol);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_GT(e.residual(), 1e-3);
  }
}

TEST(CanonicalSquare, ShiftExample) {
  const CMatrix a = fixtures::t_ep_not_t_normal();
  const CMatrix t = fixtures::shift_isometry();
  const TepCanonical f = tep_canonical_square(a, t, kTol);
  EXPECT_EQ(f.kind, CanonicalKind::Square);
  const CMatrix c = a * t.adjoint();
  EXPECT_TRUE(oracle::is_ep(c));
  EXPECT_TRUE(oracle::near(c * t, a));
  EXPECT_TRUE(oracle::near(f.ep_factor, c));
  expect_common_invariants(f, a, t);
}

TEST(CanonicalSquare, IdentityGivesCEqualA) {
  Sampler s(6);
  const CMatrix a = s.ep(5, 3, 100.0);
  const TepCanonical f = tep_canonical_square(a, CMatrix::Identity(5, 5), kTol);
  EXPECT_TRUE(oracle::near(f.ep_factor, a));
}

TEST(CanonicalSquare, PerturbedFixtureRejected) {
  CMatrix a = fixtures::t_hermitian_not_ep();
  a(0, 0) += 1e-2;
  EXPECT_THROW(tep_canonical_square(a, fixtures::skip_isometry(), kTol), DomainError);
}

TEST(CanonicalSquare, BlockInvariantsOnGeneratedPairs) {
  Sampler s(7);
  for (int k = 0; k < 100; ++k) {
    const Index n = s.integer(1, 8);
    auto [a, t] = sample_t_ep(s, n, n, s.integer(1, n), 100.0);
    const TepCanonical f = tep_canonical_square(a, t, kTol);
    const Index r = f.rank;
    expect_common_invariants(f, a, t);
    EXPECT_TRUE(oracle::near(f.partial_isometry(), t));
    EXPECT_LE((f.t1 * f.t1.adjoint() + f.t2 * f.t2.adjoint() - CMatrix::Identity(r, r)).norm(), 1e-10);
    EXPECT_LE((f.t3 * f.t1.adjoint() + f.t4 * f.t2.adjoint()).norm(), 1e-10);
    const CMatrix g = f.u.adjoint() * t * t.adjoint() * f.u;
    EXPECT_LE((g.topLeftCorner(r, r) - CMatrix::Identity(r, r)).norm(), 1e-10);
    EXPECT_LE(g.topRightCorner(r, n - r).norm(), 1e-10);
    const CMatrix z = g.bottomRightCorner(n - r, n - r);
    EXPECT_LE((z - z.adjoint()).norm(), 1e-10);
  }
}

TEST(CanonicalSquare, Errors) {
  EXPECT_THROW(tep_canonical_square(CMatrix::Zero(2, 3), CMatrix::Zero(2, 3), kTol), DomainError);
  EXPECT_THROW(tep_canonical_square(CMatrix::Zero(3, 3), fixtures::shift_isometry(), kTol), DomainError);
}

TEST(EpFactor, SkipExample) {
  const CMatrix a = fixtures::t_hermitian_not_ep();
  const CMatrix t = fixtures::skip_isometry();
  const CMatrix e = ep_factor(a, t, kTol);
  const CMatrix expected = from_rows({{1, 0, 1}, {0, 0, 0}, {1, 0, 1}});
  EXPECT_TRUE(approx_eq(e, expected, kTol));
  EXPECT_TRUE(oracle::is_ep(e));
  EXPECT_TRUE(oracle::near(e * t, a));
  EXPECT_TRUE(oracle::near(t * t.adjoint() * e, e));
}

TEST(EpFactor, RejectsNonTEp) {
  Sampler s(8);
  EXPECT_THROW(ep_factor(s.gaussian(3, 3), fixtures::skip_isometry(), kTol), DomainError);
  EXPECT_THROW(pinv_via_factor(s.gaussian(3, 3), fixtures::skip_isometry(), kTol), DomainError);
  EXPECT_THROW(pinv_identities(s.gaussian(3, 3), fixtures::skip_isometry(), kTol), DomainError);
}

TEST(PinvViaFactor, ShiftExample) {
  const CMatrix a = fixtures::t_ep_not_t_normal();
  const CMatrix t = fixtures::shift_isometry();
  EXPECT_LE((pinv_via_factor(a, t, kTol) - oracle::pinv(a)).norm(), 1e-10);
}

TEST(PinvIdentities, FixturesAndEpUnderIdentity) {
  for (const auto& [a, t] : {std::pair{fixtures::t_hermitian_not_ep(), fixtures::skip_isometry()},
                             std::pair{fixtures::t_ep_not_t_normal(), fixtures::shift_isometry()}}) {
    const auto res = pinv_identities(a, t, kTol);
    EXPECT_EQ(res.size(), 9u);
    for (const auto& [id, r] : res) EXPECT_LE(r, 1e-10) << id;
  }
  Sampler s(9);
  const CMatrix a = s.ep(4, 2, 10.0);
  for (const auto& [id, r] : pinv_identities(a, CMatrix::Identity(4, 4), kTol)) EXPECT_LE(r, 1e-12) << id;
}

TEST(PinvIdentities, IndependentCheckOfOneIdentity) {
  // (T*A)^+ = A^+ T, both sides from the oracle pseudoinverse.
  Sampler s(10);
  for (int k = 0; k < 50; ++k) {
    const Index m = s.integer(1, 6), n = s.integer(1, 6);
    auto [a, t] = sample_t_ep(s, m, n, s.integer(0, std::min(m, n)), 100.0);
    EXPECT_TRUE(oracle::near(oracle::pinv(t.adjoint() * a), oracle::pinv(a) * t));
    for (const auto& [id, r] : pinv_identities(a, t, kTol)) {
      EXPECT_LE(r, 1e-10 * std::max(1.0, oracle::pinv(a).norm())) << id;
    }
  }
}
