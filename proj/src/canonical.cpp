#include "tepkit/canonical.hpp"

#include "tepkit/decompositions.hpp"
#include "tepkit/matrix_classes.hpp"

namespace tepkit {

namespace {

void require_nonzero_rank(Index r, const char* op) {
  if (r == 0) throw DomainError(std::string(op) + ": A is zero (rank 0)");
}

// Splits M into [M1 M2; M3 M4] with M1 of size r x c.
void split_blocks(const CMatrix& m, Index r, Index c, TepCanonical& out) {
  out.t1 = m.topLeftCorner(r, c);
  out.t2 = m.topRightCorner(r, m.cols() - c);
  out.t3 = m.bottomLeftCorner(m.rows() - r, c);
  out.t4 = m.bottomRightCorner(m.rows() - r, m.cols() - c);
}

}  // namespace

std::string_view to_string(CanonicalKind k) {
  return k == CanonicalKind::Rectangular ? "rectangular" : "square";
}

CMatrix TepCanonical::core() const {
  const Index m = u.rows();
  CMatrix c = CMatrix::Zero(m, m);
  c.topLeftCorner(rank, rank) = d;
  return c;
}

CMatrix TepCanonical::reconstruct(const CMatrix& t) const {
  return u * core() * u.adjoint() * t;
}

CMatrix TepCanonical::partial_isometry() const {
  CMatrix blocks(t1.rows() + t3.rows(), t1.cols() + t2.cols());
  blocks << t1, t2, t3, t4;
  return u * blocks * v.adjoint();
}

TepCanonical tep_canonical_rect(const CMatrix& a, const CMatrix& t, const Tolerance& tol) {
  require_t_ep(a, t, tol, "tep_canonical_rect");
  const SvdResult s = svd(a, tol);
  require_nonzero_rank(s.rank, "tep_canonical_rect");

  TepCanonical out;
  out.kind = CanonicalKind::Rectangular;
  out.rank = s.rank;
  out.u = s.u;
  out.v = s.v;
  split_blocks(s.u.adjoint() * t * s.v, s.rank, s.rank, out);

  // D = S T1^*
  out.d = s.sigma.head(s.rank).cast<Complex>().asDiagonal() * out.t1.adjoint();
  out.ep_factor = out.u * out.core() * out.u.adjoint();
  return out;
}

TepCanonical tep_canonical_square(const CMatrix& a, const CMatrix& t, const Tolerance& tol) {
  if (a.rows() != a.cols()) throw DomainError("tep_canonical_square: A is not square");
  require_t_ep(a, t, tol, "tep_canonical_square");
  require_nonzero_rank(rank_of(a, tol), "tep_canonical_square");
  const HSDecomposition hs = hs_decompose(a, tol);

  TepCanonical out;
  out.kind = CanonicalKind::Square;
  out.rank = hs.r;
  out.u = hs.u;
  out.v = hs.u;
  split_blocks(hs.u.adjoint() * t * hs.u, hs.r, hs.r, out);

  // D = S K T1^* + S L T2^*
  out.d = hs.sigma_block * hs.k * out.t1.adjoint() + hs.sigma_block * hs.l * out.t2.adjoint();
  out.ep_factor = out.u * out.core() * out.u.adjoint();
  return out;
}

CMatrix ep_factor(const CMatrix& a, const CMatrix& t, const Tolerance& tol) {
  require_t_ep(a, t, tol, "ep_factor");
  return a * t.adjoint();
}

CMatrix pinv_via_factor(const CMatrix& a, const CMatrix& t, const Tolerance& tol) {
  const CMatrix e = ep_factor(a, t, tol);
  return t.adjoint() * pinv(e, tol);
}

CMatrix pinv_via_canonical(const TepCanonical& form, const CMatrix& t) {
  const Index m = form.u.rows();
  CMatrix core_inv = CMatrix::Zero(m, m);
  core_inv.topLeftCorner(form.rank, form.rank) = form.d.inverse();
  return t.adjoint() * form.u * core_inv * form.u.adjoint();
}

std::map<std::string, double> pinv_identities(const CMatrix& a, const CMatrix& t,
                                              const Tolerance& tol) {
  require_t_ep(a, t, tol, "pinv_identities");
  const CMatrix as = a.adjoint();
  const CMatrix ts = t.adjoint();
  const CMatrix ap = pinv(a, tol);
  const CMatrix asp = pinv(as, tol);
  auto residual = [&](const CMatrix& lhs_arg, const CMatrix& rhs) {
    return (pinv(lhs_arg, tol) - rhs).norm();
  };

  return {
      {"pinv(T*A) = pinv(A)T", residual(ts * a, ap * t)},
      {"pinv(AT*) = Tpinv(A)", residual(a * ts, t * ap)},
      {"pinv(T*AT*) = Tpinv(A)T", residual(ts * a * ts, t * ap * t)},
      {"pinv(TA*) = pinv(A*)T*", residual(t * as, asp * ts)},
      {"pinv(A*T) = T*pinv(A*)", residual(as * t, ts * asp)},
      {"pinv(TA*T) = T*pinv(A*)T*", residual(t * as * t, ts * asp * ts)},
      {"pinv(Tpinv(A)) = AT*", residual(t * ap, a * ts)},
      {"pinv(pinv(A)T) = T*A", residual(ap * t, ts * a)},
      {"pinv(Tpinv(A)T) = T*AT*", residual(t * ap * t, ts * a * ts)},
  };
}

}  // namespace tepkit
