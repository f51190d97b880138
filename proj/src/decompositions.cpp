#include "tepkit/decompositions.hpp"

#include <algorithm>
#include <cmath>

namespace tepkit {

namespace {

constexpr double kPhaseFloor = 1e-10;

// Multiplier that turns the first significant entry of `col` real positive.
Complex phase_fix(const Eigen::Ref<const Eigen::VectorXcd>& col) {
  for (Index i = 0; i < col.size(); ++i) {
    const double mag = std::abs(col(i));
    if (mag > kPhaseFloor) return std::conj(col(i)) / mag;
  }
  return Complex(1.0, 0.0);
}

// Pins the first significant entry to the real axis after rotation; the
// product above leaves rounding noise in its imaginary part.
void clean_pivot(Eigen::Ref<Eigen::VectorXcd> col) {
  for (Index i = 0; i < col.size(); ++i) {
    if (std::abs(col(i)) > kPhaseFloor) {
      col(i) = Complex(col(i).real(), 0.0);
      return;
    }
  }
}

}  // namespace

CMatrix SvdResult::reconstruct() const {
  CMatrix s = CMatrix::Zero(u.cols(), v.cols());
  for (Index i = 0; i < sigma.size(); ++i) s(i, i) = sigma(i);
  return u * s * v.adjoint();
}

SvdResult svd(const CMatrix& a, const Tolerance& tol) {
  if (a.rows() == 0 || a.cols() == 0) throw UsageError("svd: empty matrix");
  check_finite(a, "svd input");

  Eigen::JacobiSVD<CMatrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("svd: factorization did not converge", -1);
  }

  SvdResult out;
  out.u = solver.matrixU();
  out.v = solver.matrixV();
  out.sigma = solver.singularValues();

  const Index p = out.sigma.size();
  for (Index j = 0; j < out.u.cols(); ++j) {
    const Complex w = phase_fix(out.u.col(j));
    out.u.col(j) *= w;
    clean_pivot(out.u.col(j));
    if (j < p) out.v.col(j) *= w;
  }
  for (Index j = p; j < out.v.cols(); ++j) {
    out.v.col(j) *= phase_fix(out.v.col(j));
    clean_pivot(out.v.col(j));
  }

  const double cutoff = tol.rank_rtol * (p > 0 ? out.sigma(0) : 0.0);
  out.rank = 0;
  if (p > 0 && out.sigma(0) > 0.0) {
    while (out.rank < p && out.sigma(out.rank) > cutoff) ++out.rank;
  }
  return out;
}

CMatrix pinv(const CMatrix& a, const Tolerance& tol) {
  const SvdResult s = svd(a, tol);
  const Index r = s.rank;
  CMatrix vr = s.v.leftCols(r);
  for (Index j = 0; j < r; ++j) vr.col(j) /= s.sigma(j);
  return vr * s.u.leftCols(r).adjoint();
}

Index rank_of(const CMatrix& a, const Tolerance& tol) { return svd(a, tol).rank; }

CMatrix range_basis(const CMatrix& a, const Tolerance& tol) {
  const SvdResult s = svd(a, tol);
  return s.u.leftCols(s.rank);
}

CMatrix range_projector(const CMatrix& a, const Tolerance& tol) {
  const CMatrix q = range_basis(a, tol);
  return q * q.adjoint();
}

CMatrix corange_projector(const CMatrix& a, const Tolerance& tol) {
  const SvdResult s = svd(a, tol);
  const CMatrix q = s.v.leftCols(s.rank);
  return q * q.adjoint();
}

double PenroseResiduals::max() const noexcept {
  return std::max({axa, xax, ax_herm, xa_herm});
}

PenroseResiduals penrose_residuals(const CMatrix& a, const CMatrix& x) {
  const CMatrix ax = a * x;
  const CMatrix xa = x * a;
  PenroseResiduals r;
  r.axa = (ax * a - a).norm();
  r.xax = (x * ax - x).norm();
  r.ax_herm = (ax.adjoint() - ax).norm();
  r.xa_herm = (xa.adjoint() - xa).norm();
  return r;
}

CMatrix HSDecomposition::reconstruct() const {
  const Index n = u.rows();
  CMatrix core = CMatrix::Zero(n, n);
  core.topLeftCorner(r, r) = sigma_block * k;
  core.topRightCorner(r, n - r) = sigma_block * l;
  return u * core * u.adjoint();
}

CMatrix HSDecomposition::pinv() const {
  const Index n = u.rows();
  const CMatrix sigma_inv = sigma_block.diagonal().cwiseInverse().asDiagonal();
  CMatrix core = CMatrix::Zero(n, n);
  core.topLeftCorner(r, r) = k.adjoint() * sigma_inv;
  core.bottomLeftCorner(n - r, r) = l.adjoint() * sigma_inv;
  return u * core * u.adjoint();
}

CMatrix HSDecomposition::range_projector() const {
  const CMatrix ur = u.leftCols(r);
  return ur * ur.adjoint();
}

HSDecomposition hs_decompose(const CMatrix& a, const Tolerance& tol) {
  if (a.rows() != a.cols()) throw DomainError("hs_decompose: matrix is not square");
  const SvdResult s = svd(a, tol);
  if (s.rank == 0) throw DomainError("rank zero has no HS form with r>0");

  const Index n = a.rows();
  const Index r = s.rank;
  HSDecomposition hs;
  hs.r = r;
  hs.u = s.u;
  hs.sigma_block = CMatrix::Zero(r, r);
  for (Index i = 0; i < r; ++i) hs.sigma_block(i, i) = s.sigma(i);

  // Top r rows of U^* A U equal [S K, S L]; the remaining rows vanish.
  const CMatrix top = (s.u.adjoint() * a * s.u).topRows(r);
  const Eigen::VectorXcd sigma_inv = hs.sigma_block.diagonal().cwiseInverse();
  hs.k = sigma_inv.asDiagonal() * top.leftCols(r);
  hs.l = sigma_inv.asDiagonal() * top.rightCols(n - r);
  return hs;
}

}  // namespace tepkit
