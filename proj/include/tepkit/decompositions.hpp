#pragma once

#include <Eigen/Dense>

#include "tepkit/matrix_core.hpp"

namespace tepkit {

// A = u * diag(sigma) * v^*, with u (m x m) and v (n x n) unitary and sigma
// descending of length min(m, n). Each column of u is scaled so that its first
// entry of magnitude above 1e-10 is real and positive; the matching column of
// v absorbs the same phase.
struct SvdResult {
  CMatrix u;
  Eigen::VectorXd sigma;
  CMatrix v;
  Index rank = 0;

  // u * [diag(sigma) 0; 0 0] * v^*
  CMatrix reconstruct() const;
};

SvdResult svd(const CMatrix& a, const Tolerance& tol = {});

// Moore-Penrose inverse V [S^-1 0; 0 0] U^*, using the same rank cutoff as
// svd().rank.
CMatrix pinv(const CMatrix& a, const Tolerance& tol = {});

Index rank_of(const CMatrix& a, const Tolerance& tol = {});

// Orthogonal projector onto R(a), i.e. a a^+ (= U_r U_r^*).
CMatrix range_projector(const CMatrix& a, const Tolerance& tol = {});

// Orthogonal projector onto R(a^*), i.e. a^+ a (= V_r V_r^*).
CMatrix corange_projector(const CMatrix& a, const Tolerance& tol = {});

// Orthonormal basis of R(a), m x rank(a).
CMatrix range_basis(const CMatrix& a, const Tolerance& tol = {});

// Residuals of the four Penrose conditions for a candidate inverse x of a.
struct PenroseResiduals {
  double axa = 0.0;       // |a x a - a|
  double xax = 0.0;       // |x a x - x|
  double ax_herm = 0.0;   // |(a x)^* - a x|
  double xa_herm = 0.0;   // |(x a)^* - x a|

  double max() const noexcept;
};

PenroseResiduals penrose_residuals(const CMatrix& a, const CMatrix& x);

// Hartwig-Spindelbock form of a square matrix of rank r > 0:
//   A = U [S K  S L; 0 0] U^*,   K K^* + L L^* = I_r.
// U is taken from the SVD of A; K and L are the blocks of S^-1 U^* A U.
struct HSDecomposition {
  CMatrix u;
  CMatrix sigma_block;  // r x r, diagonal, positive, descending
  CMatrix k;            // r x r
  CMatrix l;            // r x (n - r)
  Index r = 0;

  CMatrix reconstruct() const;
  // U [K^* S^-1  0; L^* S^-1  0] U^*
  CMatrix pinv() const;
  // U diag(I_r, 0) U^*
  CMatrix range_projector() const;
};

HSDecomposition hs_decompose(const CMatrix& a, const Tolerance& tol = {});

}  // namespace tepkit
