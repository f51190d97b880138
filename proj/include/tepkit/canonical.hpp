#pragma once

// Canonical forms of T-EP matrices and the pseudoinverse shortcuts they give.
//
// Rectangular form (A, T in C^{m x n}, rank A = r):
//   A = U diag(D, 0) U^* T,   T = U diag(T1, T4) V^*,
//   T1 T1^* = I_r,  T4 a partial isometry,  D = S T1^* nonsingular.
// Square form (A, T in C^{n x n}), built on the Hartwig-Spindelbock form of A:
//   A = U diag(D, 0) U^* T,   T = U [T1 T2; T3 T4] U^*,
//   T1 T1^* + T2 T2^* = I_r,  T3 T1^* + T4 T2^* = 0,  D = S K T1^* + S L T2^*.
// In both cases E = U diag(D, 0) U^* = A T^* is EP, A = E T and
// T T^* E = E = E T T^*.

#include <map>
#include <string>

#include "tepkit/matrix_core.hpp"

namespace tepkit {

enum class CanonicalKind { Rectangular, Square };

std::string_view to_string(CanonicalKind k);

struct TepCanonical {
  CanonicalKind kind = CanonicalKind::Rectangular;
  Index rank = 0;
  CMatrix u;  // m x m unitary
  CMatrix d;  // r x r nonsingular
  CMatrix v;  // n x n unitary; equals u in the square form
  // Blocks of U^* T V. In the rectangular form t2 and t3 vanish up to rounding.
  CMatrix t1;
  CMatrix t2;
  CMatrix t3;
  CMatrix t4;
  CMatrix ep_factor;  // E (rectangular) or C (square), m x m

  // diag(D, 0), m x m
  CMatrix core() const;
  // U diag(D, 0) U^* T
  CMatrix reconstruct(const CMatrix& t) const;
  // U [T1 T2; T3 T4] V^*
  CMatrix partial_isometry() const;
};

// Follows the constructive proof: U, S, V from the SVD of A, T partitioned in
// that basis, D = S T1^*. Throws DomainError if A is zero or not T-EP.
TepCanonical tep_canonical_rect(const CMatrix& a, const CMatrix& t, const Tolerance& tol = {});

// Square form via hs_decompose(A). Throws DomainError if A, T are not square,
// A is zero, or A is not T-EP.
TepCanonical tep_canonical_square(const CMatrix& a, const CMatrix& t, const Tolerance& tol = {});

// E = A T^*. Throws DomainError if A is not T-EP.
CMatrix ep_factor(const CMatrix& a, const CMatrix& t, const Tolerance& tol = {});

// A^+ = T^* E^+. Throws DomainError if A is not T-EP.
CMatrix pinv_via_factor(const CMatrix& a, const CMatrix& t, const Tolerance& tol = {});

// A^+ = T^* U diag(D^-1, 0) U^*, from an already computed canonical form.
CMatrix pinv_via_canonical(const TepCanonical& form, const CMatrix& t);

// Residuals |lhs - rhs|_F of the nine pseudoinverse identities that hold for
// every T-EP matrix, keyed by the identity written out, e.g.
// "pinv(T*A) = pinv(A)T". Both sides are computed independently via the SVD
// pseudoinverse. Throws DomainError if A is not T-EP.
std::map<std::string, double> pinv_identities(const CMatrix& a, const CMatrix& t,
                                              const Tolerance& tol = {});

}  // namespace tepkit
