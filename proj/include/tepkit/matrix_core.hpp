#pragma once

// Dense complex matrices, tolerance-aware comparison, and subspace tests.
//
// Every identity in the T-EP theory is an exact matrix equality; in floating
// point each one becomes a Frobenius residual compared against
//     eq_atol + eq_rtol * max(|a|_F, |b|_F).
// Subspace relations are reduced to equalities between orthogonal projectors
// (R(A) = R(B)  <=>  AA^+ = BB^+), so the same policy decides them as well.

#include <complex>
#include <initializer_list>
#include <limits>

#include <Eigen/Dense>

#include "tepkit/errors.hpp"

namespace tepkit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

struct Tolerance {
  // Singular values at or below rank_rtol * sigma_max count as zero.
  double rank_rtol = 1e-10;
  double eq_atol = 1e-12;
  double eq_rtol = 1e-10;

  // Throws UsageError unless all three values are finite and nonnegative.
  void validate() const;
};

// Outcome of one tolerance-aware check. `holds` is exactly
// `residual <= threshold`; the margin tells how decisive the verdict is.
struct Verdict {
  bool holds = true;
  double residual = 0.0;
  double threshold = 0.0;

  // residual / threshold; values far below 1 are confident passes, far above
  // 1 confident failures.
  double margin() const noexcept;

  // True when the margin lies within [1/factor, factor].
  bool borderline(double factor = 10.0) const noexcept;
};

// Verdict for residual <= threshold.
Verdict make_verdict(double residual, double threshold);

// Conjunction: holds iff every part holds; reports the part with the largest
// margin, which is the failing part whenever the conjunction fails.
Verdict all_of(std::initializer_list<Verdict> parts);

// Builds a matrix from rows of complex entries. Rows must have equal length.
CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

// Throws InputError if any entry is NaN or infinite.
void check_finite(const CMatrix& a, const char* name = "matrix");

// a^*, the conjugate transpose. Exact: conj_transpose(conj_transpose(a)) == a.
CMatrix conj_transpose(const CMatrix& a);

double frobenius(const CMatrix& a);

// diag(a, b) with zero off-diagonal blocks; either block may be empty.
CMatrix block_diag(const CMatrix& a, const CMatrix& b);

// [a b] and [a; b].
CMatrix hstack(const CMatrix& a, const CMatrix& b);
CMatrix vstack(const CMatrix& a, const CMatrix& b);

// |a - b|_F against eq_atol + eq_rtol * max(|a|_F, |b|_F).
// Shape mismatch throws UsageError.
Verdict compare(const CMatrix& a, const CMatrix& b, const Tolerance& tol);
bool approx_eq(const CMatrix& a, const CMatrix& b, const Tolerance& tol);

// |x|_F against eq_atol + eq_rtol * scale. Used for identities of the form
// X = 0, where the natural scale comes from the factors of X.
Verdict vanishes(const CMatrix& x, double scale, const Tolerance& tol);

// R(a) = R(b), decided as aa^+ = bb^+. Requires equal row counts.
Verdict range_equality(const CMatrix& a, const CMatrix& b, const Tolerance& tol);
bool ranges_equal(const CMatrix& a, const CMatrix& b, const Tolerance& tol);

// R(a) subset of R(b), decided as bb^+ a = a. Requires equal row counts.
Verdict range_inclusion(const CMatrix& a, const CMatrix& b, const Tolerance& tol);

// N(a) subset of N(b), decided as b (I - a^+ a) = 0, i.e. b = b a^+ a.
// Requires equal column counts.
Verdict null_space_inclusion(const CMatrix& a, const CMatrix& b, const Tolerance& tol);
bool nullspace_contained(const CMatrix& a, const CMatrix& b, const Tolerance& tol);

// N(a) = N(b), decided as a^+ a = b^+ b. Requires equal column counts.
Verdict null_space_equality(const CMatrix& a, const CMatrix& b, const Tolerance& tol);

}  // namespace tepkit
