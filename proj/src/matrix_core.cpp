#include "tepkit/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tepkit/decompositions.hpp"

namespace tepkit {

namespace {

std::string shape(const CMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw UsageError(std::string(op) + ": shape mismatch " + shape(a) + " vs " + shape(b));
  }
}

void require_same_rows(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows()) {
    throw UsageError(std::string(op) + ": row counts differ " + shape(a) + " vs " + shape(b));
  }
}

void require_same_cols(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.cols() != b.cols()) {
    throw UsageError(std::string(op) + ": column counts differ " + shape(a) + " vs " + shape(b));
  }
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

void Tolerance::validate() const {
  if (!finite_nonneg(rank_rtol) || !finite_nonneg(eq_atol) || !finite_nonneg(eq_rtol)) {
    throw UsageError("tolerances must be finite and nonnegative");
  }
}

double Verdict::margin() const noexcept {
  if (threshold > 0.0) return residual / threshold;
  return residual > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

bool Verdict::borderline(double factor) const noexcept {
  const double m = margin();
  return m >= 1.0 / factor && m <= factor;
}

Verdict make_verdict(double residual, double threshold) {
  return Verdict{residual <= threshold, residual, threshold};
}

Verdict all_of(std::initializer_list<Verdict> parts) {
  Verdict worst;
  double worst_margin = -1.0;
  bool holds = true;
  for (const Verdict& p : parts) {
    holds = holds && p.holds;
    if (p.margin() > worst_margin) {
      worst = p;
      worst_margin = p.margin();
    }
  }
  worst.holds = holds;
  return worst;
}

CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const Index m = static_cast<Index>(rows.size());
  const Index n = m == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  CMatrix out(m, n);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n) throw UsageError("from_rows: ragged rows");
    Index j = 0;
    for (const Complex& z : row) out(i, j++) = z;
    ++i;
  }
  return out;
}

void check_finite(const CMatrix& a, const char* name) {
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
        throw InputError(std::string(name) + ": non-finite entry at (" + std::to_string(i) +
                         ", " + std::to_string(j) + ")");
      }
    }
  }
}

CMatrix conj_transpose(const CMatrix& a) { return a.adjoint(); }

double frobenius(const CMatrix& a) { return a.norm(); }

CMatrix block_diag(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

CMatrix hstack(const CMatrix& a, const CMatrix& b) {
  require_same_rows(a, b, "hstack");
  CMatrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

CMatrix vstack(const CMatrix& a, const CMatrix& b) {
  require_same_cols(a, b, "vstack");
  CMatrix out(a.rows() + b.rows(), a.cols());
  out << a, b;
  return out;
}

Verdict compare(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  require_same_shape(a, b, "compare");
  const double residual = (a - b).norm();
  const double scale = std::max(a.norm(), b.norm());
  return make_verdict(residual, tol.eq_atol + tol.eq_rtol * scale);
}

bool approx_eq(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  return compare(a, b, tol).holds;
}

Verdict vanishes(const CMatrix& x, double scale, const Tolerance& tol) {
  return make_verdict(x.norm(), tol.eq_atol + tol.eq_rtol * scale);
}

Verdict range_equality(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  require_same_rows(a, b, "range_equality");
  return compare(range_projector(a, tol), range_projector(b, tol), tol);
}

bool ranges_equal(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  return range_equality(a, b, tol).holds;
}

Verdict range_inclusion(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  require_same_rows(a, b, "range_inclusion");
  return compare(range_projector(b, tol) * a, a, tol);
}

Verdict null_space_inclusion(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  require_same_cols(a, b, "null_space_inclusion");
  return compare(b * corange_projector(a, tol), b, tol);
}

bool nullspace_contained(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  return null_space_inclusion(a, b, tol).holds;
}

Verdict null_space_equality(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  require_same_cols(a, b, "null_space_equality");
  return compare(corange_projector(a, tol), corange_projector(b, tol), tol);
}

}  // namespace tepkit
