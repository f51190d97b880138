#include "tepkit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tepkit {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Sampler::Sampler(std::uint64_t seed) : seed_(seed), engine_(derive_seed(seed, 0)) {}

Sampler Sampler::fork(std::uint64_t stream) const {
  return Sampler(derive_seed(seed_, stream + 1));
}

double Sampler::normal() { return normal_(engine_); }

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

Index Sampler::integer(Index lo, Index hi) {
  if (hi < lo) throw UsageError("Sampler::integer: empty range");
  return std::uniform_int_distribution<Index>(lo, hi)(engine_);
}

bool Sampler::coin(double p_true) { return uniform(0.0, 1.0) < p_true; }

Complex Sampler::unit_phase() { return std::polar(1.0, uniform(-M_PI, M_PI)); }

CMatrix Sampler::gaussian(Index rows, Index cols) {
  CMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal();
      const double im = normal();
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

CMatrix Sampler::unitary(Index n) {
  if (n == 0) return CMatrix(0, 0);
  const Eigen::HouseholderQR<CMatrix> qr(gaussian(n, n));
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

CMatrix Sampler::isometry(Index rows, Index cols) {
  if (cols > rows) throw UsageError("Sampler::isometry: more columns than rows");
  return unitary(rows).leftCols(cols);
}

CMatrix Sampler::partial_isometry(Index rows, Index cols, Index rank) {
  const CMatrix w = isometry(rows, rank);
  const CMatrix v = isometry(cols, rank);
  return w * v.adjoint();
}

CMatrix Sampler::normal_partial_isometry(Index n, Index rank) {
  const CMatrix w = isometry(n, rank);
  Eigen::VectorXcd phases(rank);
  for (Index i = 0; i < rank; ++i) phases(i) = unit_phase();
  return w * phases.asDiagonal() * w.adjoint();
}

CMatrix Sampler::hermitian_partial_isometry(Index n, Index rank) {
  const CMatrix w = isometry(n, rank);
  Eigen::VectorXcd signs(rank);
  for (Index i = 0; i < rank; ++i) signs(i) = coin() ? 1.0 : -1.0;
  return w * signs.asDiagonal() * w.adjoint();
}

CMatrix Sampler::orthogonal_projector(Index n, Index rank) {
  const CMatrix w = isometry(n, rank);
  return w * w.adjoint();
}

CMatrix Sampler::involutory_hermitian(Index n) { return hermitian_partial_isometry(n, n); }

Eigen::VectorXd Sampler::singular_values(Index count, double condition_cap) {
  const double half = 0.5 * std::log(condition_cap);
  Eigen::VectorXd s(count);
  for (Index i = 0; i < count; ++i) s(i) = std::exp(uniform(-half, half));
  return s;
}

CMatrix Sampler::nonsingular(Index r, double condition_cap) {
  const Eigen::VectorXd s = singular_values(r, condition_cap);
  return s.cast<Complex>().asDiagonal() * unitary(r);
}

CMatrix Sampler::normal_nonsingular(Index r, double condition_cap) {
  const Eigen::VectorXd s = singular_values(r, condition_cap);
  Eigen::VectorXcd lambda(r);
  for (Index i = 0; i < r; ++i) lambda(i) = s(i) * unit_phase();
  const CMatrix q = unitary(r);
  return q * lambda.asDiagonal() * q.adjoint();
}

CMatrix Sampler::low_rank(Index rows, Index cols, Index rank, double condition_cap) {
  const CMatrix u = isometry(rows, rank);
  const CMatrix v = isometry(cols, rank);
  const Eigen::VectorXd s = singular_values(rank, condition_cap);
  return u * s.cast<Complex>().asDiagonal() * v.adjoint();
}

CMatrix Sampler::ep(Index n, Index rank, double condition_cap) {
  const CMatrix u = isometry(n, rank);
  return u * nonsingular(rank, condition_cap) * u.adjoint();
}

CMatrix Sampler::ep_in_subspace(const CMatrix& basis, Index rank, double condition_cap) {
  const CMatrix y = basis * isometry(basis.cols(), rank);
  return y * nonsingular(rank, condition_cap) * y.adjoint();
}

std::pair<CMatrix, CMatrix> sample_t_ep(Sampler& s, Index rows, Index cols, Index rank,
                                        double condition_cap) {
  const CMatrix u = s.unitary(rows);
  const CMatrix v = s.unitary(cols);
  const Index rest_rows = rows - rank;
  const Index rest_cols = cols - rank;
  const Index t4_rank = s.integer(0, std::min(rest_rows, rest_cols));
  const CMatrix t1 = s.unitary(rank);
  const CMatrix t4 = s.partial_isometry(rest_rows, rest_cols, t4_rank);
  const CMatrix t = u * block_diag(t1, t4) * v.adjoint();
  const CMatrix core =
      block_diag(s.nonsingular(rank, condition_cap), CMatrix::Zero(rest_rows, rest_rows));
  const CMatrix a = u * core * u.adjoint() * t;
  return {a, t};
}

std::pair<CMatrix, CMatrix> sample_t_hermitian(Sampler& s, Index rows, Index cols, Index t_rank) {
  const CMatrix t = s.partial_isometry(rows, cols, t_rank);
  const CMatrix ts = t.adjoint();
  const CMatrix m = t * ts * s.gaussian(rows, cols) * ts * t;
  const CMatrix a = 0.5 * (m + t * m.adjoint() * t);
  return {a, t};
}

StarOrthogonalTriple sample_star_orthogonal(Sampler& s, Index rows, Index cols, Index rank_a,
                                            Index rank_b, double condition_cap) {
  const Index q = rank_a + rank_b;
  const CMatrix u = s.unitary(rows);
  const CMatrix v = s.unitary(cols);
  const Index t4_rank = s.integer(0, std::min(rows - q, cols - q));
  const CMatrix t = u * block_diag(s.unitary(q), s.partial_isometry(rows - q, cols - q, t4_rank)) *
                    v.adjoint();

  CMatrix core_a = CMatrix::Zero(rows, rows);
  CMatrix core_b = CMatrix::Zero(rows, rows);
  core_a.block(0, 0, rank_a, rank_a) = s.nonsingular(rank_a, condition_cap);
  core_b.block(rank_a, rank_a, rank_b, rank_b) = s.nonsingular(rank_b, condition_cap);

  StarOrthogonalTriple out;
  out.a = u * core_a * u.adjoint() * t;
  out.b = u * core_b * u.adjoint() * t;
  out.t = t;
  return out;
}

std::string_view to_string(GenKind k) {
  switch (k) {
    case GenKind::Unitary: return "unitary";
    case GenKind::PartialIsometry: return "partial_isometry";
    case GenKind::NormalPartialIsometry: return "normal_partial_isometry";
    case GenKind::HermitianPartialIsometry: return "hermitian_partial_isometry";
    case GenKind::OrthogonalProjector: return "orthogonal_projector";
    case GenKind::InvolutoryHermitian: return "involutory_hermitian";
    case GenKind::Ep: return "ep";
    case GenKind::TEp: return "t_ep";
    case GenKind::THermitian: return "t_hermitian";
    case GenKind::StarOrthogonalPair: return "star_orthogonal_pair";
  }
  return "?";
}

GenKind parse_gen_kind(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(GenKind::StarOrthogonalPair); ++i) {
    const auto k = static_cast<GenKind>(i);
    if (to_string(k) == name) return k;
  }
  throw UsageError("unknown generator kind '" + std::string(name) + "'");
}

void GenSpec::validate() const {
  auto fail = [&](const std::string& why) {
    throw UsageError("infeasible spec for kind " + std::string(to_string(kind)) + ": " + why);
  };
  if (rows < 1 || cols < 1) fail("rows and cols must be positive");
  if (rank < 0 || rank > std::min(rows, cols)) fail("rank must lie in [0, min(rows, cols)]");
  if (!std::isfinite(condition_cap) || condition_cap < 1.0) fail("condition_cap must be >= 1");

  switch (kind) {
    case GenKind::Unitary:
    case GenKind::InvolutoryHermitian:
      if (rows != cols || rank != rows) fail("requires rows = cols = rank");
      break;
    case GenKind::NormalPartialIsometry:
    case GenKind::HermitianPartialIsometry:
    case GenKind::OrthogonalProjector:
    case GenKind::Ep:
      if (rows != cols) fail("requires a square shape");
      break;
    case GenKind::StarOrthogonalPair:
      if (rank_b < 0 || rank + rank_b > std::min(rows, cols)) {
        fail("rank + rank_b must not exceed min(rows, cols)");
      }
      break;
    case GenKind::PartialIsometry:
    case GenKind::TEp:
    case GenKind::THermitian:
      break;
  }
}

const CMatrix& Witness::at(std::string_view name) const {
  for (const auto& [n, m] : parts) {
    if (n == name) return m;
  }
  throw UsageError("witness has no part named '" + std::string(name) + "'");
}

Witness gen(const GenSpec& spec) {
  spec.validate();
  Sampler s(spec.seed);
  const Index n = spec.rows;
  Witness w;
  switch (spec.kind) {
    case GenKind::Unitary:
      w.parts = {{"T", s.unitary(n)}};
      break;
    case GenKind::PartialIsometry:
      w.parts = {{"T", s.partial_isometry(spec.rows, spec.cols, spec.rank)}};
      break;
    case GenKind::NormalPartialIsometry:
      w.parts = {{"T", s.normal_partial_isometry(n, spec.rank)}};
      break;
    case GenKind::HermitianPartialIsometry:
      w.parts = {{"T", s.hermitian_partial_isometry(n, spec.rank)}};
      break;
    case GenKind::OrthogonalProjector:
      w.parts = {{"T", s.orthogonal_projector(n, spec.rank)}};
      break;
    case GenKind::InvolutoryHermitian:
      w.parts = {{"T", s.involutory_hermitian(n)}};
      break;
    case GenKind::Ep:
      w.parts = {{"A", s.ep(n, spec.rank, spec.condition_cap)}};
      break;
    case GenKind::TEp: {
      auto [a, t] = sample_t_ep(s, spec.rows, spec.cols, spec.rank, spec.condition_cap);
      w.parts = {{"A", std::move(a)}, {"T", std::move(t)}};
      break;
    }
    case GenKind::THermitian: {
      auto [a, t] = sample_t_hermitian(s, spec.rows, spec.cols, spec.rank);
      w.parts = {{"A", std::move(a)}, {"T", std::move(t)}};
      break;
    }
    case GenKind::StarOrthogonalPair: {
      StarOrthogonalTriple p = sample_star_orthogonal(s, spec.rows, spec.cols, spec.rank,
                                                      spec.rank_b, spec.condition_cap);
      w.parts = {{"A", std::move(p.a)}, {"B", std::move(p.b)}, {"T", std::move(p.t)}};
      break;
    }
  }
  return w;
}

}  // namespace tepkit
