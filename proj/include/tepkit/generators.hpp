#pragma once

// Seeded random constructors for the structured inputs the law suite needs.
// Every constructor is deterministic in (seed, stream) and the output is
// bit-identical across runs of the same build.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tepkit/matrix_core.hpp"

namespace tepkit {

// splitmix64 finalizer applied to seed and stream; used to derive
// independent sub-seeds (per trial, per attempt, per draw).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed);

  // Independent child stream; does not advance this sampler.
  Sampler fork(std::uint64_t stream) const;

  std::uint64_t seed() const noexcept { return seed_; }

  double normal();
  double uniform(double lo, double hi);
  // Uniform integer in [lo, hi].
  Index integer(Index lo, Index hi);
  bool coin(double p_true = 0.5);
  Complex unit_phase();

  // Entries with independent standard normal real and imaginary parts.
  CMatrix gaussian(Index rows, Index cols);
  // Approximately Haar: QR of a Gaussian matrix with the phases of R's
  // diagonal moved into Q.
  CMatrix unitary(Index n);
  // rows x cols with orthonormal columns (cols <= rows).
  CMatrix isometry(Index rows, Index cols);

  // W diag(I_r, 0) V^* with W, V random unitaries.
  CMatrix partial_isometry(Index rows, Index cols, Index rank);
  // W diag(e^{i theta_1}, ..., e^{i theta_r}, 0) W^*
  CMatrix normal_partial_isometry(Index n, Index rank);
  // W diag(+-1, ..., +-1, 0) W^*
  CMatrix hermitian_partial_isometry(Index n, Index rank);
  // W diag(I_r, 0) W^*
  CMatrix orthogonal_projector(Index n, Index rank);
  // W diag(+-1) W^*
  CMatrix involutory_hermitian(Index n);

  // Values log-uniform in [1/sqrt(cap), sqrt(cap)], so max/min <= cap.
  Eigen::VectorXd singular_values(Index count, double condition_cap);
  // diag(s) Q with Q unitary; cond <= condition_cap.
  CMatrix nonsingular(Index r, double condition_cap);
  // Q diag(lambda) Q^* with complex lambda, |lambda| log-uniform.
  CMatrix normal_nonsingular(Index r, double condition_cap);
  // U diag(s, 0) V^* with s log-uniform; exact rank `rank`.
  CMatrix low_rank(Index rows, Index cols, Index rank, double condition_cap);
  // U diag(D, 0) U^* (Pearl form).
  CMatrix ep(Index n, Index rank, double condition_cap);
  // Y D Y^* where Y spans a random r-dimensional subspace of R(basis);
  // basis must have orthonormal columns. Result is EP with range inside
  // R(basis).
  CMatrix ep_in_subspace(const CMatrix& basis, Index rank, double condition_cap);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

enum class GenKind {
  Unitary,
  PartialIsometry,
  NormalPartialIsometry,
  HermitianPartialIsometry,
  OrthogonalProjector,
  InvolutoryHermitian,
  Ep,
  TEp,
  THermitian,
  StarOrthogonalPair,
};

std::string_view to_string(GenKind k);
// Accepts the snake_case names ("t_ep", "star_orthogonal_pair", ...).
GenKind parse_gen_kind(std::string_view name);

struct GenSpec {
  GenKind kind = GenKind::Unitary;
  Index rows = 1;
  Index cols = 1;
  // Rank of the generated matrix: of A for ep / t_ep / star_orthogonal_pair,
  // of T for the partial isometry kinds and t_hermitian.
  Index rank = 0;
  // Rank of B for star_orthogonal_pair.
  Index rank_b = 0;
  std::uint64_t seed = 0;
  double condition_cap = 100.0;

  // Throws UsageError for infeasible specs.
  void validate() const;
};

// Named output matrices, e.g. {"A", "T"} for t_ep or {"A", "B", "T"} for
// star_orthogonal_pair. Single partial isometry kinds are named "T", ep "A".
struct Witness {
  std::vector<std::pair<std::string, CMatrix>> parts;

  const CMatrix& at(std::string_view name) const;
};

Witness gen(const GenSpec& spec);

// Building blocks shared with the law suite.

// A = U diag(D, 0) U^* T with T = U diag(T1, T4) V^*, T1 unitary r x r,
// T4 a random partial isometry of random rank.
std::pair<CMatrix, CMatrix> sample_t_ep(Sampler& s, Index rows, Index cols, Index rank,
                                        double condition_cap);

// A := (M + T M^* T) / 2 with M = T T^* M0 T^* T, which is a fixed point of
// X -> T X^* T. T has rank t_rank.
std::pair<CMatrix, CMatrix> sample_t_hermitian(Sampler& s, Index rows, Index cols, Index t_rank);

struct StarOrthogonalTriple {
  CMatrix a;
  CMatrix b;
  CMatrix t;
};

// A = U diag(D_A, 0, 0) U^* T and B = U diag(0, D_B, 0) U^* T with a shared
// T = U diag(T1, T4) V^*; A^* B = 0 and B A^* = 0 by construction.
StarOrthogonalTriple sample_star_orthogonal(Sampler& s, Index rows, Index cols, Index rank_a,
                                            Index rank_b, double condition_cap);

}  // namespace tepkit
