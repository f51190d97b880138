#pragma once

// Predicates for the matrix classes of relative EP theory. Each returns a
// Verdict (boolean plus residual) so callers can separate confident answers
// from borderline ones.
//
// Throughout, T is a fixed partial isometry (T = T T^* T). The relative
// predicates check that precondition and raise DomainError when it fails.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tepkit/matrix_core.hpp"

namespace tepkit {

// residual |T - T T^* T|
Verdict is_partial_isometry(const CMatrix& t, const Tolerance& tol = {});
// max(|T^*T - I|, |TT^* - I|); square only
Verdict is_unitary(const CMatrix& t, const Tolerance& tol = {});
// T^2 = T = T^*; square only
Verdict is_orthogonal_projector(const CMatrix& t, const Tolerance& tol = {});
// T = T^* and T^2 = I; square only
Verdict is_involutory_hermitian(const CMatrix& t, const Tolerance& tol = {});
// T T^* = T^* T; square only
Verdict is_normal(const CMatrix& t, const Tolerance& tol = {});
// A = A^*; square only
Verdict is_hermitian(const CMatrix& a, const Tolerance& tol = {});

// A A^+ = A^+ A; square only.
Verdict is_ep(const CMatrix& a, const Tolerance& tol = {});

// A = T A^* T
Verdict is_t_hermitian(const CMatrix& a, const CMatrix& t, const Tolerance& tol = {});
// A = T T^* A = A T^* T and A A^* T = T A^* A
Verdict is_t_normal(const CMatrix& a, const CMatrix& t, const Tolerance& tol = {});

// Equivalent routes to "A is T-EP". Every route shares the condition
// A = A T^* T in one of its equivalent forms.
enum class Characterization {
  Def,           // R(A) = R(T A^* T) and A = A T^* T
  C2,            // R(A) = R(T A^* T) and N(T) in N(A)
  C3,            // N(A^*) = N(T^* A T^*) and R(A^*) in R(T^*)
  C4,            // R(A) = R(T A^*) and N(T) in N(A)
  C5,            // R(A) = R(T A^*) and A = A T^* T
  C6,            // N(A^*) = N(A T^*) and R(A^*) in R(T^*)
  Pinv,          // T A^+ A = A A^+ T and A = A T^* T
  EpProdATstar,  // A T^* is EP and A = A T^* T
  EpProdTAstar,  // T A^* is EP and A = A T^* T
  EpProdTApinv,  // T A^+ is EP and A = A T^* T
};

inline constexpr std::array<Characterization, 10> kAllCharacterizations = {
    Characterization::Def,          Characterization::C2,
    Characterization::C3,           Characterization::C4,
    Characterization::C5,           Characterization::C6,
    Characterization::Pinv,         Characterization::EpProdATstar,
    Characterization::EpProdTAstar, Characterization::EpProdTApinv,
};

// "DEF", "C2", ..., "PINV", "EPPROD-AT*", "EPPROD-TA*", "EPPROD-TApinv"
std::string_view to_string(Characterization c);
// Inverse of to_string; unknown ids throw UsageError.
Characterization parse_characterization(std::string_view id);

Verdict is_t_ep(const CMatrix& a, const CMatrix& t, const Tolerance& tol = {},
                Characterization via = Characterization::Def);

// Throws DomainError (carrying the DEF residual) unless A is T-EP.
void require_t_ep(const CMatrix& a, const CMatrix& t, const Tolerance& tol, const char* op);

// One entry of a classification report: either a verdict or the reason the
// predicate could not be evaluated (non-square input, T not a partial
// isometry, ...).
struct PredicateResult {
  std::optional<Verdict> verdict;
  std::string error;

  bool holds() const noexcept { return verdict && verdict->holds; }
};

struct ClassificationReport {
  // Properties of T.
  PredicateResult partial_isometry;
  PredicateResult unitary;
  PredicateResult orthogonal_projector;
  PredicateResult involutory_hermitian;
  PredicateResult normal;
  // Properties of A.
  PredicateResult ep;
  // Properties of A relative to T. t_ep is the DEF route.
  PredicateResult t_hermitian;
  PredicateResult t_normal;
  PredicateResult t_ep;
  std::map<Characterization, PredicateResult> votes;

  // Set when the votes disagree or the chain
  // T-hermitian => T-normal => T-EP is broken.
  bool inconsistent = false;
  std::vector<std::string> inconsistencies;

  // (name, result) in a fixed order, for serialization.
  std::vector<std::pair<std::string, const PredicateResult*>> predicates() const;
};

ClassificationReport classify(const CMatrix& a, const CMatrix& t, const Tolerance& tol = {});

}  // namespace tepkit
