#include "tepkit/matrix_classes.hpp"

#include <sstream>

#include "tepkit/decompositions.hpp"

namespace tepkit {

namespace {

void require_square(const CMatrix& a, const char* op) {
  if (a.rows() != a.cols()) {
    std::ostringstream msg;
    msg << op << ": matrix is " << a.rows() << "x" << a.cols() << ", not square";
    throw DomainError(msg.str());
  }
}

CMatrix identity(Index n) { return CMatrix::Identity(n, n); }

void require_relative(const CMatrix& a, const CMatrix& t, const Tolerance& tol, const char* op) {
  if (a.rows() != t.rows() || a.cols() != t.cols()) {
    std::ostringstream msg;
    msg << op << ": A is " << a.rows() << "x" << a.cols() << " but T is " << t.rows() << "x"
        << t.cols();
    throw UsageError(msg.str());
  }
  const Verdict pi = is_partial_isometry(t, tol);
  if (!pi.holds) {
    std::ostringstream msg;
    msg << op << ": T is not a partial isometry (residual " << pi.residual << ")";
    throw DomainError(msg.str(), pi.residual);
  }
}

// A = A T^* T, shared by every route.
Verdict right_compatible(const CMatrix& a, const CMatrix& t, const Tolerance& tol) {
  return compare(a, a * t.adjoint() * t, tol);
}

Verdict evaluate_route(const CMatrix& a, const CMatrix& t, const Tolerance& tol,
                       Characterization via) {
  const CMatrix as = a.adjoint();
  const CMatrix ts = t.adjoint();
  switch (via) {
    case Characterization::Def:
      return all_of({range_equality(a, t * as * t, tol), right_compatible(a, t, tol)});
    case Characterization::C2:
      return all_of({range_equality(a, t * as * t, tol), null_space_inclusion(t, a, tol)});
    case Characterization::C3:
      return all_of({null_space_equality(as, ts * a * ts, tol), range_inclusion(as, ts, tol)});
    case Characterization::C4:
      return all_of({range_equality(a, t * as, tol), null_space_inclusion(t, a, tol)});
    case Characterization::C5:
      return all_of({range_equality(a, t * as, tol), right_compatible(a, t, tol)});
    case Characterization::C6:
      return all_of({null_space_equality(as, a * ts, tol), range_inclusion(as, ts, tol)});
    case Characterization::Pinv: {
      const CMatrix ap = pinv(a, tol);
      return all_of({compare(t * ap * a, a * ap * t, tol), right_compatible(a, t, tol)});
    }
    case Characterization::EpProdATstar:
      return all_of({is_ep(a * ts, tol), right_compatible(a, t, tol)});
    case Characterization::EpProdTAstar:
      return all_of({is_ep(t * as, tol), right_compatible(a, t, tol)});
    case Characterization::EpProdTApinv:
      return all_of({is_ep(t * pinv(a, tol), tol), right_compatible(a, t, tol)});
  }
  throw UsageError("is_t_ep: unknown characterization");
}

template <typename F>
PredicateResult capture(F&& f) {
  PredicateResult out;
  try {
    out.verdict = f();
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

Verdict is_partial_isometry(const CMatrix& t, const Tolerance& tol) {
  return compare(t, t * t.adjoint() * t, tol);
}

Verdict is_unitary(const CMatrix& t, const Tolerance& tol) {
  require_square(t, "is_unitary");
  const CMatrix id = identity(t.rows());
  return all_of({compare(t.adjoint() * t, id, tol), compare(t * t.adjoint(), id, tol)});
}

Verdict is_orthogonal_projector(const CMatrix& t, const Tolerance& tol) {
  require_square(t, "is_orthogonal_projector");
  return all_of({compare(t * t, t, tol), compare(t.adjoint(), t, tol)});
}

Verdict is_involutory_hermitian(const CMatrix& t, const Tolerance& tol) {
  require_square(t, "is_involutory_hermitian");
  return all_of({compare(t.adjoint(), t, tol), compare(t * t, identity(t.rows()), tol)});
}

Verdict is_normal(const CMatrix& t, const Tolerance& tol) {
  require_square(t, "is_normal");
  return compare(t * t.adjoint(), t.adjoint() * t, tol);
}

Verdict is_hermitian(const CMatrix& a, const Tolerance& tol) {
  require_square(a, "is_hermitian");
  return compare(a.adjoint(), a, tol);
}

Verdict is_ep(const CMatrix& a, const Tolerance& tol) {
  require_square(a, "is_ep");
  return compare(range_projector(a, tol), corange_projector(a, tol), tol);
}

Verdict is_t_hermitian(const CMatrix& a, const CMatrix& t, const Tolerance& tol) {
  require_relative(a, t, tol, "is_t_hermitian");
  return compare(a, t * a.adjoint() * t, tol);
}

Verdict is_t_normal(const CMatrix& a, const CMatrix& t, const Tolerance& tol) {
  require_relative(a, t, tol, "is_t_normal");
  const CMatrix ts = t.adjoint();
  return all_of({compare(a, t * ts * a, tol), compare(a, a * ts * t, tol),
                 compare(a * a.adjoint() * t, t * a.adjoint() * a, tol)});
}

std::string_view to_string(Characterization c) {
  switch (c) {
    case Characterization::Def: return "DEF";
    case Characterization::C2: return "C2";
    case Characterization::C3: return "C3";
    case Characterization::C4: return "C4";
    case Characterization::C5: return "C5";
    case Characterization::C6: return "C6";
    case Characterization::Pinv: return "PINV";
    case Characterization::EpProdATstar: return "EPPROD-AT*";
    case Characterization::EpProdTAstar: return "EPPROD-TA*";
    case Characterization::EpProdTApinv: return "EPPROD-TApinv";
  }
  return "?";
}

Characterization parse_characterization(std::string_view id) {
  for (Characterization c : kAllCharacterizations) {
    if (to_string(c) == id) return c;
  }
  throw UsageError("unknown characterization id '" + std::string(id) + "'");
}

Verdict is_t_ep(const CMatrix& a, const CMatrix& t, const Tolerance& tol, Characterization via) {
  require_relative(a, t, tol, "is_t_ep");
  return evaluate_route(a, t, tol, via);
}

void require_t_ep(const CMatrix& a, const CMatrix& t, const Tolerance& tol, const char* op) {
  const Verdict v = is_t_ep(a, t, tol, Characterization::Def);
  if (!v.holds) {
    std::ostringstream msg;
    msg << op << ": A is not T-EP (DEF residual " << v.residual << ", threshold " << v.threshold
        << ")";
    throw DomainError(msg.str(), v.residual);
  }
}

std::vector<std::pair<std::string, const PredicateResult*>> ClassificationReport::predicates()
    const {
  return {
      {"partial_isometry", &partial_isometry},
      {"unitary", &unitary},
      {"orthogonal_projector", &orthogonal_projector},
      {"involutory_hermitian", &involutory_hermitian},
      {"normal", &normal},
      {"ep", &ep},
      {"t_hermitian", &t_hermitian},
      {"t_normal", &t_normal},
      {"t_ep", &t_ep},
  };
}

ClassificationReport classify(const CMatrix& a, const CMatrix& t, const Tolerance& tol) {
  ClassificationReport r;
  r.partial_isometry = capture([&] { return is_partial_isometry(t, tol); });
  r.unitary = capture([&] { return is_unitary(t, tol); });
  r.orthogonal_projector = capture([&] { return is_orthogonal_projector(t, tol); });
  r.involutory_hermitian = capture([&] { return is_involutory_hermitian(t, tol); });
  r.normal = capture([&] { return is_normal(t, tol); });
  r.ep = capture([&] { return is_ep(a, tol); });
  r.t_hermitian = capture([&] { return is_t_hermitian(a, t, tol); });
  r.t_normal = capture([&] { return is_t_normal(a, t, tol); });
  for (Characterization c : kAllCharacterizations) {
    r.votes[c] = capture([&] { return is_t_ep(a, t, tol, c); });
  }
  r.t_ep = r.votes.at(Characterization::Def);

  if (r.t_ep.verdict) {
    for (const auto& [c, vote] : r.votes) {
      if (vote.verdict && vote.verdict->holds != r.t_ep.verdict->holds) {
        r.inconsistencies.push_back("route " + std::string(to_string(c)) + " disagrees with DEF");
      }
    }
  }
  if (r.t_hermitian.holds() && r.t_normal.verdict && !r.t_normal.holds()) {
    r.inconsistencies.push_back("T-hermitian but not T-normal");
  }
  if (r.t_normal.holds() && r.t_ep.verdict && !r.t_ep.holds()) {
    r.inconsistencies.push_back("T-normal but not T-EP");
  }
  r.inconsistent = !r.inconsistencies.empty();
  return r;
}

}  // namespace tepkit
