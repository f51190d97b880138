#include "tepkit/laws.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <thread>

#include "tepkit/canonical.hpp"
#include "tepkit/decompositions.hpp"
#include "tepkit/fixtures.hpp"
#include "tepkit/generators.hpp"
#include "tepkit/matrix_classes.hpp"

namespace tepkit {

namespace {

constexpr int kMaxAttempts = 50;
constexpr double kCap = 100.0;
constexpr double kSmallCap = 10.0;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// Thrown inside a trial to discard the current draw.
struct Rejected {
  std::string why;
};

class Trial {
 public:
  Trial(const Tolerance& tol, std::size_t index, int attempt, bool negative)
      : tol_(tol), index_(index), attempt_(attempt), negative_(negative) {}

  const Tolerance& tol() const { return tol_; }
  std::size_t index() const { return index_; }
  // First attempt of trial 0: laws with fixed witnesses evaluate them here.
  bool fixed_case() const { return index_ == 0 && attempt_ == 0; }
  bool forward() const { return index_ % 2 == 0; }

  void reject_if(bool cond, const char* why) {
    if (cond) throw Rejected{why};
  }

  // Hypothesis: a draw that does not satisfy it is discarded.
  void assume(const std::string& name, const Verdict& v) {
    if (!v.holds) throw Rejected{"hypothesis " + name};
  }

  // Conclusion that must hold. Negative laws discard borderline verdicts so
  // that a counterexample is always decisive.
  void require(const std::string& name, const Verdict& v) {
    residuals_.emplace_back(name, v.residual);
    if (negative_ && v.borderline()) throw Rejected{"borderline " + name};
    if (v.holds) {
      max_residual_ = std::max(max_residual_, v.residual);
    } else if (failure_.empty()) {
      failure_ = name + " does not hold (residual " + sci(v.residual) + ", threshold " +
                 sci(v.threshold) + ")";
    }
  }

  void require_equal(const std::string& name, Index lhs, Index rhs) {
    residuals_.emplace_back(name, static_cast<double>(std::abs(lhs - rhs)));
    if (lhs != rhs && failure_.empty()) {
      failure_ = name + ": " + std::to_string(lhs) + " != " + std::to_string(rhs);
    }
  }

  void require_true(const std::string& name, bool cond, const std::string& detail = {}) {
    if (!cond && failure_.empty()) failure_ = name + (detail.empty() ? "" : ": " + detail);
  }

  // All items must return the same verdict. Instances where any item sits
  // within a factor 10 of its threshold are discarded.
  void agree(const std::string& group, const std::vector<std::pair<std::string, Verdict>>& items) {
    for (const auto& [name, v] : items) {
      if (v.borderline()) throw Rejected{"borderline item " + name + " in " + group};
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      residuals_.emplace_back(group + "/" + items[i].first, items[i].second.residual);
      for (std::size_t j = i + 1; j < items.size(); ++j) {
        ++agreement_checks_;
        if (items[i].second.holds != items[j].second.holds && failure_.empty()) {
          failure_ = group + ": " + items[i].first + " is " +
                     (items[i].second.holds ? "true" : "false") + " but " + items[j].first +
                     " is " + (items[j].second.holds ? "true" : "false");
        }
      }
    }
  }

  void witness(const std::string& name, const CMatrix& m) { witnesses_.emplace_back(name, m); }

  bool failed() const { return !failure_.empty(); }
  const std::string& failure() const { return failure_; }
  double max_residual() const { return max_residual_; }
  std::size_t agreement_checks() const { return agreement_checks_; }
  std::vector<std::pair<std::string, double>>& residuals() { return residuals_; }
  std::vector<std::pair<std::string, CMatrix>>& witnesses() { return witnesses_; }

 private:
  const Tolerance& tol_;
  std::size_t index_;
  int attempt_;
  bool negative_;
  std::string failure_;
  double max_residual_ = 0.0;
  std::size_t agreement_checks_ = 0;
  std::vector<std::pair<std::string, double>> residuals_;
  std::vector<std::pair<std::string, CMatrix>> witnesses_;
};

using TrialFn = std::function<void(Trial&, Sampler&)>;

struct LawDef {
  LawInfo info;
  TrialFn run;
};

// ---------------------------------------------------------------------------
// Shared instance families

struct Pair {
  CMatrix a;
  CMatrix t;
};

Index dim(Sampler& s, Index lo = 1, Index hi = 6) { return s.integer(lo, hi); }

CMatrix identity(Index n) { return CMatrix::Identity(n, n); }

Verdict same_rank(Index lhs, Index rhs) {
  return make_verdict(static_cast<double>(std::abs(lhs - rhs)), 0.5);
}

// No singular value within three decades of the rank cutoff.
bool rank_is_clear(const CMatrix& m, const Tolerance& tol) {
  if (m.size() == 0) return true;
  const SvdResult s = svd(m, tol);
  if (s.sigma.size() == 0 || s.sigma(0) == 0.0) return true;
  const double lo = tol.rank_rtol * 1e-3;
  const double hi = tol.rank_rtol * 1e3;
  for (Index i = 0; i < s.sigma.size(); ++i) {
    const double ratio = s.sigma(i) / s.sigma(0);
    if (ratio > lo && ratio < hi) return false;
  }
  return true;
}

Pair forward_t_ep(Sampler& s, Index m, Index n, Index min_rank = 0) {
  const Index r = s.integer(std::min(min_rank, std::min(m, n)), std::min(m, n));
  auto [a, t] = sample_t_ep(s, m, n, r, kCap);
  return {a, t};
}

// T a random partial isometry, A built so that none, one or both of the
// conditions A = T T^* A and A = A T^* T hold structurally; the range
// conditions are left to chance.
Pair generic_pair(Sampler& s, Index m, Index n) {
  const Index k = s.integer(0, std::min(m, n));
  const CMatrix t = s.partial_isometry(m, n, k);
  const CMatrix raw = s.low_rank(m, n, s.integer(0, std::min(m, n)), kCap);
  const CMatrix ts = t.adjoint();
  switch (s.integer(0, 2)) {
    case 0: return {raw * ts * t, t};
    case 1: return {raw, t};
    default: return {t * ts * raw * ts * t, t};
  }
}

// T-EP by the EP-factor route: A = E T with E EP and R(E) inside R(T).
Pair factor_t_ep(Sampler& s, const CMatrix& t, Index min_rank = 0) {
  const CMatrix basis = range_basis(t);
  const Index k = basis.cols();
  const Index r = s.integer(std::min(min_rank, k), k);
  return {s.ep_in_subspace(basis, r, kCap) * t, t};
}

std::vector<Pair> fixture_pairs() {
  return {{fixtures::t_hermitian_not_ep(), fixtures::skip_isometry()},
          {fixtures::t_ep_not_t_normal(), fixtures::shift_isometry()}};
}

void record_pair(Trial& tr, const Pair& p) {
  tr.witness("A", p.a);
  tr.witness("T", p.t);
}

// ---------------------------------------------------------------------------
// Positive laws

void law_th_implies_tn(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  Pair p;
  bool hermitian_branch = true;
  if (tr.fixed_case()) {
    p = fixture_pairs()[0];
  } else if (s.coin()) {
    const Index m = dim(s), n = dim(s);
    auto [a, t] = sample_t_hermitian(s, m, n, s.integer(0, std::min(m, n)));
    p = {a, t};
  } else {
    // T-normal but generally not T-hermitian: D normal in the canonical form.
    hermitian_branch = false;
    const Index m = dim(s), n = dim(s);
    const Index r = s.integer(1, std::min(m, n));
    const CMatrix u = s.unitary(m);
    const CMatrix v = s.unitary(n);
    const CMatrix t =
        u * block_diag(s.unitary(r), s.partial_isometry(m - r, n - r, s.integer(0, std::min(m, n) - r))) *
        v.adjoint();
    const CMatrix core = block_diag(s.normal_nonsingular(r, kCap), CMatrix::Zero(m - r, m - r));
    p = {u * core * u.adjoint() * t, t};
  }
  record_pair(tr, p);
  if (hermitian_branch) {
    tr.assume("A is T-hermitian", is_t_hermitian(p.a, p.t, tol));
    tr.require("A is T-normal", is_t_normal(p.a, p.t, tol));
  } else {
    tr.assume("A is T-normal", is_t_normal(p.a, p.t, tol));
  }
  tr.require("A is T-EP", is_t_ep(p.a, p.t, tol));
}

void check_char6(Trial& tr, const Pair& p) {
  const Tolerance& tol = tr.tol();
  const CMatrix& a = p.a;
  const CMatrix& t = p.t;
  const CMatrix as = a.adjoint();
  const CMatrix ts = t.adjoint();
  const CMatrix ap = pinv(a, tol);

  std::vector<std::pair<std::string, Verdict>> six;
  for (Characterization c : {Characterization::Def, Characterization::C2, Characterization::C3,
                             Characterization::C4, Characterization::C5, Characterization::C6}) {
    six.emplace_back(std::string(to_string(c)), is_t_ep(a, t, tol, c));
  }
  tr.agree("six-way", six);

  tr.agree("range side", {
                             {"A = TT*A", compare(a, t * ts * a, tol)},
                             {"R(A) in R(T)", range_inclusion(a, t, tol)},
                             {"N(T*) in N(A*)", null_space_inclusion(ts, as, tol)},
                             {"pinv(A) = pinv(A)TT*", compare(ap, ap * t * ts, tol)},
                         });
  tr.agree("null side", {
                            {"A = AT*T", compare(a, a * ts * t, tol)},
                            {"N(T) in N(A)", null_space_inclusion(t, a, tol)},
                            {"R(A*) in R(T*)", range_inclusion(as, ts, tol)},
                            {"pinv(A) = T*T pinv(A)", compare(ap, ts * t * ap, tol)},
                        });

  if (six.front().second.holds) {
    tr.require("A = TT*A", compare(a, t * ts * a, tol));
    const Index r = rank_of(a, tol);
    tr.require_equal("rank(TA*T) = rank(A)", rank_of(t * as * t, tol), r);
    tr.require_equal("rank(TA*) = rank(A)", rank_of(t * as, tol), r);
    tr.require_equal("rank(A*T) = rank(A)", rank_of(as * t, tol), r);
  }
}

template <typename Check>
void equivalence_trial(Trial& tr, Sampler& s, Check&& check) {
  if (tr.fixed_case()) {
    for (const Pair& p : fixture_pairs()) {
      record_pair(tr, p);
      check(tr, p);
    }
    return;
  }
  const Index m = dim(s), n = dim(s);
  const Pair p = tr.forward() ? forward_t_ep(s, m, n) : generic_pair(s, m, n);
  record_pair(tr, p);
  check(tr, p);
}

void law_char6(Trial& tr, Sampler& s) { equivalence_trial(tr, s, check_char6); }

void check_pinv_char(Trial& tr, const Pair& p) {
  const Tolerance& tol = tr.tol();
  const CMatrix& a = p.a;
  const CMatrix& t = p.t;
  const CMatrix ts = t.adjoint();
  const CMatrix ap = pinv(a, tol);
  const Verdict commute = compare(t * ap * a, a * ap * t, tol);
  tr.agree("pinv characterization",
           {
               {"DEF", is_t_ep(a, t, tol)},
               {"TA+A = AA+T and A = AT*T", all_of({commute, compare(a, a * ts * t, tol)})},
               {"TA+A = AA+T and N(T) in N(A)", all_of({commute, null_space_inclusion(t, a, tol)})},
               {"TA+A = AA+T and R(A*) in R(T*)",
                all_of({commute, range_inclusion(a.adjoint(), ts, tol)})},
               {"TA+A = AA+T and pinv(A) = T*T pinv(A)",
                all_of({commute, compare(ap, ts * t * ap, tol)})},
           });
}

void law_pinv_char(Trial& tr, Sampler& s) { equivalence_trial(tr, s, check_pinv_char); }

void check_duality(Trial& tr, const Pair& p) {
  const Tolerance& tol = tr.tol();
  const CMatrix& a = p.a;
  const CMatrix& t = p.t;
  const CMatrix ap = pinv(a, tol);
  const Verdict direct = is_t_ep(a, t, tol);
  tr.agree("duality", {
                          {"A is T-EP", direct},
                          {"A* is T*-EP", is_t_ep(a.adjoint(), t.adjoint(), tol)},
                          {"pinv(A) is T*-EP", is_t_ep(ap, t.adjoint(), tol)},
                      });
  if (direct.holds) {
    const double scale = std::max({1.0, a.norm(), ap.norm()});
    for (const auto& [id, res] : pinv_identities(a, t, tol)) {
      tr.require(id, make_verdict(res, tol.eq_atol + tol.eq_rtol * scale));
    }
  }
}

void law_duality(Trial& tr, Sampler& s) { equivalence_trial(tr, s, check_duality); }

void check_epprod(Trial& tr, const Pair& p) {
  const Tolerance& tol = tr.tol();
  tr.agree("EP products", {
                              {"DEF", is_t_ep(p.a, p.t, tol, Characterization::Def)},
                              {"EPPROD-AT*", is_t_ep(p.a, p.t, tol, Characterization::EpProdATstar)},
                              {"EPPROD-TA*", is_t_ep(p.a, p.t, tol, Characterization::EpProdTAstar)},
                              {"EPPROD-TApinv",
                               is_t_ep(p.a, p.t, tol, Characterization::EpProdTApinv)},
                          });
}

void law_epprod(Trial& tr, Sampler& s) { equivalence_trial(tr, s, check_epprod); }

// Conditions shared by both canonical forms: E is EP, A = E T, T T^* E = E,
// E T T^* = E, and the pseudoinverse shortcuts.
void check_ep_factor(Trial& tr, const TepCanonical& form, const Pair& p) {
  const Tolerance& tol = tr.tol();
  const CMatrix& e = form.ep_factor;
  const CMatrix tts = p.t * p.t.adjoint();
  const CMatrix ap = pinv(p.a, tol);
  tr.require("A = U diag(D,0) U* T", compare(form.reconstruct(p.t), p.a, tol));
  tr.require_equal("D nonsingular", rank_of(form.d, tol), form.rank);
  tr.require("E is EP", is_ep(e, tol));
  tr.require("A = ET", compare(e * p.t, p.a, tol));
  tr.require("TT*E = E", compare(tts * e, e, tol));
  tr.require("ETT* = E", compare(e * tts, e, tol));
  tr.require("E = AT*", compare(e, p.a * p.t.adjoint(), tol));
  tr.require("pinv(A) = T* pinv(E)", compare(pinv_via_factor(p.a, p.t, tol), ap, tol));
  tr.require("pinv(A) = T*U diag(inv(D),0) U*", compare(pinv_via_canonical(form, p.t), ap, tol));
}

void law_canon_rect(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const Index m = dim(s), n = dim(s);
  Pair p;
  switch (tr.index() % 3) {
    case 0:  // built in canonical form
      p = forward_t_ep(s, m, n, 1);
      break;
    case 1:  // built from an EP factor
      p = factor_t_ep(s, s.partial_isometry(m, n, s.integer(1, std::min(m, n))), 1);
      break;
    default: {  // generic: T-EP or not, the decomposition must agree
      p = generic_pair(s, m, n);
      record_pair(tr, p);
      const Verdict v = is_t_ep(p.a, p.t, tol);
      tr.reject_if(v.borderline(), "borderline T-EP verdict");
      tr.reject_if(v.holds, "generic draw is T-EP");
      bool threw = false;
      try {
        (void)tep_canonical_rect(p.a, p.t, tol);
      } catch (const DomainError&) {
        threw = true;
      }
      tr.require_true("non-T-EP input rejected", threw);
      return;
    }
  }
  record_pair(tr, p);
  tr.reject_if(rank_of(p.a, tol) == 0, "zero A");
  tr.require("A is T-EP", is_t_ep(p.a, p.t, tol));
  tr.require("T is T-EP", is_t_ep(p.t, p.t, tol));

  const SvdResult sv = svd(p.a, tol);
  tr.require("A = U S V*", compare(sv.reconstruct(), p.a, tol));

  const TepCanonical form = tep_canonical_rect(p.a, p.t, tol);
  const Index r = form.rank;
  tr.require("T = U diag(T1,T4) V*",
             compare(form.u * block_diag(form.t1, form.t4) * form.v.adjoint(), p.t, tol));
  tr.require("T1 T1* = I", compare(form.t1 * form.t1.adjoint(), identity(r), tol));
  tr.require("T4 partial isometry", is_partial_isometry(form.t4, tol));
  check_ep_factor(tr, form, p);

  // T^* A = R diag(D,0) R^* with R = T^* U a partial isometry.
  const CMatrix rr = p.t.adjoint() * form.u;
  tr.require("T*A = R diag(D,0) R*", compare(p.t.adjoint() * p.a, rr * form.core() * rr.adjoint(), tol));
  tr.require("R partial isometry", is_partial_isometry(rr, tol));
}

void law_canon_sq(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const Index n = dim(s, 1, 7);
  Pair p;
  switch (tr.index() % 3) {
    case 0:
      p = forward_t_ep(s, n, n, 1);
      break;
    case 1:
      p = factor_t_ep(s, s.partial_isometry(n, n, s.integer(1, n)), 1);
      break;
    default: {
      p = generic_pair(s, n, n);
      record_pair(tr, p);
      const Verdict v = is_t_ep(p.a, p.t, tol);
      tr.reject_if(v.borderline(), "borderline T-EP verdict");
      tr.reject_if(v.holds, "generic draw is T-EP");
      bool threw = false;
      try {
        (void)tep_canonical_square(p.a, p.t, tol);
      } catch (const DomainError&) {
        threw = true;
      }
      tr.require_true("non-T-EP input rejected", threw);
      return;
    }
  }
  record_pair(tr, p);
  tr.reject_if(rank_of(p.a, tol) == 0, "zero A");
  tr.require("A is T-EP", is_t_ep(p.a, p.t, tol));

  const HSDecomposition hs = hs_decompose(p.a, tol);
  const Index r = hs.r;
  tr.require("A = U [SK SL; 0 0] U*", compare(hs.reconstruct(), p.a, tol));
  tr.require("KK* + LL* = I",
             compare(hs.k * hs.k.adjoint() + hs.l * hs.l.adjoint(), identity(r), tol));
  tr.require("HS pseudoinverse", compare(hs.pinv(), pinv(p.a, tol), tol));
  tr.require("HS range projector", compare(hs.range_projector(), range_projector(p.a, tol), tol));

  const TepCanonical form = tep_canonical_square(p.a, p.t, tol);
  tr.require("T = U [T1 T2; T3 T4] U*", compare(form.partial_isometry(), p.t, tol));
  tr.require("T1T1* + T2T2* = I",
             compare(form.t1 * form.t1.adjoint() + form.t2 * form.t2.adjoint(), identity(r), tol));
  tr.require("T3T1* + T4T2* = 0",
             vanishes(form.t3 * form.t1.adjoint() + form.t4 * form.t2.adjoint(), 1.0, tol));
  check_ep_factor(tr, form, p);

  // U^* T T^* U = diag(I_r, Z), Z = T3 T3^* + T4 T4^* hermitian.
  const CMatrix g = form.u.adjoint() * p.t * p.t.adjoint() * form.u;
  const CMatrix z = g.bottomRightCorner(n - r, n - r);
  tr.require("TT* upper block = I", compare(g.topLeftCorner(r, r), identity(r), tol));
  tr.require("TT* off-diagonal blocks = 0", vanishes(g.topRightCorner(r, n - r), 1.0, tol));
  tr.require("Z hermitian", compare(z, z.adjoint(), tol));
  tr.require("Z = T3T3* + T4T4*",
             compare(z, form.t3 * form.t3.adjoint() + form.t4 * form.t4.adjoint(), tol));
}

void law_pearl(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const Index n = dim(s, 1, 7);
  const CMatrix id = identity(n);
  const Index r = s.integer(0, n);
  const CMatrix a = tr.forward() ? s.ep(n, r, kCap) : s.low_rank(n, n, r, kCap);
  tr.witness("A", a);

  const Verdict ep = is_ep(a, tol);
  tr.agree("EP vs I-EP", {{"A is EP", ep}, {"A is I-EP", is_t_ep(a, id, tol)}});
  if (tr.forward()) tr.require("Pearl form is EP", ep);

  if (ep.holds && r > 0) {
    const TepCanonical form = tep_canonical_square(a, id, tol);
    tr.require("A = U diag(D,0) U*", compare(form.u * form.core() * form.u.adjoint(), a, tol));
    tr.require_equal("D nonsingular", rank_of(form.d, tol), form.rank);
    tr.require("C = A", compare(form.ep_factor, a, tol));
  } else if (!ep.holds) {
    bool threw = false;
    try {
      (void)tep_canonical_square(a, id, tol);
    } catch (const DomainError&) {
      threw = true;
    }
    tr.require_true("non-EP input has no Pearl form", threw);
  }
}

void law_ep_and_aastar(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const Index n = dim(s, 1, 7);
  CMatrix a, t;
  if (tr.forward()) {
    const Index r = s.integer(1, n);
    const CMatrix u = s.unitary(n);
    t = u * block_diag(s.unitary(r), s.partial_isometry(n - r, n - r, s.integer(0, n - r))) *
        u.adjoint();
    a = u * block_diag(s.nonsingular(r, kCap), CMatrix::Zero(n - r, n - r)) * u.adjoint();
  } else {
    a = s.ep(n, s.integer(0, n), kCap);
    t = s.partial_isometry(n, n, s.integer(0, n));
  }
  tr.witness("A", a);
  tr.witness("T", t);
  tr.assume("A is EP", is_ep(a, tol));

  const Verdict gram = is_t_ep(a * a.adjoint(), t, tol);
  tr.agree("AA* vs AA+", {{"AA* is T-EP", gram}, {"AA+ is T-EP", is_t_ep(a * pinv(a, tol), t, tol)}});
  if (tr.forward()) tr.assume("AA* is T-EP", gram);
  if (gram.holds) tr.require("A is T-EP", is_t_ep(a, t, tol));
}

void law_t_unitary(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const Index n = dim(s, 1, 7);
  const CMatrix t = s.unitary(n);
  const Index r = s.integer(0, n);
  const CMatrix a = tr.forward() ? CMatrix(s.ep(n, r, kCap) * t) : s.low_rank(n, n, r, kCap);
  tr.witness("A", a);
  tr.witness("T", t);
  tr.assume("T unitary", is_unitary(t, tol));

  const CMatrix as = a.adjoint();
  const CMatrix ts = t.adjoint();
  const CMatrix ap = pinv(a, tol);
  const Verdict def = is_t_ep(a, t, tol);
  tr.agree("unitary T", {
                            {"A is T-EP", def},
                            {"R(A) = R(TA*)", range_equality(a, t * as, tol)},
                            {"N(A*) = N(AT*)", null_space_equality(as, a * ts, tol)},
                            {"AT* is EP", is_ep(a * ts, tol)},
                            {"TA* is EP", is_ep(t * as, tol)},
                            {"TA+ is EP", is_ep(t * ap, tol)},
                            {"TA+A = AA+T", compare(t * ap * a, a * ap * t, tol)},
                        });
  if (def.holds) {
    tr.require("pinv(AT) = T*pinv(A)", compare(pinv(a * t, tol), ts * ap, tol));
    tr.require("pinv(TA) = pinv(A)T*", compare(pinv(t * a, tol), ap * ts, tol));
    tr.require("pinv(TAT) = T*pinv(A)T*", compare(pinv(t * a * t, tol), ts * ap * ts, tol));
  }
}

void law_t_invol_herm(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const Index n = dim(s, 1, 7);
  const CMatrix t = s.involutory_hermitian(n);
  const Index r = s.integer(0, n);
  const CMatrix a = tr.forward() ? CMatrix(s.ep(n, r, kCap) * t) : s.low_rank(n, n, r, kCap);
  tr.witness("A", a);
  tr.witness("T", t);
  tr.assume("T involutory hermitian", is_involutory_hermitian(t, tol));

  const CMatrix as = a.adjoint();
  const CMatrix ap = pinv(a, tol);
  tr.agree("involutory hermitian T",
           {
               {"A is T-EP", is_t_ep(a, t, tol)},
               {"R(A) = R(TA*)", range_equality(a, t * as, tol)},
               {"N(A*) = N(AT)", null_space_equality(as, a * t, tol)},
               {"AT is EP", is_ep(a * t, tol)},
               {"TA* is EP", is_ep(t * as, tol)},
               {"TA+ is EP", is_ep(t * ap, tol)},
               {"TA+A = AA+T", compare(t * ap * a, a * ap * t, tol)},
               {"R(A*) = R(TA)", range_equality(as, t * a, tol)},
               {"N(A) = N(A*T)", null_space_equality(a, as * t, tol)},
               {"A*T is EP", is_ep(as * t, tol)},
               {"(xi) TA is EP", is_ep(t * a, tol)},
               {"(xii) A+T is EP", is_ep(ap * t, tol)},
               {"(xiii) A+AT = TAA+", compare(ap * a * t, t * a * ap, tol)},
           });
}

void law_t_projector(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const Index n = dim(s, 1, 7);
  const CMatrix t = s.orthogonal_projector(n, s.integer(0, n));
  CMatrix a;
  if (tr.forward()) {
    a = factor_t_ep(s, t).a;
  } else {
    const CMatrix m = s.low_rank(n, n, s.integer(0, n), kCap);
    switch (s.integer(0, 2)) {
      case 0: a = m * t; break;
      case 1: a = t * m * t; break;
      default: a = m; break;
    }
  }
  tr.witness("A", a);
  tr.witness("T", t);
  tr.assume("T orthogonal projector", is_orthogonal_projector(t, tol));

  const Verdict right = compare(a, a * t, tol);
  const Verdict def = is_t_ep(a, t, tol);
  tr.agree("orthogonal projector T",
           {
               {"A is T-EP", def},
               {"A is EP and A = AT", all_of({is_ep(a, tol), right})},
               {"A* is EP and A = AT", all_of({is_ep(a.adjoint(), tol), right})},
               {"A+ is EP and A = AT", all_of({is_ep(pinv(a, tol), tol), right})},
           });
  if (def.holds) {
    for (const auto& [name, m] : {std::pair<std::string, CMatrix>{"AT", a * t},
                                  std::pair<std::string, CMatrix>{"TA", t * a},
                                  std::pair<std::string, CMatrix>{"TAT", t * a * t}}) {
      tr.require(name + " is EP", is_ep(m, tol));
      tr.require(name + " is T-EP", is_t_ep(m, t, tol));
    }
  }
}

void law_t_normal_pinv(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const Index n = dim(s, 1, 7);
  const CMatrix t = s.normal_partial_isometry(n, s.integer(0, n));
  const CMatrix ts = t.adjoint();
  tr.witness("T", t);
  tr.assume("T normal", is_normal(t, tol));
  tr.assume("T partial isometry", is_partial_isometry(t, tol));

  // A = T T^* A
  const CMatrix left = t * ts * s.low_rank(n, n, s.integer(0, n), kCap);
  const CMatrix lp = pinv(left, tol);
  tr.witness("A_left", left);
  tr.require("pinv(TA) = pinv(A)T*", compare(pinv(t * left, tol), lp * ts, tol));
  tr.require("pinv(A) = pinv(TA)T", compare(lp, pinv(t * left, tol) * t, tol));

  // A = A T^* T
  const CMatrix right = s.low_rank(n, n, s.integer(0, n), kCap) * ts * t;
  const CMatrix rp = pinv(right, tol);
  tr.witness("A_right", right);
  tr.require("pinv(AT) = T*pinv(A)", compare(pinv(right * t, tol), ts * rp, tol));
  tr.require("pinv(A) = T pinv(AT)", compare(rp, t * pinv(right * t, tol), tol));

  // A T-EP
  const CMatrix a = factor_t_ep(s, t).a;
  const CMatrix ap = pinv(a, tol);
  tr.witness("A", a);
  tr.assume("A is T-EP", is_t_ep(a, t, tol));
  tr.require("T-EP: pinv(A) = pinv(TA)T", compare(ap, pinv(t * a, tol) * t, tol));
  tr.require("T-EP: pinv(A) = T pinv(AT)", compare(ap, t * pinv(a * t, tol), tol));
}

void law_t_herm_sq(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const Index n = dim(s, 1, 7);
  const CMatrix t = s.hermitian_partial_isometry(n, s.integer(0, n));
  const CMatrix t2 = t * t;
  CMatrix a;
  if (tr.forward()) {
    a = factor_t_ep(s, t).a;
  } else {
    const CMatrix m = s.low_rank(n, n, s.integer(0, n), kCap);
    switch (s.integer(0, 2)) {
      case 0: a = t2 * m * t2; break;
      case 1: a = m * t2; break;
      default: a = m; break;
    }
  }
  tr.witness("A", a);
  tr.witness("T", t);
  tr.assume("T hermitian", is_hermitian(t, tol));
  tr.assume("T partial isometry", is_partial_isometry(t, tol));
  tr.agree("hermitian T", {
                              {"A is T-EP", is_t_ep(a, t, tol)},
                              {"TA is EP and A = AT^2 = T^2A",
                               all_of({is_ep(t * a, tol), compare(a, a * t2, tol),
                                       compare(a, t2 * a, tol)})},
                          });
}

void law_commute(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const Index n = dim(s, 1, 7);
  const Index k1 = s.integer(0, n);
  const Index k2 = s.integer(0, n - k1);
  const Index k0 = n - k1 - k2;
  const CMatrix w = s.unitary(n);

  // T acts as a scalar on each block, so any block-diagonal A commutes with T^*.
  Eigen::VectorXcd diag(n);
  const Complex tau1 = s.unit_phase();
  const Complex tau2 = s.unit_phase();
  for (Index i = 0; i < n; ++i) diag(i) = i < k1 ? tau1 : (i < k1 + k2 ? tau2 : Complex(0.0));
  const CMatrix t = w * diag.asDiagonal() * w.adjoint();

  CMatrix blocks = CMatrix::Zero(n, n);
  Index offset = 0;
  for (Index k : {k1, k2}) {
    const Index r = s.integer(0, k);
    blocks.block(offset, offset, k, k) = tr.forward() ? s.ep(k, r, kCap) : s.low_rank(k, k, r, kCap);
    offset += k;
  }
  if (!tr.forward() && s.coin()) {
    blocks.block(offset, offset, k0, k0) = s.low_rank(k0, k0, s.integer(0, k0), kCap);
  }
  const CMatrix a = w * blocks * w.adjoint();
  tr.witness("A", a);
  tr.witness("T", t);
  tr.assume("T partial isometry", is_partial_isometry(t, tol));
  tr.assume("AT* = T*A", compare(a * t.adjoint(), t.adjoint() * a, tol));
  tr.agree("A commutes with T*", {
                                     {"A is T-EP", is_t_ep(a, t, tol)},
                                     {"A is EP and A = AT*T",
                                      all_of({is_ep(a, tol), compare(a, a * t.adjoint() * t, tol)})},
                                 });
}

// --- sums ------------------------------------------------------------------

struct SumInstance {
  CMatrix a;
  CMatrix b;
  CMatrix t;
};

void record_sum(Trial& tr, const SumInstance& x) {
  tr.witness("A", x.a);
  tr.witness("B", x.b);
  tr.witness("T", x.t);
}

void assume_summands_t_ep(Trial& tr, const SumInstance& x) {
  tr.assume("A is T-EP", is_t_ep(x.a, x.t, tr.tol()));
  tr.assume("B is T-EP", is_t_ep(x.b, x.t, tr.tol()));
}

double product_scale(const CMatrix& x, const CMatrix& y) { return x.norm() * y.norm(); }

// Star-orthogonal summands on coordinate blocks of a shared basis.
SumInstance star_orthogonal_instance(Sampler& s) {
  const Index m = dim(s, 2, 7), n = dim(s, 2, 7);
  const Index q = std::min(m, n);
  const Index ra = s.integer(1, q - 1);
  const Index rb = s.integer(1, q - ra);
  StarOrthogonalTriple p = sample_star_orthogonal(s, m, n, ra, rb, kCap);
  return {p.a, p.b, p.t};
}

// Summands E_A T and E_B T whose factors live on orthonormal subspaces of
// R(T) in general position; ranges are orthogonal, not coordinate aligned.
SumInstance orthogonal_subspace_instance(Sampler& s) {
  const Index m = dim(s, 2, 7), n = dim(s, 2, 7);
  const Index k = s.integer(2, std::min(m, n));
  const CMatrix t = s.partial_isometry(m, n, k);
  const Index ra = s.integer(1, k - 1);
  const Index rb = s.integer(0, k - ra);
  const CMatrix y = range_basis(t) * s.isometry(k, ra + rb);
  const CMatrix ya = y.leftCols(ra);
  const CMatrix yb = y.rightCols(rb);
  return {ya * s.nonsingular(ra, kCap) * ya.adjoint() * t,
          yb * s.nonsingular(rb, kCap) * yb.adjoint() * t, t};
}

// Summands whose factors live on two independent (non-orthogonal) subspaces
// of R(T), so R(A) and R(B) intersect trivially. Rejects nearly collinear
// draws.
SumInstance range_disjoint_instance(Trial& tr, Sampler& s, Index m, Index n) {
  const Index k = s.integer(2, std::min(m, n));
  const CMatrix t = s.partial_isometry(m, n, k);
  const Index ra = s.integer(1, k - 1);
  const Index rb = s.integer(1, k - ra);
  const CMatrix y = range_basis(t) * s.gaussian(k, ra + rb);
  const CMatrix qa = range_basis(y.leftCols(ra));
  const CMatrix qb = range_basis(y.rightCols(rb));
  const Eigen::VectorXd gap = svd(hstack(qa, qb)).sigma;
  tr.reject_if(gap(gap.size() - 1) < 0.05, "nearly collinear ranges");
  return {qa * s.nonsingular(ra, kCap) * qa.adjoint() * t,
          qb * s.nonsingular(rb, kCap) * qb.adjoint() * t, t};
}

// Summands whose EP factors are independent random EP matrices inside R(T);
// their ranges generally overlap.
SumInstance overlapping_instance(Sampler& s) {
  const Index m = dim(s, 1, 7), n = dim(s, 1, 7);
  const Index k = s.integer(1, std::min(m, n));
  const CMatrix t = s.partial_isometry(m, n, k);
  const CMatrix basis = range_basis(t);
  return {s.ep_in_subspace(basis, s.integer(1, k), kCap) * t,
          s.ep_in_subspace(basis, s.integer(1, k), kCap) * t, t};
}

void law_sum_anticomm(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  SumInstance x;
  switch (s.integer(0, 2)) {
    case 0: {
      // A^* B = S skew-hermitian on a shared block: D_B = D_A^{-*} S.
      const Index m = dim(s), n = dim(s);
      const Index r = s.integer(1, std::min(m, n));
      const CMatrix u = s.unitary(m);
      const CMatrix v = s.unitary(n);
      const CMatrix t =
          u * block_diag(s.unitary(r), s.partial_isometry(m - r, n - r, s.integer(0, std::min(m, n) - r))) *
          v.adjoint();
      const CMatrix da = s.nonsingular(r, kSmallCap);
      const CMatrix q = s.unitary(r);
      Eigen::VectorXcd h = s.singular_values(r, kSmallCap).cast<Complex>();
      for (Index i = 0; i < r; ++i) h(i) *= s.coin() ? Complex(0, 1) : Complex(0, -1);
      const CMatrix skew = q * h.asDiagonal() * q.adjoint();
      const CMatrix db = da.adjoint().inverse() * skew;
      const CMatrix zero = CMatrix::Zero(m - r, m - r);
      x = {u * block_diag(da, zero) * u.adjoint() * t, u * block_diag(db, zero) * u.adjoint() * t, t};
      break;
    }
    case 1: {
      // B = i c A
      const Index m = dim(s), n = dim(s);
      const Pair p = forward_t_ep(s, m, n, 1);
      x = {p.a, Complex(0.0, s.uniform(0.5, 2.0)) * p.a, p.t};
      break;
    }
    default:
      x = star_orthogonal_instance(s);
      break;
  }
  record_sum(tr, x);
  assume_summands_t_ep(tr, x);
  tr.assume("A*B + B*A = 0", vanishes(x.a.adjoint() * x.b + x.b.adjoint() * x.a,
                                      product_scale(x.a, x.b), tol));
  tr.require("A + B is T-EP", is_t_ep(x.a + x.b, x.t, tol));
}

void law_sum_astar_b0(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const SumInstance x = orthogonal_subspace_instance(s);
  record_sum(tr, x);
  assume_summands_t_ep(tr, x);
  tr.assume("A*B = 0", vanishes(x.a.adjoint() * x.b, product_scale(x.a, x.b), tol));
  tr.require("A + B is T-EP", is_t_ep(x.a + x.b, x.t, tol));
}

void law_sum_bastar0(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const SumInstance x = orthogonal_subspace_instance(s);
  record_sum(tr, x);
  assume_summands_t_ep(tr, x);
  tr.assume("BA* = 0", vanishes(x.b * x.a.adjoint(), product_scale(x.a, x.b), tol));
  tr.require("A* + B* is T*-EP", is_t_ep(x.a.adjoint() + x.b.adjoint(), x.t.adjoint(), tol));
  tr.require("A + B is T-EP", is_t_ep(x.a + x.b, x.t, tol));
}

void law_sum_starorth(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const SumInstance x = star_orthogonal_instance(s);
  record_sum(tr, x);
  assume_summands_t_ep(tr, x);
  const CMatrix& a = x.a;
  const CMatrix& b = x.b;
  const CMatrix& t = x.t;
  const double scale = product_scale(a, b);
  tr.assume("A*B = 0", vanishes(a.adjoint() * b, scale, tol));
  tr.assume("BA* = 0", vanishes(b * a.adjoint(), scale, tol));
  tr.require("A + B is T-EP", is_t_ep(a + b, t, tol));

  const CMatrix ts = t.adjoint();
  tr.require("A*, B* star-orthogonal: AB* = 0", vanishes(a * b.adjoint(), scale, tol));
  tr.require("A*, B* star-orthogonal: B*A = 0", vanishes(b.adjoint() * a, scale, tol));
  tr.require("AT*, BT* star-orthogonal: TA*BT* = 0", vanishes(t * a.adjoint() * b * ts, scale, tol));
  tr.require("AT*, BT* star-orthogonal: BT*TA* = 0", vanishes(b * ts * t * a.adjoint(), scale, tol));
  tr.require("TA*, TB* star-orthogonal: AT*TB* = 0", vanishes(a * ts * t * b.adjoint(), scale, tol));
  tr.require("TA*, TB* star-orthogonal: TB*AT* = 0", vanishes(t * b.adjoint() * a * ts, scale, tol));
}

void law_sum_range_disjoint(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const SumInstance x = range_disjoint_instance(tr, s, dim(s, 2, 7), dim(s, 2, 7));
  record_sum(tr, x);
  assume_summands_t_ep(tr, x);
  tr.assume("R(A) and R(B) intersect trivially",
            same_rank(rank_of(hstack(x.a, x.b), tol), rank_of(x.a, tol) + rank_of(x.b, tol)));
  tr.require("A + B is T-EP", is_t_ep(x.a + x.b, x.t, tol));
}

void law_sum_rangestar_disjoint(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  // Range-disjoint summands for T^*, transposed back.
  const SumInstance dual = range_disjoint_instance(tr, s, dim(s, 2, 7), dim(s, 2, 7));
  const SumInstance x{dual.a.adjoint(), dual.b.adjoint(), dual.t.adjoint()};
  record_sum(tr, x);
  assume_summands_t_ep(tr, x);
  tr.assume("R(A*) and R(B*) intersect trivially",
            same_rank(rank_of(hstack(x.a.adjoint(), x.b.adjoint()), tol),
                      rank_of(x.a, tol) + rank_of(x.b, tol)));
  tr.require("A + B is T-EP", is_t_ep(x.a + x.b, x.t, tol));
}

void law_sum_rankcond(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  SumInstance x;
  switch (s.integer(0, 2)) {
    case 0: x = overlapping_instance(s); break;
    case 1: x = range_disjoint_instance(tr, s, dim(s, 2, 7), dim(s, 2, 7)); break;
    default: x = star_orthogonal_instance(s); break;
  }
  record_sum(tr, x);
  const CMatrix sum = x.a + x.b;
  const CMatrix mirrored = x.t * sum.adjoint() * x.t;
  const CMatrix stacked = hstack(x.a, x.b);
  tr.reject_if(!rank_is_clear(sum, tol) || !rank_is_clear(mirrored, tol) ||
                   !rank_is_clear(stacked, tol),
               "rank near cutoff");
  assume_summands_t_ep(tr, x);
  tr.assume("rank(T(A+B)*T) = rank(A+B)", same_rank(rank_of(mirrored, tol), rank_of(sum, tol)));
  tr.assume("R(A+B) = R(A) + R(B)", same_rank(rank_of(stacked, tol), rank_of(sum, tol)));
  tr.require("A + B is T-EP", is_t_ep(sum, x.t, tol));
}

void law_remark_starorth_rank(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  const SumInstance x = s.coin() ? star_orthogonal_instance(s) : orthogonal_subspace_instance(s);
  record_sum(tr, x);
  assume_summands_t_ep(tr, x);
  const double scale = product_scale(x.a, x.b);
  tr.assume("A*B = 0", vanishes(x.a.adjoint() * x.b, scale, tol));
  tr.assume("BA* = 0", vanishes(x.b * x.a.adjoint(), scale, tol));

  const CMatrix sum = x.a + x.b;
  const Index rs = rank_of(sum, tol);
  const Index ra = rank_of(x.a, tol);
  const Index rb = rank_of(x.b, tol);
  tr.require_equal("rank(T(A+B)*T) = rank(A+B)", rank_of(x.t * sum.adjoint() * x.t, tol), rs);
  tr.require_equal("R(A+B) = R(A) + R(B)", rank_of(hstack(x.a, x.b), tol), rs);
  tr.require_equal("rank(A+B) = rank(A) + rank(B)", rs, ra + rb);
  tr.require_equal("R(A*) and R(B*) intersect trivially",
                   rank_of(hstack(x.a.adjoint(), x.b.adjoint()), tol), ra + rb);
}

// --- negative laws -------------------------------------------------------

void law_tep_implies_tn_false(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  Pair p;
  if (tr.fixed_case()) {
    p = fixture_pairs()[1];
  } else {
    p = forward_t_ep(s, dim(s), dim(s), 1);
  }
  record_pair(tr, p);
  tr.assume("A is T-EP", is_t_ep(p.a, p.t, tol));
  tr.require("A is T-normal", is_t_normal(p.a, p.t, tol));
}

void law_tep_implies_ep_false(Trial& tr, Sampler& s) {
  const Tolerance& tol = tr.tol();
  Pair p;
  if (tr.fixed_case()) {
    p = fixture_pairs()[0];
  } else {
    const Index n = dim(s, 1, 7);
    p = forward_t_ep(s, n, n, 1);
  }
  record_pair(tr, p);
  tr.assume("A is T-EP", is_t_ep(p.a, p.t, tol));
  tr.require("A is EP", is_ep(p.a, tol));
}

// ---------------------------------------------------------------------------

const std::vector<LawDef>& definitions() {
  static const std::vector<LawDef> defs = {
      {{"TH-implies-TN",
        "A = TA*T implies A = TT*A = AT*T and AA*T = TA*A; T-normal implies T-EP",
        "symmetrized A = (M + TM*T)/2 with M = TT*M0T*T; T-normal A = U diag(N,0) U*T with N normal",
        {"T-hermitian implies T-normal", "T-normal implies T-EP"}},
       law_th_implies_tn},
      {{"CHAR6",
        "the six descriptions of T-EP agree; A = TT*A and A = AT*T each have four equivalent forms",
        "trial 0 fixed examples; even trials T-EP by construction; odd trials generic pairs",
        {"A = TT*A iff R(A) in R(T) iff N(T*) in N(A*) iff pinv(A) = pinv(A)TT*",
         "A = AT*T iff N(T) in N(A) iff R(A*) in R(T*) iff pinv(A) = T*T pinv(A)",
         "six equivalent descriptions of T-EP",
         "T-EP implies A = TT*A and rank(A) = rank(TA*T) = rank(TA*) = rank(A*T)"}},
       law_char6},
      {{"PINV-CHAR", "A is T-EP iff TA+A = AA+T and A = AT*T (or any equivalent form of A = AT*T)",
        "trial 0 fixed examples; even trials T-EP by construction; odd trials generic pairs",
        {"T-EP iff TA+A = AA+T and A = AT*T",
         "T-EP iff TA+A = AA+T and any equivalent form of A = AT*T"}},
       law_pinv_char},
      {{"DUALITY", "A is T-EP iff A* is T*-EP iff pinv(A) is T*-EP; T-EP gives nine pinv identities",
        "trial 0 fixed examples; even trials T-EP by construction; odd trials generic pairs",
        {"A T-EP iff A* T*-EP iff pinv(A) T*-EP",
         "T-EP: pinv(T*A) = pinv(A)T, pinv(AT*) = Tpinv(A), pinv(T*AT*) = Tpinv(A)T",
         "T-EP: pinv(TA*), pinv(A*T), pinv(TA*T), pinv(Tpinv(A)), pinv(pinv(A)T), pinv(Tpinv(A)T)"}},
       law_duality},
      {{"EPPROD", "A is T-EP iff AT* (equivalently TA*, TA+) is EP and A = AT*T",
        "trial 0 fixed examples; even trials T-EP by construction; odd trials generic pairs",
        {"T-EP iff AT*, TA* or TA+ is EP and A = AT*T"}},
       law_epprod},
      {{"CANON-RECT",
        "T-EP iff A = U diag(D,0) U*T with T = U diag(T1,T4) V* iff A = ET, TT*E = E, E EP",
        "canonical-form draws, EP-factor draws, and generic non-T-EP draws that must be rejected",
        {"singular value decomposition", "rectangular canonical form",
         "EP factor E with A = ET and TT*E = E", "ETT* = E", "pinv(A) = T* pinv(E)",
         "pinv(A) = T*U diag(inv(D),0) U*", "T*A = R diag(D,0) R* with R = T*U a partial isometry",
         "every partial isometry T is T-EP"}},
       law_canon_rect},
      {{"CANON-SQ",
        "square T-EP iff A = U diag(D,0) U*T with T1T1* + T2T2* = I, T3T1* + T4T2* = 0 iff A = CT",
        "square canonical-form draws, EP-factor draws, generic non-T-EP draws",
        {"Hartwig-Spindelbock decomposition", "pseudoinverse and range projector in HS form",
         "square canonical form with EP factor C and CTT* = C",
         "TT* = U diag(I,Z) U* with Z hermitian"}},
       law_canon_sq},
      {{"PEARL", "A is EP iff A = U diag(D,0) U*; EP iff I-EP",
        "even trials Pearl-form matrices; odd trials generic low-rank square matrices",
        {"A is EP iff A = U diag(D,0) U* with D nonsingular",
         "at T = I the T-EP definition is EP; every EP matrix is I-EP"}},
       law_pearl},
      {{"EP-AND-AAstar", "A EP and AA* T-EP imply A T-EP; AA* may be replaced by AA+",
        "A = U diag(D,0) U*, T = U diag(T1,T4) U*; odd trials random EP A and partial isometry T",
        {"A EP and AA* T-EP imply A T-EP", "AA* may be replaced by AA+"}},
       law_ep_and_aastar},
      {{"T-UNITARY", "for unitary T the seven descriptions of T-EP agree; then pinv(AT) = T*pinv(A) etc.",
        "T random unitary; A = ET with E EP or A generic low rank",
        {"unitary T: seven equivalent descriptions and pinv(AT), pinv(TA), pinv(TAT)"}},
       law_t_unitary},
      {{"T-INVOL-HERM", "for T = T* = inv(T) the thirteen descriptions of T-EP agree",
        "T = W diag(+-1) W*; A = ET with E EP or A generic low rank",
        {"involutory hermitian T: thirteen equivalent descriptions"}},
       law_t_invol_herm},
      {{"T-PROJECTOR",
        "for an orthogonal projector T: T-EP iff A (A*, A+) EP and A = AT; then AT, TA, TAT are EP and T-EP",
        "A EP with range in R(T), or A = MT, TMT, M",
        {"orthogonal projector T: four equivalent descriptions; AT, TA, TAT EP and T-EP"}},
       law_t_projector},
      {{"T-NORMAL-PINV",
        "normal partial isometry T: A = TT*A gives pinv(TA) = pinv(A)T*; A = AT*T gives pinv(AT) = T*pinv(A); T-EP gives pinv(A) = pinv(TA)T = T pinv(AT)",
        "T = W diag(phases,0) W*; A = TT*M, A = MT*T, and A = ET with E EP in R(T)",
        {"normal T: pinv(TA) = pinv(A)T* and pinv(AT) = T*pinv(A)",
         "normal T and A T-EP: pinv(A) = pinv(TA)T = T pinv(AT)"}},
       law_t_normal_pinv},
      {{"T-HERM-SQ", "hermitian partial isometry T: T-EP iff TA EP and A = AT^2 = T^2A",
        "T = W diag(+-1,0) W*; A = ET with E EP in R(T), or A = T^2MT^2, MT^2, M",
        {"hermitian partial isometry T: T-EP iff TA EP and A = AT^2 = T^2A"}},
       law_t_herm_sq},
      {{"COMMUTE", "A commuting with T*: T-EP iff A EP and A = AT*T",
        "T scalar on invariant blocks, A block diagonal in the same basis",
        {"A and T* commute: T-EP iff A EP and A = AT*T"}},
       law_commute},
      {{"SUM-ANTICOMM", "A, B T-EP with A*B + B*A = 0 imply A + B T-EP",
        "shared-block pairs with A*B skew-hermitian, B = icA, and star-orthogonal pairs",
        {"A*B + B*A = 0 implies A + B T-EP"}},
       law_sum_anticomm},
      {{"SUM-AstarB0", "A, B T-EP with A*B = 0 imply A + B T-EP",
        "EP factors on orthogonal subspaces of R(T) in general position",
        {"A*B = 0 implies A + B T-EP"}},
       law_sum_astar_b0},
      {{"SUM-BAstar0", "A, B T-EP with BA* = 0 imply A + B T-EP",
        "EP factors on orthogonal subspaces of R(T) in general position",
        {"BA* = 0 implies A + B T-EP"}},
       law_sum_bastar0},
      {{"SUM-STARORTH", "star-orthogonal T-EP A, B give A + B T-EP",
        "star_orthogonal_pair: coordinate blocks of a shared U and T",
        {"star-orthogonal T-EP summands", "star-orthogonality of A*,B*; AT*,BT*; TA*,TB*"}},
       law_sum_starorth},
      {{"SUM-RANGE-DISJOINT", "A, B T-EP with R(A) and R(B) intersecting trivially give A + B T-EP",
        "EP factors on independent subspaces of R(T)",
        {"R(A) and R(B) intersect trivially implies A + B T-EP"}},
       law_sum_range_disjoint},
      {{"SUM-RANGEstar-DISJOINT",
        "A, B T-EP with R(A*) and R(B*) intersecting trivially give A + B T-EP",
        "adjoints of range-disjoint summands for T*",
        {"R(A*) and R(B*) intersect trivially implies A + B T-EP"}},
       law_sum_rangestar_disjoint},
      {{"SUM-RANKCOND",
        "A, B T-EP with rank(T(A+B)*T) = rank(A+B) and R(A+B) = R(A) + R(B) give A + B T-EP",
        "overlapping, range-disjoint, and star-orthogonal summands",
        {"rank condition implies A + B T-EP"}},
       law_sum_rankcond},
      {{"REMARK-STARORTH-RANK",
        "star-orthogonal T-EP A, B satisfy rank(T(A+B)*T) = rank(A+B) and R(A+B) = R(A) + R(B)",
        "star-orthogonal pairs, coordinate and general position",
        {"star-orthogonal summands satisfy the rank condition"}},
       law_remark_starorth_rank},
      {{"TEP-implies-TN-FALSE", "T-EP does not imply T-normal",
        "trial 0 the shift example; then random T-EP pairs",
        {"a T-EP matrix that is not T-normal"},
        true},
       law_tep_implies_tn_false},
      {{"TEP-implies-EP-FALSE", "T-EP does not imply EP",
        "trial 0 the T-hermitian non-EP example; then random square T-EP pairs",
        {"a T-hermitian (so T-EP) matrix that is not EP"},
        true},
       law_tep_implies_ep_false},
  };
  return defs;
}

const LawDef& definition(std::string_view id) {
  for (const LawDef& d : definitions()) {
    if (d.info.id == id) return d;
  }
  throw UsageError("unregistered law id '" + std::string(id) + "'");
}

struct TrialRecord {
  bool failed = false;
  std::size_t regenerated = 0;
  std::size_t agreement_checks = 0;
  double max_residual = 0.0;
  LawFailure failure;
};

TrialRecord run_trial(const LawDef& def, std::size_t index, std::uint64_t seed,
                      const Tolerance& tol) {
  TrialRecord rec;
  const std::uint64_t trial_seed = derive_seed(seed, index);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t attempt_seed = derive_seed(trial_seed, static_cast<std::uint64_t>(attempt));
    Sampler sampler(attempt_seed);
    Trial tr(tol, index, attempt, def.info.negative);
    std::string error;
    try {
      def.run(tr, sampler);
    } catch (const Rejected&) {
      ++rec.regenerated;
      continue;
    } catch (const DomainError& e) {
      error = e.what();
      tr.residuals().emplace_back("error", e.residual());
    } catch (const Error& e) {
      error = e.what();
    }
    rec.agreement_checks = tr.agreement_checks();
    rec.max_residual = tr.max_residual();
    if (!error.empty() || tr.failed()) {
      rec.failed = true;
      rec.failure.trial = index;
      rec.failure.seed = attempt_seed;
      rec.failure.reason = error.empty() ? tr.failure() : "error: " + error;
      rec.failure.residuals = std::move(tr.residuals());
      rec.failure.witnesses = std::move(tr.witnesses());
    }
    return rec;
  }
  rec.failed = true;
  rec.failure.trial = index;
  rec.failure.seed = trial_seed;
  rec.failure.reason = "no admissible instance after " + std::to_string(kMaxAttempts) + " draws";
  return rec;
}

}  // namespace

const std::vector<LawInfo>& law_registry() {
  static const std::vector<LawInfo> infos = [] {
    std::vector<LawInfo> out;
    for (const LawDef& d : definitions()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

const LawInfo& law_info(std::string_view id) { return definition(id).info; }

LawReport check_law(std::string_view id, std::size_t trials, std::uint64_t seed,
                    const Tolerance& tol, unsigned threads) {
  tol.validate();
  const LawDef& def = definition(id);
  std::vector<TrialRecord> records(trials);

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < trials; ++i) records[i] = run_trial(def, i, seed, tol);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < trials; i += workers) records[i] = run_trial(def, i, seed, tol);
      });
    }
  }

  LawReport report;
  report.law_id = def.info.id;
  report.negative = def.info.negative;
  report.trials_run = trials;
  for (TrialRecord& rec : records) {
    report.regenerated += rec.regenerated;
    report.agreement_checks += rec.agreement_checks;
    if (rec.failed) {
      report.failures.push_back(std::move(rec.failure));
    } else {
      ++report.passes;
      report.max_residual = std::max(report.max_residual, rec.max_residual);
    }
  }
  return report;
}

std::vector<LawReport> check_all_laws(std::size_t trials, std::uint64_t seed, const Tolerance& tol,
                                      unsigned threads) {
  std::vector<LawReport> out;
  for (const LawDef& d : definitions()) out.push_back(check_law(d.info.id, trials, seed, tol, threads));
  return out;
}

}  // namespace tepkit
