// tepkit: classify, decompose, pinv, generate, verify.
//
// Exit status: 0 ok, 1 law failure, 2 usage or input error, 3 domain
// precondition (or numerical) failure. Errors are reported on stderr as
//   {"error": {"code": ..., "message": ...}}

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tepkit/canonical.hpp"
#include "tepkit/decompositions.hpp"
#include "tepkit/generators.hpp"
#include "tepkit/json_io.hpp"
#include "tepkit/laws.hpp"
#include "tepkit/matrix_classes.hpp"

namespace {

using tepkit::io::Json;

enum Exit { kOk = 0, kLawFailure = 1, kUsage = 2, kDomain = 3 };

struct Options {
  std::optional<double> tol_rank;
  std::optional<double> tol_atol;
  std::optional<double> tol_rtol;
  std::string output;

  std::string a_path;
  std::string t_path;
  bool rect = false;

  std::string kind;
  tepkit::Index rows = 0;
  tepkit::Index cols = 0;
  tepkit::Index rank = 0;
  tepkit::Index rank_b = 0;
  double cond_cap = 100.0;

  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::string law = "all";
  unsigned threads = 1;
};

int report_error(const char* code, const std::string& message, int status,
                 std::optional<double> residual = std::nullopt) {
  Json err;
  err["code"] = code;
  err["message"] = message;
  if (residual) err["residual"] = *residual;
  Json out;
  out["error"] = std::move(err);
  std::cerr << out.dump() << "\n";
  return status;
}

// flag > TEPKIT_TOL_RTOL > default
tepkit::Tolerance resolve_tolerance(const Options& o) {
  tepkit::Tolerance tol;
  if (const char* env = std::getenv("TEPKIT_TOL_RTOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw tepkit::UsageError(std::string("TEPKIT_TOL_RTOL is not a number: '") + env + "'");
    }
    tol.eq_rtol = v;
  }
  if (o.tol_rank) tol.rank_rtol = *o.tol_rank;
  if (o.tol_atol) tol.eq_atol = *o.tol_atol;
  if (o.tol_rtol) tol.eq_rtol = *o.tol_rtol;
  tol.validate();
  return tol;
}

void emit(const Options& o, const Json& j) {
  const std::string text = tepkit::io::dump(j);
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw tepkit::InputError("cannot write output file '" + o.output + "'");
  out << text;
}

int cmd_classify(const Options& o, const tepkit::Tolerance& tol) {
  const auto a = tepkit::io::read_matrix(o.a_path);
  const auto t = tepkit::io::read_matrix(o.t_path);
  emit(o, tepkit::io::to_json(tepkit::classify(a, t, tol)));
  return kOk;
}

int cmd_decompose(const Options& o, const tepkit::Tolerance& tol) {
  const auto a = tepkit::io::read_matrix(o.a_path);
  const auto t = tepkit::io::read_matrix(o.t_path);
  const bool square = !o.rect && a.rows() == a.cols() && t.rows() == t.cols();
  const auto form = square ? tepkit::tep_canonical_square(a, t, tol) : tepkit::tep_canonical_rect(a, t, tol);
  emit(o, tepkit::io::to_json(form));
  return kOk;
}

int cmd_pinv(const Options& o, const tepkit::Tolerance& tol) {
  const auto a = tepkit::io::read_matrix(o.a_path);
  const auto x = tepkit::pinv(a, tol);
  Json out = tepkit::io::to_json(x);
  out["rank"] = tepkit::rank_of(a, tol);
  out["penrose_residuals"] = tepkit::io::to_json(tepkit::penrose_residuals(a, x));
  emit(o, out);
  return kOk;
}

int cmd_generate(const Options& o) {
  tepkit::GenSpec spec;
  spec.kind = tepkit::parse_gen_kind(o.kind);
  spec.rows = o.rows;
  spec.cols = o.cols > 0 ? o.cols : o.rows;
  spec.rank = o.rank;
  spec.rank_b = o.rank_b;
  spec.seed = o.seed;
  spec.condition_cap = o.cond_cap;
  emit(o, tepkit::io::to_json(tepkit::gen(spec)));
  return kOk;
}

int cmd_verify(const Options& o, const tepkit::Tolerance& tol) {
  if (o.trials == 0) throw tepkit::UsageError("--trials must be positive");
  if (o.law != "all") {
    const auto report = tepkit::check_law(o.law, o.trials, o.seed, tol, o.threads);
    emit(o, tepkit::io::to_json(report));
    return report.ok() ? kOk : kLawFailure;
  }
  const auto reports = tepkit::check_all_laws(o.trials, o.seed, tol, o.threads);
  bool ok = true;
  Json laws = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    laws.push_back(tepkit::io::to_json(r));
  }
  Json out;
  out["seed"] = o.seed;
  out["trials"] = o.trials;
  out["ok"] = ok;
  out["laws"] = std::move(laws);
  emit(o, out);
  return ok ? kOk : kLawFailure;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Relative EP (T-EP) matrix toolkit"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--tol-rank", o.tol_rank, "relative singular value cutoff for rank");
  app.add_option("--tol-atol", o.tol_atol, "absolute equality tolerance");
  app.add_option("--tol-rtol", o.tol_rtol, "relative equality tolerance (env TEPKIT_TOL_RTOL)");
  app.add_option("-o,--output", o.output, "output file (default stdout)");

  auto* classify = app.add_subcommand("classify", "classify A relative to the partial isometry T");
  classify->add_option("A", o.a_path, "matrix JSON file")->required();
  classify->add_option("T", o.t_path, "matrix JSON file")->required();

  auto* decompose = app.add_subcommand("decompose", "canonical form of a T-EP matrix");
  decompose->add_option("A", o.a_path, "matrix JSON file")->required();
  decompose->add_option("T", o.t_path, "matrix JSON file")->required();
  decompose->add_flag("--rect", o.rect, "use the rectangular form for square inputs");

  auto* pinv = app.add_subcommand("pinv", "Moore-Penrose inverse with Penrose residuals");
  pinv->add_option("A", o.a_path, "matrix JSON file")->required();

  auto* generate = app.add_subcommand("generate", "seeded structured random matrices");
  generate->add_option("--kind", o.kind, "generator kind")->required();
  generate->add_option("--rows", o.rows, "row count")->required();
  generate->add_option("--cols", o.cols, "column count (default: rows)");
  generate->add_option("--rank", o.rank, "rank of the generated matrix");
  generate->add_option("--rank-b", o.rank_b, "rank of B (star_orthogonal_pair)");
  generate->add_option("--seed", o.seed, "random seed");
  generate->add_option("--cond-cap", o.cond_cap, "condition number cap for nonsingular cores");

  auto* verify = app.add_subcommand("verify", "run randomized law checks");
  verify->add_option("--law", o.law, "law id or 'all'");
  verify->add_option("--trials", o.trials, "trials per law");
  verify->add_option("--seed", o.seed, "master seed");
  verify->add_option("--threads", o.threads, "worker threads (output does not depend on it)");

  // Global options are also accepted after the subcommand name.
  for (auto* sub : {classify, decompose, pinv, generate, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), kUsage);
  }

  try {
    if (*generate) return cmd_generate(o);
    const tepkit::Tolerance tol = resolve_tolerance(o);
    if (*classify) return cmd_classify(o, tol);
    if (*decompose) return cmd_decompose(o, tol);
    if (*pinv) return cmd_pinv(o, tol);
    return cmd_verify(o, tol);
  } catch (const tepkit::UsageError& e) {
    return report_error("usage", e.what(), kUsage);
  } catch (const tepkit::InputError& e) {
    return report_error("input", e.what(), kUsage);
  } catch (const tepkit::DomainError& e) {
    return report_error("domain", e.what(), kDomain, e.residual());
  } catch (const tepkit::NumericalError& e) {
    return report_error("numerical", e.what(), kDomain);
  } catch (const tepkit::Error& e) {
    return report_error("error", e.what(), kDomain);
  }
}
