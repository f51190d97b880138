#include "tepkit/json_io.hpp"

#include <fstream>

namespace tepkit::io {

namespace {

Index read_dimension(const nlohmann::json& j, const char* field) {
  if (!j.contains(field)) throw InputError(std::string("missing field '") + field + "'");
  const auto& v = j.at(field);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InputError(std::string("field '") + field + "' must be a non-negative integer");
  }
  return static_cast<Index>(v.get<long long>());
}

Json residual_map(const std::vector<std::pair<std::string, double>>& items) {
  Json out = Json::object();
  for (const auto& [name, value] : items) out[name] = value;
  return out;
}

Json predicate_json(const PredicateResult& p) {
  Json out;
  if (p.verdict) {
    out["holds"] = p.verdict->holds;
    out["residual"] = p.verdict->residual;
    out["threshold"] = p.verdict->threshold;
  } else {
    out["holds"] = nullptr;
    out["error"] = p.error;
  }
  return out;
}

}  // namespace

Json to_json(const CMatrix& m) {
  Json data = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) data.push_back({m(i, j).real(), m(i, j).imag()});
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = std::move(data);
  return out;
}

CMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("matrix must be a JSON object");
  const Index rows = read_dimension(j, "rows");
  const Index cols = read_dimension(j, "cols");
  if (!j.contains("data")) throw InputError("missing field 'data'");
  const auto& data = j.at("data");
  if (!data.is_array()) throw InputError("field 'data' must be an array");
  if (static_cast<Index>(data.size()) != rows * cols) {
    throw InputError("field 'data' has " + std::to_string(data.size()) + " entries, expected rows*cols = " +
                     std::to_string(rows * cols));
  }
  CMatrix m(rows, cols);
  for (Index k = 0; k < rows * cols; ++k) {
    const auto& e = data[static_cast<std::size_t>(k)];
    const std::string where = "data[" + std::to_string(k) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw InputError("field '" + where + "' must be a pair [re, im] of numbers");
    }
    m(k / cols, k % cols) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  check_finite(m, "data");
  return m;
}

Json to_json(const Verdict& v) {
  Json out;
  out["holds"] = v.holds;
  out["residual"] = v.residual;
  out["threshold"] = v.threshold;
  return out;
}

Json to_json(const PenroseResiduals& r) {
  Json out;
  out["axa"] = r.axa;
  out["xax"] = r.xax;
  out["ax_hermitian"] = r.ax_herm;
  out["xa_hermitian"] = r.xa_herm;
  out["max"] = r.max();
  return out;
}

Json to_json(const SvdResult& s) {
  Json out;
  out["u"] = to_json(s.u);
  out["v"] = to_json(s.v);
  out["sigma"] = std::vector<double>(s.sigma.data(), s.sigma.data() + s.sigma.size());
  out["rank"] = s.rank;
  return out;
}

Json to_json(const HSDecomposition& hs) {
  Json out;
  out["u"] = to_json(hs.u);
  out["k"] = to_json(hs.k);
  out["l"] = to_json(hs.l);
  std::vector<double> sigma;
  for (Index i = 0; i < hs.r; ++i) sigma.push_back(hs.sigma_block(i, i).real());
  out["sigma"] = sigma;
  out["rank"] = hs.r;
  return out;
}

Json to_json(const ClassificationReport& report) {
  Json out;
  for (const auto& [name, p] : report.predicates()) {
    Json entry = predicate_json(*p);
    Json via = Json::object();
    if (name == "t_ep") {
      for (const auto& [route, vote] : report.votes) via[std::string(to_string(route))] = predicate_json(vote);
    }
    entry["via"] = std::move(via);
    out[name] = std::move(entry);
  }
  out["inconsistent"] = report.inconsistent;
  out["inconsistencies"] = report.inconsistencies;
  return out;
}

Json to_json(const TepCanonical& form) {
  Json out;
  out["kind"] = std::string(to_string(form.kind));
  out["rank"] = form.rank;
  out["u"] = to_json(form.u);
  out["d"] = to_json(form.d);
  out["v"] = to_json(form.v);
  out["t1"] = to_json(form.t1);
  out["t2"] = to_json(form.t2);
  out["t3"] = to_json(form.t3);
  out["t4"] = to_json(form.t4);
  out["ep_factor"] = to_json(form.ep_factor);
  return out;
}

Json to_json(const Witness& w) {
  Json out = Json::object();
  for (const auto& [name, m] : w.parts) out[name] = to_json(m);
  return out;
}

Json to_json(const LawInfo& info) {
  Json out;
  out["id"] = info.id;
  out["statement"] = info.statement;
  out["hypothesis"] = info.hypothesis;
  out["covers"] = info.covers;
  out["negative"] = info.negative;
  return out;
}

Json to_json(const LawReport& report) {
  Json failures = Json::array();
  for (const LawFailure& f : report.failures) {
    Json entry;
    entry["trial"] = f.trial;
    entry["seed"] = f.seed;
    entry["reason"] = f.reason;
    entry["residuals"] = residual_map(f.residuals);
    Json witnesses = Json::object();
    for (const auto& [name, m] : f.witnesses) witnesses[name] = to_json(m);
    entry["witnesses"] = std::move(witnesses);
    failures.push_back(std::move(entry));
  }
  Json out;
  out["law_id"] = report.law_id;
  out["negative"] = report.negative;
  out["ok"] = report.ok();
  out["trials_run"] = report.trials_run;
  out["passes"] = report.passes;
  out["max_residual"] = report.max_residual;
  out["agreement_checks"] = report.agreement_checks;
  out["regenerated"] = report.regenerated;
  out["failures"] = std::move(failures);
  return out;
}

CMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  try {
    return matrix_from_json(j);
  } catch (const InputError& e) {
    throw InputError("'" + path.string() + "': " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tepkit::io
