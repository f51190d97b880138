#pragma once

// JSON (de)serialization for matrices and result types. Matrices use
//   {"rows": m, "cols": n, "data": [[re, im], ...]}
// with data row-major. Output objects keep a fixed key order so that repeated
// runs produce byte-identical text.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tepkit/canonical.hpp"
#include "tepkit/decompositions.hpp"
#include "tepkit/generators.hpp"
#include "tepkit/laws.hpp"
#include "tepkit/matrix_classes.hpp"
#include "tepkit/matrix_core.hpp"

namespace tepkit::io {

using Json = nlohmann::ordered_json;

Json to_json(const CMatrix& m);
// Throws InputError naming the offending field.
CMatrix matrix_from_json(const nlohmann::json& j);

Json to_json(const Verdict& v);
Json to_json(const PenroseResiduals& r);
Json to_json(const SvdResult& s);
Json to_json(const HSDecomposition& hs);
Json to_json(const ClassificationReport& report);
Json to_json(const TepCanonical& form);
Json to_json(const Witness& w);
Json to_json(const LawInfo& info);
Json to_json(const LawReport& report);

// Reads and parses a matrix file; InputError on I/O or format problems.
CMatrix read_matrix(const std::filesystem::path& path);
// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace tepkit::io
