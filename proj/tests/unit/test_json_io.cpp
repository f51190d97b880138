#include <gtest/gtest.h>

#include "tepkit/fixtures.hpp"
#include "tepkit/json_io.hpp"

using namespace tepkit;

namespace {

std::string input_error(const std::string& text) {
  try {
    io::matrix_from_json(nlohmann::json::parse(text));
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(MatrixJson, RoundTripIsExact) {
  Sampler s(3);
  const CMatrix a = s.gaussian(3, 5);
  const auto text = io::dump(io::to_json(a));
  EXPECT_EQ(io::matrix_from_json(nlohmann::json::parse(text)), a);
}

TEST(MatrixJson, RowMajorLayout) {
  const CMatrix a = from_rows({{1, Complex(2, -1)}, {3, 4}});
  const auto j = io::to_json(a);
  EXPECT_EQ(j["rows"], 2);
  EXPECT_EQ(j["cols"], 2);
  EXPECT_EQ(j["data"][1][0], 2.0);
  EXPECT_EQ(j["data"][1][1], -1.0);
  EXPECT_EQ(j["data"][2][0], 3.0);
}

TEST(MatrixJson, FixtureFilesMatchBuiltins) {
  const std::string dir = TEPKIT_FIXTURE_DIR;
  EXPECT_EQ(io::read_matrix(dir + "/E1.T.json"), fixtures::skip_isometry());
  EXPECT_EQ(io::read_matrix(dir + "/E2.A.json"), fixtures::t_hermitian_not_ep());
  EXPECT_EQ(io::read_matrix(dir + "/E3.A.json"), fixtures::t_ep_not_t_normal());
  EXPECT_EQ(io::read_matrix(dir + "/E3.T.json"), fixtures::shift_isometry());
}

TEST(MatrixJson, ErrorsNameTheField) {
  EXPECT_NE(input_error(R"({"cols":1,"data":[[1,0]]})").find("'rows'"), std::string::npos);
  EXPECT_NE(input_error(R"({"rows":1,"cols":-2,"data":[]})").find("'cols'"), std::string::npos);
  EXPECT_NE(input_error(R"({"rows":1,"cols":2,"data":[[1,0]]})").find("'data'"), std::string::npos);
  EXPECT_NE(input_error(R"({"rows":1,"cols":2,"data":[[1,0],[1]]})").find("data[1]"), std::string::npos);
  EXPECT_NE(input_error(R"({"rows":1,"cols":1,"data":[["x",0]]})").find("data[0]"), std::string::npos);
  EXPECT_NE(input_error(R"([1,2])").find("object"), std::string::npos);
}

TEST(MatrixJson, MissingFileAndBadJson) {
  EXPECT_THROW(io::read_matrix("/nonexistent/matrix.json"), InputError);
}

TEST(ReportJson, ClassificationShape) {
  const auto j = io::to_json(classify(fixtures::t_hermitian_not_ep(), fixtures::skip_isometry()));
  EXPECT_TRUE(j["t_ep"]["holds"].get<bool>());
  EXPECT_FALSE(j["ep"]["holds"].get<bool>());
  EXPECT_TRUE(j["t_ep"]["via"].contains("C3"));
  EXPECT_TRUE(j["t_ep"]["via"].contains("EPPROD-TApinv"));
  EXPECT_TRUE(j["t_normal"].contains("residual"));
  EXPECT_FALSE(j["inconsistent"].get<bool>());
}

TEST(ReportJson, CanonicalAndDecompositionShape) {
  const auto form = tep_canonical_square(fixtures::t_ep_not_t_normal(), fixtures::shift_isometry());
  const auto j = io::to_json(form);
  EXPECT_EQ(j["kind"], "square");
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(io::matrix_from_json(nlohmann::json::parse(j["d"].dump())), form.d);

  const auto s = io::to_json(svd(fixtures::skip_isometry()));
  EXPECT_EQ(s["rank"], 2);
  EXPECT_EQ(s["sigma"].size(), 3u);
  const auto hs = io::to_json(hs_decompose(fixtures::t_ep_not_t_normal()));
  EXPECT_EQ(hs["rank"], 2);
}

TEST(ReportJson, LawReportShape) {
  const auto j = io::to_json(check_law("TEP-implies-TN-FALSE", 2, 0));
  EXPECT_EQ(j["law_id"], "TEP-implies-TN-FALSE");
  EXPECT_TRUE(j["negative"].get<bool>());
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["trials_run"], 2);
  ASSERT_FALSE(j["failures"].empty());
  const auto& f = j["failures"][0];
  EXPECT_TRUE(f["witnesses"].contains("A"));
  EXPECT_TRUE(f["witnesses"].contains("T"));
  EXPECT_TRUE(f.contains("seed"));
}
