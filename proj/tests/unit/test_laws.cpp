#include <set>

#include <gtest/gtest.h>

#include "tepkit/json_io.hpp"
#include "tepkit/laws.hpp"

using namespace tepkit;

namespace {

const std::vector<std::string> kPositive = {
    "TH-implies-TN", "CHAR6",        "PINV-CHAR",          "DUALITY",
    "EPPROD",        "CANON-RECT",   "CANON-SQ",           "PEARL",
    "EP-AND-AAstar", "T-UNITARY",    "T-INVOL-HERM",       "T-PROJECTOR",
    "T-NORMAL-PINV", "T-HERM-SQ",    "COMMUTE",            "SUM-ANTICOMM",
    "SUM-AstarB0",   "SUM-BAstar0",  "SUM-STARORTH",       "SUM-RANGE-DISJOINT",
    "SUM-RANGEstar-DISJOINT", "SUM-RANKCOND", "REMARK-STARORTH-RANK"};

const std::vector<std::string> kNegative = {"TEP-implies-TN-FALSE", "TEP-implies-EP-FALSE"};

}  // namespace

TEST(Registry, ContainsEveryLawOnce) {
  const auto& reg = law_registry();
  ASSERT_EQ(reg.size(), kPositive.size() + kNegative.size());
  std::set<std::string> ids;
  std::set<std::string> covered;
  for (const LawInfo& info : reg) {
    EXPECT_TRUE(ids.insert(info.id).second) << "duplicate id " << info.id;
    EXPECT_FALSE(info.statement.empty()) << info.id;
    EXPECT_FALSE(info.hypothesis.empty()) << info.id;
    EXPECT_FALSE(info.covers.empty()) << info.id;
    for (const auto& c : info.covers) EXPECT_TRUE(covered.insert(c).second) << "result listed twice: " << c;
  }
  for (const auto& id : kPositive) EXPECT_FALSE(law_info(id).negative) << id;
  for (const auto& id : kNegative) EXPECT_TRUE(law_info(id).negative) << id;
}

TEST(Registry, UnknownIdIsUsageError) {
  EXPECT_THROW(law_info("NOPE"), UsageError);
  EXPECT_THROW(check_law("NOPE", 1, 0), UsageError);
}

TEST(CheckLaw, DocumentedExamples) {
  for (const char* id : {"TH-implies-TN", "SUM-STARORTH", "T-NORMAL-PINV"}) {
    const LawReport r = check_law(id, 200, 0);
    EXPECT_EQ(r.passes, 200u) << id;
    EXPECT_TRUE(r.failures.empty()) << id << ": " << r.failures.front().reason;
  }
  const LawReport pearl = check_law("PEARL", 100, 0);
  EXPECT_EQ(pearl.passes, 100u);
  EXPECT_GT(pearl.agreement_checks, 0u);
}

TEST(CheckLaw, PassesPlusFailuresIsTrials) {
  for (const auto& info : law_registry()) {
    const LawReport r = check_law(info.id, 12, 3);
    EXPECT_EQ(r.passes + r.failures.size(), r.trials_run) << info.id;
    EXPECT_EQ(r.trials_run, 12u);
    EXPECT_TRUE(r.ok()) << info.id;
  }
}

TEST(CheckLaw, NegativeLawsFindTheFixedCounterexampleAtTrialZero) {
  for (const auto& id : kNegative) {
    const LawReport r = check_law(id, 1, 0);
    ASSERT_EQ(r.failures.size(), 1u) << id;
    EXPECT_EQ(r.failures[0].trial, 0u);
    EXPECT_FALSE(r.failures[0].witnesses.empty());
    EXPECT_TRUE(r.ok());
  }
}

TEST(CheckLaw, ReportIndependentOfThreadCount) {
  for (const char* id : {"CHAR6", "SUM-RANKCOND", "TEP-implies-EP-FALSE"}) {
    const std::string one = io::dump(io::to_json(check_law(id, 40, 17, {}, 1)));
    const std::string many = io::dump(io::to_json(check_law(id, 40, 17, {}, 4)));
    EXPECT_EQ(one, many) << id;
  }
}

TEST(CheckLaw, SeedChangesTheDraws) {
  const LawReport a = check_law("CANON-RECT", 20, 1);
  const LawReport b = check_law("CANON-RECT", 20, 2);
  EXPECT_NE(a.max_residual, b.max_residual);
}

TEST(CheckLaw, ZeroToleranceExposesFailuresWithWitnesses) {
  // With zero thresholds no floating point identity holds; the engine must
  // report failures rather than silently pass.
  const Tolerance zero{1e-10, 0.0, 0.0};
  const LawReport r = check_law("CANON-RECT", 6, 0, zero);
  ASSERT_FALSE(r.failures.empty());
  EXPECT_FALSE(r.ok());
  const LawFailure& f = r.failures.front();
  EXPECT_FALSE(f.reason.empty());
  EXPECT_FALSE(f.residuals.empty());
  EXPECT_FALSE(f.witnesses.empty());
}

TEST(CheckLaw, InvalidToleranceRejected) {
  EXPECT_THROW(check_law("CHAR6", 1, 0, Tolerance{-1.0, 0.0, 0.0}), UsageError);
}

TEST(CheckAllLaws, RunsRegistryInOrder) {
  const auto reports = check_all_laws(4, 5);
  ASSERT_EQ(reports.size(), law_registry().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i].law_id, law_registry()[i].id);
    EXPECT_TRUE(reports[i].ok()) << reports[i].law_id;
  }
}
