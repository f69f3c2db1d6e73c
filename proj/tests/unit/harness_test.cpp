#include <gtest/gtest.h>

#include <json.hpp>

#include "chainpaths/harness.hpp"

namespace chainpaths {
namespace {

// Reduced caps; the acceptance binary runs the defaults.
SuiteCaps small_caps() {
  SuiteCaps caps;
  caps.orders = 5;
  caps.bijection = 5;
  caps.fgj = 5;
  caps.semigroup = 3;
  caps.phi = 4;
  caps.idempotents = 5;
  caps.shape = 4;
  caps.brute_tp = 4;
  caps.consistency = 15;
  return caps;
}

TEST(Harness, CleanRunPasses) {
  const auto report = verify_all(small_caps());
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.failure_count(), 0u);
  for (const auto& c : report.checks) {
    EXPECT_NE(c.status, CheckStatus::fail) << c.check_id << ": " << c.counterexample.value_or("");
    EXPECT_LE(c.n_lo, c.n_hi) << c.check_id;
  }
}

TEST(Harness, ReportListsEverySuite) {
  const auto report = verify_all(small_caps());
  for (const char* id : {"orders.pc", "orders.del", "paths.subdiagonal", "bijection.map_roundtrip",
                         "bijection.worked_examples", "fgj.j_po", "semigroup.closure.qp", "semigroup.q_qp_product_sets",
                         "semigroup.phi_q_bijection", "idempotents.pc_total", "idempotents.path_shape_po",
                         "consistency.delannoy_symmetry"}) {
    EXPECT_NE(report.find(id), nullptr) << id;
  }
  EXPECT_EQ(report.find("no.such.check"), nullptr);
}

TEST(Harness, IdempotentPathShapeIsReportedAsAmbiguity) {
  const auto report = verify_idempotents(4, 4, 3);
  const auto* shape = report.find("idempotents.path_shape_po");
  ASSERT_NE(shape, nullptr);
  EXPECT_EQ(shape->status, CheckStatus::paper_ambiguity);
  ASSERT_TRUE(shape->counterexample.has_value());
  EXPECT_NE(shape->counterexample->find("VHHV"), std::string::npos);
  EXPECT_TRUE(report.all_passed());
}

TEST(Harness, PerturbedFormulaFails) {
  const auto report = verify_orders(4, {Fixture::perturb_r});
  EXPECT_FALSE(report.all_passed());
  const auto* pc = report.find("orders.pc");
  ASSERT_NE(pc, nullptr);
  EXPECT_EQ(pc->status, CheckStatus::fail);
  ASSERT_TRUE(pc->counterexample.has_value());
  EXPECT_NE(pc->counterexample->find("n=1"), std::string::npos);
  EXPECT_EQ(report.find("orders.c")->status, CheckStatus::pass);
}

TEST(Harness, DroppedEmptyMapFailsProductSets) {
  const auto report = verify_semigroup(3, 3, {Fixture::drop_empty_qp});
  const auto* products = report.find("semigroup.q_qp_product_sets");
  ASSERT_NE(products, nullptr);
  EXPECT_EQ(products->status, CheckStatus::fail);
  EXPECT_TRUE(products->counterexample.has_value());
}

TEST(Harness, JsonDocumentShape) {
  const auto report = verify_orders(3, {Fixture::perturb_r});
  const auto doc = nlohmann::json::parse(report.to_json());
  EXPECT_EQ(doc.at("passed"), false);
  EXPECT_EQ(doc.at("failures").get<std::size_t>(), report.failure_count());
  ASSERT_EQ(doc.at("checks").size(), report.checks.size());
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto& entry = doc["checks"][i];
    const auto& check = report.checks[i];
    EXPECT_EQ(entry.at("check_id"), check.check_id);
    EXPECT_EQ(entry.at("n_range"), nlohmann::json::array({check.n_lo, check.n_hi}));
    EXPECT_EQ(entry.at("status"), std::string(status_name(check.status)));
    EXPECT_EQ(entry.at("counterexample").is_null(), !check.counterexample.has_value());
  }
  EXPECT_EQ(report.to_json(), verify_orders(3, {Fixture::perturb_r}).to_json());
}

TEST(Harness, StatusAndFixtureNames) {
  EXPECT_EQ(status_name(CheckStatus::pass), "pass");
  EXPECT_EQ(status_name(CheckStatus::fail), "fail");
  EXPECT_EQ(status_name(CheckStatus::paper_ambiguity), "paper-ambiguity");
  EXPECT_EQ(parse_fixture("perturb-r"), Fixture::perturb_r);
  EXPECT_EQ(parse_fixture("drop-empty-qp"), Fixture::drop_empty_qp);
  EXPECT_EQ(parse_fixture("none"), Fixture::none);
  EXPECT_FALSE(parse_fixture("other").has_value());
}

TEST(Harness, AppendConcatenates) {
  auto a = verify_orders(2);
  const auto b = verify_consistency(5);
  const auto total = a.checks.size() + b.checks.size();
  a.append(b);
  EXPECT_EQ(a.checks.size(), total);
}

}  // namespace
}  // namespace chainpaths
