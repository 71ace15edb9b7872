#include <doctest.h>

#include <json.hpp>

#include "gndb/balance.hpp"
#include "gndb/enumerate.hpp"
#include "gndb/families.hpp"
#include "gndb/report.hpp"

using namespace gndb;

TEST_CASE("balance_class document: schema, verdicts, determinism") {
  BalanceClass cls = classify(complete_bipartite(2, 6), {3});
  std::string doc = report_serialize(cls, /*with_edges=*/true);
  CHECK(doc == report_serialize(cls, true));  // byte-identical reruns

  auto j = nlohmann::json::parse(doc);
  CHECK(j["schema_version"] == 1);
  CHECK(j["type"] == "balance_class");
  CHECK(j["n"] == 8);
  CHECK(j["db"] == false);
  REQUIRE(j["per_k"].size() == 1);
  CHECK(j["per_k"][0]["k"] == 3);
  CHECK(j["per_k"][0]["gdb"] == true);
  CHECK(j["per_k"][0]["gndb_gamma"] == 2);
  REQUIRE(j["edges"].size() == 12);
  CHECK(j["edges"][0]["w_ab"].is_number());
}

TEST_CASE("scan_report document: schema and empty-scan shape") {
  ScanOptions opts;
  opts.n_max = 1;
  ScanReport report = scan(opts);
  std::string doc = report_serialize(report);
  CHECK(doc == report_serialize(report));

  auto j = nlohmann::json::parse(doc);
  CHECK(j["schema_version"] == 1);
  CHECK(j["type"] == "scan_report");
  CHECK(j["corpus_size"] == nlohmann::json::array({1}));
  CHECK(j["matches"].empty());
  CHECK(j["violations"].empty());
  // machine output carries no wall times
  CHECK(doc.find("elapsed") == std::string::npos);
}

TEST_CASE("violation certificates serialize with their edge witness") {
  ScanReport report;
  report.n_max = 4;
  report.ks = {3};
  Violation with_edge{"CF", "gndb_degree_ratio", 3, 0, 2, "demo"};
  Violation graph_level{"CF", "gndb_bipartite", 3, -1, -1, "demo"};
  report.violations = {with_edge, graph_level};

  auto j = nlohmann::json::parse(report_serialize(report));
  CHECK(j["violations"][0]["edge"] == nlohmann::json::array({0, 2}));
  CHECK(j["violations"][1]["edge"].is_null());
  std::string text = render_summary(report);
  CHECK(text.find("edge (0,2)") != std::string::npos);
}

TEST_CASE("machine documents are deterministic across separate runs") {
  ScanOptions opts;
  opts.n_max = 5;
  std::string a = report_serialize(scan(opts));
  std::string b = report_serialize(scan(opts));
  CHECK(a == b);
}

TEST_CASE("human summaries name the verdicts") {
  std::string text = render_summary(classify(complete_bipartite(2, 6), {3}));
  CHECK(text.find("3-GNDB with gamma=2") != std::string::npos);
  std::string c6 = render_summary(classify(cycle(6), {1}));
  CHECK(c6.find("NDB with gamma=3") != std::string::npos);
}
