#include <doctest.h>

#include "t5census/census.hpp"
#include "t5census/reports.hpp"

using namespace t5census;

namespace {
TripleSystem make_t5() { return TripleSystem(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {2, 3, 4}}); }
}  // namespace

TEST_CASE("format parsing") {
  CHECK(parse_format("json") == ReportFormat::Json);
  CHECK(parse_format("csv") == ReportFormat::Csv);
  CHECK(parse_format("text") == ReportFormat::Text);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("emission is deterministic and keys are sorted") {
  ConfigEcho cfg = {{"subcommand", "check"}, {"input", "x.txt"}};
  Report a = check_report(make_t5(), kPartitionSweepCap, cfg);
  Report b = check_report(make_t5(), kPartitionSweepCap, cfg);
  for (ReportFormat f : {ReportFormat::Json, ReportFormat::Csv, ReportFormat::Text}) {
    CHECK(emit_report(a, f) == emit_report(b, f));
    CHECK(emit_report(a, f) == emit_report(a, f));
  }
  std::string js = emit_report(a, ReportFormat::Json);
  CHECK(js.find("\"config\"") < js.find("\"contains_t5\""));
  CHECK(js.find("\"contains_t5\"") < js.find("\"edge_count\""));
  CHECK(js.back() == '\n');
}

TEST_CASE("check report contents") {
  Report r = check_report(make_t5(), kPartitionSweepCap, {});
  CHECK(r.body["contains_t5"] == true);
  CHECK(r.body["independent_neighborhoods"] == false);
  CHECK(r.body["semibipartite"] == false);
  CHECK(r.body["t5_witness"].is_object());

  // past the sweep cap the partition answer is withheld, not guessed
  Report big = check_report(TripleSystem(30), kPartitionSweepCap, {});
  CHECK(big.body["contains_t5"] == false);
  CHECK(big.body["semibipartite"].is_null());

  std::string text = emit_report(r, ReportFormat::Text);
  CHECK(text.find("claim: ") != std::string::npos);
  CHECK(text.find("contains_t5: true") != std::string::npos);
}

TEST_CASE("census report and CSV column order") {
  CensusReport c = full_census(4);
  Report r = census_report(c, false, {{"subcommand", "census"}, {"n", "4"}}, false);
  std::string csv = emit_report(r, ReportFormat::Csv);
  CHECK(csv.rfind("n,total,i_n,s_n,extra,", 0) == 0);
  CHECK(csv.find("\n4,16,16,15,1,16,4,") != std::string::npos);
  CHECK(r.body["theorem1_holds"] == true);
  CHECK(r.body["theorem1_margin"] == "65521");
  CHECK(r.body.count("elapsed_seconds") == 0);  // timings are opt-in

  Report timed = census_report(c, false, {}, true);
  CHECK(timed.body.count("elapsed_seconds") == 1);
}

TEST_CASE("partition report contents") {
  Report r = partition_report(make_t5(), kDefaultThresholds, 4, kPartitionSweepCap, {});
  CHECK(r.body["d_h"] == 1);
  CHECK(r.body["total_optimal_partitions"] == 9);
  CHECK(r.body["optimal_partitions"].size() == 4);
  CHECK(r.body["conditions"]["c4"] == false);
}

TEST_CASE("extremal report validates its witness") {
  ExtremalResult e = extremal_search(5);
  Report r = extremal_report(e, {}, false);
  CHECK(r.body["witness_valid"] == true);
  CHECK(r.body["at_least_b3"] == true);
  CHECK(r.body["lower"] == 7);
}

TEST_CASE("csv escaping") {
  Report r;
  r.body["key"] = "a,b \"quoted\"";
  r.body["plain"] = 7;
  r.csv_columns = {"key", "plain"};
  nlohmann::json row;
  row["key"] = "a,b \"quoted\"";
  row["plain"] = 7;
  r.csv_rows = {row};
  std::string csv = emit_report(r, ReportFormat::Csv);
  CHECK(csv == "key,plain\n\"a,b \"\"quoted\"\"\",7\n");
}
