#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <string>

#include "json.hpp"
#include "rgsched.h"

using nlohmann::json;

namespace {

struct StringDeleter {
  void operator()(char* s) const { rg_string_free(s); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

struct InstanceDeleter {
  void operator()(rg_instance* p) const { rg_instance_free(p); }
};
using InstancePtr = std::unique_ptr<rg_instance, InstanceDeleter>;

struct ScheduleDeleter {
  void operator()(rg_schedule* p) const { rg_schedule_free(p); }
};
using SchedulePtr = std::unique_ptr<rg_schedule, ScheduleDeleter>;

const char* kPair = R"({"jobs": [
  {"atoms": [["1", "1/2"], ["2", "1/2"]]},
  {"atoms": [["1", "1/2"], ["2", "1/2"]]}
]})";

InstancePtr load(const char* text) {
  rg_instance* inst = nullptr;
  REQUIRE(rg_instance_from_json(text, &inst) == RG_OK);
  return InstancePtr(inst);
}

}  // namespace

TEST_CASE("instance round trip") {
  InstancePtr inst = load(kPair);
  size_t n = 0;
  CHECK(rg_instance_job_count(inst.get(), &n) == RG_OK);
  CHECK(n == 2);

  char* text = nullptr;
  REQUIRE(rg_instance_to_json(inst.get(), &text) == RG_OK);
  CStr holder(text);
  InstancePtr again = load(text);
  char* text2 = nullptr;
  REQUIRE(rg_instance_to_json(again.get(), &text2) == RG_OK);
  CHECK(std::string(text) == CStr(text2).get());
}

TEST_CASE("parse failures set a message and a status") {
  rg_instance* inst = nullptr;
  CHECK(rg_instance_from_json("{", &inst) == RG_ERR_PARSE);
  CHECK(std::string(rg_last_error()).size() > 0);
  CHECK(rg_instance_from_json(R"({"jobs": [{"atoms": [[0.25, "1"]]}]})", &inst) ==
        RG_ERR_PARSE);  // non-integer JSON numbers are inexact
  CHECK(rg_instance_from_json(R"({"jobs": [{"atoms": [["1", "1/3"]]}]})", &inst) ==
        RG_ERR_INVALID_DISTRIBUTION);
  CHECK(rg_instance_from_json(nullptr, &inst) == RG_ERR_INVALID_PARAMS);
  CHECK(std::string(rg_status_name(RG_ERR_PARSE)) == "parse-error");
}

TEST_CASE("closeness through the C interface") {
  InstancePtr a = load(kPair);
  InstancePtr b = load(R"({"jobs": [
    {"atoms": [["1", "1/2"], ["2", "1/2"]]},
    {"atoms": [["1.1", "1/2"], ["2", "1/2"]]}
  ]})");

  int close = -1;
  CHECK(rg_check_close(a.get(), b.get(), "1.2", &close) == RG_OK);
  CHECK(close == 1);
  CHECK(rg_check_close(a.get(), b.get(), "1", &close) == RG_OK);
  CHECK(close == 0);
  CHECK(rg_check_close(a.get(), b.get(), "0.5", &close) == RG_ERR_INVALID_ALPHA);

  double alpha = 0.0;
  CHECK(rg_min_alpha(a.get(), b.get(), "1e-7", &alpha) == RG_OK);
  CHECK(alpha == doctest::Approx(1.1).epsilon(1e-5));
}

TEST_CASE("quanta, order and schedules") {
  InstancePtr inst = load(kPair);

  char* quanta = nullptr;
  REQUIRE(rg_quanta_json(inst.get(), &quanta) == RG_OK);
  CStr quanta_holder(quanta);
  json qj = json::parse(quanta);
  REQUIRE(qj["jobs"].size() == 2);
  CHECK(qj["jobs"][0]["quanta"].size() == 1);
  CHECK(qj["jobs"][0]["quanta"][0]["rank"] == "2/3");

  char* order = nullptr;
  REQUIRE(rg_order_json(inst.get(), &order) == RG_OK);
  CStr order_holder(order);
  CHECK(json::parse(order)["order"].size() == 2);

  rg_schedule* sched = nullptr;
  REQUIRE(rg_schedule_build(inst.get(), "rg", "3/2", &sched) == RG_OK);
  SchedulePtr sched_holder(sched);
  char* sched_json = nullptr;
  REQUIRE(rg_schedule_to_json(sched, &sched_json) == RG_OK);
  CStr sched_json_holder(sched_json);
  json sj = json::parse(sched_json);
  CHECK(sj["policy"] == "rg");
  CHECK(sj["alpha"] == "3/2");
  CHECK(sj["entries"][0]["length"] == "3");  // 2 * 3/2

  rg_schedule* reparsed = nullptr;
  REQUIRE(rg_schedule_from_json(sched_json, &reparsed) == RG_OK);
  SchedulePtr reparsed_holder(reparsed);

  CHECK(rg_schedule_build(inst.get(), "rg", nullptr, &sched) == RG_ERR_INVALID_PARAMS);
  CHECK(rg_schedule_build(inst.get(), "sjf", nullptr, &sched) == RG_ERR_INVALID_PARAMS);
}

TEST_CASE("execute and evaluate") {
  InstancePtr inst = load(kPair);
  rg_schedule* sched = nullptr;
  REQUIRE(rg_schedule_build(inst.get(), "gipp", nullptr, &sched) == RG_OK);
  SchedulePtr sched_holder(sched);

  char* run = nullptr;
  REQUIRE(rg_execute_json(sched, R"({"sizes": ["1", "2"]})", 0, &run) == RG_OK);
  CStr run_holder(run);
  json rj = json::parse(run);
  CHECK(rj["total"] == "4");

  char* uncovered = nullptr;
  CHECK(rg_execute_json(sched, R"({"sizes": ["1", "5"]})", 0, &uncovered) ==
        RG_ERR_INCOMPLETE_SCHEDULE);

  char* closed = nullptr;
  REQUIRE(rg_evaluate_json(sched, inst.get(), "closed", 0, 0, 0, &closed) == RG_OK);
  CStr closed_holder(closed);
  json cj = json::parse(closed);
  CHECK(cj["method"] == "closed-form");
  CHECK(cj["value"] == "9/2");

  char* enumerated = nullptr;
  REQUIRE(rg_evaluate_json(sched, inst.get(), "enum", 0, 0, 0, &enumerated) == RG_OK);
  CStr enum_holder(enumerated);
  CHECK(json::parse(enumerated)["value"] == "9/2");

  char* mc = nullptr;
  REQUIRE(rg_evaluate_json(sched, inst.get(), "mc", 20000, 11, 0, &mc) == RG_OK);
  CStr mc_holder(mc);
  json mj = json::parse(mc);
  CHECK(mj["method"] == "monte-carlo");
  CHECK(mj["value"].is_null());
  double estimate = mj["value_decimal"].get<double>();
  double err = mj["stderr"].get<double>();
  CHECK(std::abs(estimate - 4.5) <= 4 * err);

  char* opt = nullptr;
  REQUIRE(rg_opt_json(inst.get(), 0, &opt) == RG_OK);
  CStr opt_holder(opt);
  json oj = json::parse(opt);
  CHECK(oj["method"] == "dp-opt");
  CHECK(oj["value"] == "9/2");
}

TEST_CASE("generators through the C interface") {
  rg_instance *truth = nullptr, *pred = nullptr;
  REQUIRE(rg_gen_lower_bound(2, "0.5", &truth, &pred) == RG_OK);
  InstancePtr th(truth), ph(pred);
  char* tj = nullptr;
  REQUIRE(rg_instance_to_json(truth, &tj) == RG_OK);
  CStr tj_holder(tj);
  json parsed = json::parse(tj);
  CHECK(parsed["jobs"][0]["atoms"][0][0] == "3/2");

  CHECK(rg_gen_lower_bound(1, "0.5", &truth, &pred) == RG_ERR_INVALID_PARAMS);

  rg_instance* rnd = nullptr;
  REQUIRE(rg_gen_random(3, 3, 8, 42, &rnd) == RG_OK);
  InstancePtr rnd_holder(rnd);

  rg_instance *ct = nullptr, *cp = nullptr;
  REQUIRE(rg_gen_close_pair(2, "1.5", 3, 8, 42, &ct, &cp) == RG_OK);
  InstancePtr ct_holder(ct), cp_holder(cp);
  int close = 0;
  CHECK(rg_check_close(ct, cp, "1.5", &close) == RG_OK);
  CHECK(close == 1);
}

TEST_CASE("experiments through the C interface") {
  const uint32_t ns[] = {2, 4};
  char* gap = nullptr;
  REQUIRE(rg_gap_experiment(ns, 2, "0.1", &gap) == RG_OK);
  CStr gap_holder(gap);
  json gj = json::parse(gap);
  CHECK(gj["kind"] == "gap");
  CHECK(gj["rows"].size() == 2);

  uint64_t violations = 123;
  CHECK(rg_report_violations(gap, &violations) == RG_OK);
  CHECK(violations == 0);

  char* gap_csv = nullptr;
  REQUIRE(rg_report_csv(gap, 6, &gap_csv) == RG_OK);
  CStr gap_csv_holder(gap_csv);
  CHECK(std::string(gap_csv).rfind("n,cost_mispredicted", 0) == 0);

  const char* alphas[] = {"1.1", "1.5"};
  char* robust = nullptr;
  REQUIRE(rg_robust_experiment(2, alphas, 2, 2, 3, 8, 7, &robust) == RG_OK);
  CStr robust_holder(robust);
  json rj = json::parse(robust);
  CHECK(rj["kind"] == "robust");
  CHECK(rj["violations"] == 0);
  CHECK(rj["rows"].size() == 4);

  char* robust_csv = nullptr;
  REQUIRE(rg_report_csv(robust, 6, &robust_csv) == RG_OK);
  CStr robust_csv_holder(robust_csv);
  CHECK(std::string(robust_csv).rfind("alpha,trial,seed,", 0) == 0);
}
