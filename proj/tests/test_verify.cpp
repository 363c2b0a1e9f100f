#include <doctest.h>

#include <algorithm>
#include <string>

#include "heis/verify.hpp"

using namespace heis;

namespace {

std::string value_of(const CheckReport& r, const std::string& param) {
  for (const auto& [p, v] : r.measurements)
    if (p == param) return v;
  FAIL("missing measurement: " << param);
  return "";
}

}  // namespace

TEST_CASE("check_geo") {
  CheckReport r = check_geo(standard_genset(), 8);
  CHECK(r.check_name == "geo");
  CHECK(r.verdict == Verdict::PASS);
  CHECK(value_of(r, "max_deviation@R-2") == value_of(r, "max_deviation@R"));

  // radius too small to stabilize: never a fabricated verdict
  CHECK(check_geo(standard_genset(), 3).verdict == Verdict::INCONCLUSIVE);
}

TEST_CASE("check_kout") {
  CheckReport r = check_kout(standard_genset(), 10);
  CHECK(r.verdict == Verdict::PASS);
  CHECK(value_of(r, "c_star@R-4") == value_of(r, "c_star@R"));
  CHECK(check_kout(standard_genset(), 5).verdict == Verdict::INCONCLUSIVE);
}

TEST_CASE("depth profile and check_depth_growth") {
  GenSet A = standard_genset();
  LengthTable T = LengthTable::enumerate_ball(A, 10);
  auto profile = depth_profile(T);
  REQUIRE(profile.size() == 11);
  for (size_t l = 0; l < profile.size(); ++l) {
    CHECK(profile[l].length == static_cast<int64_t>(l));
    CHECK(profile[l].max_depth >= 1);
    CHECK(depth(T, profile[l].witness).depth == profile[l].max_depth);
  }

  CheckReport r = check_depth_growth(A, 10);
  CHECK(r.verdict == Verdict::PASS);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->find("dead end") != std::string::npos);
}

TEST_CASE("check_retreat_bounded") {
  CheckReport r = check_retreat_bounded(standard_genset(), 10, 8);
  CHECK(r.verdict == Verdict::PASS);
  CHECK(value_of(r, "unknown@(R,escape)") == "0");
  // the asymptotic statement is explicitly flagged as out of desk reach
  bool flagged = std::any_of(r.notes.begin(), r.notes.end(), [](const std::string& n) {
    return n.find("NOT DESK-VERIFIABLE") != std::string::npos;
  });
  CHECK(flagged);

  CHECK(check_retreat_bounded(standard_genset(), 10, 12).verdict ==
        Verdict::INCONCLUSIVE);
}

TEST_CASE("check_dirvar") {
  CheckReport r = check_dirvar(standard_genset(), {1, 4, 9, 16}, 16);
  CHECK(r.verdict == Verdict::PASS);

  // all z^n outside the ball -> inconclusive with a skip note per n
  CheckReport small = check_dirvar(standard_genset(), {9, 16}, 6);
  CHECK(small.verdict == Verdict::INCONCLUSIVE);
  CHECK(std::any_of(small.notes.begin(), small.notes.end(), [](const std::string& n) {
    return n.find("skipped") != std::string::npos;
  }));
}

TEST_CASE("check_allkapprox") {
  CheckReport r = check_allkapprox(standard_genset(), 10);
  CHECK(r.verdict == Verdict::PASS);
  CHECK(std::stoll(value_of(r, "verified_cosets")) >= 1);
  CHECK(std::stoll(value_of(r, "max_gap")) >= 0);
}

TEST_CASE("run_all_checks: serial and threaded agree byte for byte") {
  GenSet A = standard_genset();
  auto serial = run_all_checks(A, 8, 6, 1);
  auto threaded = run_all_checks(A, 8, 6, 4);
  REQUIRE(serial.size() == 6);
  REQUIRE(threaded.size() == 6);
  for (size_t t = 0; t < serial.size(); ++t)
    CHECK(report_to_json(serial[t]) == report_to_json(threaded[t]));

  // repeat runs are deterministic
  auto again = run_all_checks(A, 8, 6, 1);
  for (size_t t = 0; t < serial.size(); ++t) {
    CHECK(report_to_json(serial[t]) == report_to_json(again[t]));
    CHECK(report_to_csv(serial[t], true) == report_to_csv(again[t], true));
  }
}

TEST_CASE("report serialization") {
  CheckReport r;
  r.check_name = "demo";
  r.genset_name = "weird,\"name\"";
  r.radius = 4;
  r.measurements = {{"alpha", "1/2"}, {"beta", "x,y"}};
  r.verdict = Verdict::FAIL;
  r.witness = "w";
  r.notes = {"note"};

  std::string json = report_to_json(r);
  CHECK(json.find("\"check\": \"demo\"") != std::string::npos);
  CHECK(json.find("\"verdict\": \"FAIL\"") != std::string::npos);
  CHECK(json.find("\"witness\": \"w\"") != std::string::npos);

  std::string csv = report_to_csv(r, true);
  CHECK(csv.substr(0, csv.find('\n')) == "check,genset,radius,parameter,value,verdict");
  // quoted fields with embedded commas and doubled quotes
  CHECK(csv.find("\"weird,\"\"name\"\"\"") != std::string::npos);
  CHECK(csv.find("\"x,y\"") != std::string::npos);
  CHECK(csv.find(",FAIL\n") != std::string::npos);

  CHECK(report_to_csv(r, false).find("check,genset") == std::string::npos);
}
