#include <doctest.h>

#include "supercong/harness.hpp"

using namespace supercong;
using namespace supercong::harness;
using nlohmann::json;

namespace {

json geometric_job() {
  return json::parse(R"({
    "schema": "supercong-job/1",
    "series": {"kind": "rational", "numerator": [0, 1], "denominator": [1, -1]},
    "framing": {"sign": "+", "nu": 1},
    "primes": [2, 3, 5],
    "checks": ["main"],
    "n": {"from": 1, "to": 6}
  })");
}

}  // namespace

TEST_CASE("element parsing") {
  CHECK(parse_element(json("3/4"), 1) == CycloElem(1, Rational(3, 4)));
  CHECK(parse_element(json(-2), 1) == CycloElem(1, Rational(-2)));
  CHECK(parse_element(json::parse(R"({"coeffs": [0, 1]})"), 3) == CycloElem::zeta(3));
  CHECK_THROWS_AS(parse_element(json::parse(R"({"conductor": 4, "coeffs": [1]})"), 3), JobError);
  CHECK_THROWS_AS(parse_element(json("x"), 1), JobError);
  auto round = element_to_json(CycloElem(3, std::vector<Rational>{Rational(1, 2), -1}));
  CHECK(round["conductor"] == 3);
  CHECK(parse_element(round, 3) == CycloElem(3, std::vector<Rational>{Rational(1, 2), -1}));
}

TEST_CASE("series specifications") {
  auto job = parse_job(geometric_job());
  REQUIRE(job.series);
  auto V = series_from_spec(*job.series, 6);
  CHECK(V == Series::from_rationals({0, 1, 1, 1, 1, 1, 1}));
  // z / (1 - z - z^2): Fibonacci
  SeriesSpec fib;
  fib.numerator = {CycloElem(1), CycloElem(1, Rational(1))};
  fib.denominator = {CycloElem(1, Rational(1)), CycloElem(1, Rational(-1)), CycloElem(1, Rational(-1))};
  CHECK(series_from_spec(fib, 7) == Series::from_rationals({0, 1, 1, 2, 3, 5, 8, 13}));
  SeriesSpec per;
  per.kind = SeriesSpec::Kind::Periodic;
  per.conductor = 3;
  per.values = {CycloElem::zeta(3), CycloElem::zeta(3, 2), CycloElem(3, Rational(1))};
  auto P = series_from_spec(per, 7);
  CHECK(P[4] == CycloElem::zeta(3));
  CHECK(P[6] == CycloElem(3, Rational(1)));
  SeriesSpec co;
  co.kind = SeriesSpec::Kind::Coeffs;
  co.values = {CycloElem(1, Rational(1))};
  CHECK_THROWS_AS(series_from_spec(co, 3), JobError);
}

TEST_CASE("period detection") {
  auto e = [](long v) { return CycloElem(1, Rational(v)); };
  CHECK(detect_period({e(1), e(2), e(1), e(2), e(1), e(2)}) == 2);
  CHECK(detect_period({e(5), e(5), e(5), e(5)}) == 1);
  CHECK_THROWS_AS(detect_period({e(1), e(2), e(3), e(1), e(2)}), std::domain_error);
}

TEST_CASE("job validation") {
  auto bad = [](const std::string& key, json value) {
    json j = geometric_job();
    if (value.is_null())
      j.erase(key);
    else
      j[key] = value;
    return j;
  };
  CHECK_THROWS_AS(parse_job(bad("checks", json::array({"nope"}))), JobError);
  CHECK_THROWS_AS(parse_job(bad("checks", json::array())), JobError);
  CHECK_THROWS_AS(parse_job(bad("primes", json::array({4}))), JobError);
  CHECK_THROWS_AS(parse_job(bad("n", nullptr)), JobError);
  CHECK_THROWS_AS(parse_job(bad("schema", "other/2")), JobError);
  CHECK_THROWS_AS(parse_job(bad("precision", "high")), JobError);
  CHECK_THROWS_AS(parse_job(bad("series", nullptr)), JobError);
  auto j = geometric_job();
  j["framing"]["sign"] = "*";
  CHECK_THROWS_AS(parse_job(j), JobError);
  CHECK(parse_job(bad("precision", 10)).precision == 10u);
  CHECK(parse_job(bad("r", 3)).r == std::vector<unsigned>{1, 2, 3});
  CHECK(parse_job(geometric_job()).n == std::vector<unsigned>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("running a job") {
  auto job = parse_job(geometric_job());
  auto doc = run(job, 1);
  auto s = doc.summary();
  CHECK(s.total == 18);
  CHECK(s.fail == 0);
  CHECK(s.invalid == 0);
  CHECK(s.skip == 3);  // odd n at p = 2
  CHECK(exit_code(doc) == 0);
  CHECK(doc.series_info["period"] == 1);
  for (const auto& r : doc.reports)
    if (r.measured) CHECK_FALSE(r.param("M").empty());

  // worker count does not change the output
  CHECK(to_json(run(job, 3)).dump() == to_json(doc).dump());

  auto out = to_json(doc);
  CHECK(out["schema"] == kReportSchema);
  CHECK(out["reports"].size() == 18);
  CHECK(out["summary"]["pass"] == 15);
  auto first_skip = std::find_if(out["reports"].begin(), out["reports"].end(),
                                 [](const auto& r) { return r["status"] == "skip"; });
  REQUIRE(first_skip != out["reports"].end());
  CHECK((*first_skip)["observed"].is_null());

  auto csv = to_csv(doc);
  CHECK(csv.rfind("check_id,params,observed,predicted,status,sharp,note\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 19);
}

TEST_CASE("primes dividing the conductor are skipped") {
  auto j = geometric_job();
  j["series"] = json::parse(R"({"kind": "periodic", "conductor": 3, "values": [{"coeffs": [0, 1]}, {"coeffs": [-1, -1]}, 1]})");
  j["primes"] = {3, 5};
  j["n"] = {1, 5};
  auto doc = run(parse_job(j));
  for (const auto& r : doc.reports) {
    if (r.param("p") == "3")
      CHECK(r.status == Status::Skip);
    else
      CHECK(r.passed());
  }
  CHECK(doc.series_info["conductor"] == 3);
}

TEST_CASE("all prime ideals") {
  auto j = geometric_job();
  j["series"] = json::parse(R"({"kind": "periodic", "conductor": 3, "values": [{"coeffs": [0, 1]}, {"coeffs": [-1, -1]}, 1]})");
  j["primes"] = {7};
  j["n"] = {1};
  j["all_factors"] = true;
  auto doc = run(parse_job(j));
  REQUIRE(doc.reports.size() == 2);
  CHECK(doc.reports[0].param("ideal") == "0");
  CHECK(doc.reports[1].param("ideal") == "1");
  CHECK(doc.reports[0].passed());
  CHECK(doc.reports[1].passed());
}

TEST_CASE("failing dwork job exits with 1") {
  auto j = json::parse(R"({
    "series": {"kind": "rational", "numerator": [0, "1/2"], "denominator": [1]},
    "primes": [2], "checks": ["dwork"], "truncation": 16
  })");
  auto doc = run(parse_job(j));
  CHECK(doc.summary().fail == 3);
  CHECK(exit_code(doc) == 1);
}

TEST_CASE("non-periodic series make period-dependent checks invalid") {
  auto j = geometric_job();
  j["series"] = json::parse(R"({"kind": "rational", "numerator": [0, 1], "denominator": [1, -2, 1]})");
  j["primes"] = {5};
  j["n"] = {1};
  auto doc = run(parse_job(j));
  REQUIRE(doc.reports.size() == 1);
  CHECK(doc.reports[0].status == Status::Invalid);
  CHECK(exit_code(doc) == 1);
}

TEST_CASE("index lists are sorted and deduplicated") {
  auto j = geometric_job();
  j["n"] = {5, 1, 5, 2};
  CHECK(parse_job(j).n == std::vector<unsigned>{1, 2, 5});
  j["n"] = {0, 1};
  CHECK_THROWS_AS(parse_job(j), JobError);
}
