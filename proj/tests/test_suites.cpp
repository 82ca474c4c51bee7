#include "doctest.h"
#include "semiloc/errors.hpp"
#include "semiloc/suites.hpp"

using namespace semiloc;

TEST_CASE("every suite passes a small run") {
  SuiteOptions o;
  o.seed = 5;
  o.budgets.count = 8;
  for (const auto& id : suite_ids()) {
    INFO(id);
    const auto r = run_suite(id, o);
    CHECK(r.instances.size() == 8);
    CHECK(r.passed());
    for (const auto& i : r.instances) {
      INFO(i.description << ": " << i.message);
      CHECK(i.status == InstanceStatus::Pass);
    }
  }
}

TEST_CASE("payload is independent of thread count and of wall time") {
  SuiteOptions one;
  one.seed = 9;
  one.budgets.count = 12;
  one.threads = 1;
  SuiteOptions many = one;
  many.threads = 4;
  for (const char* id : {"T2.4", "P6.4", "C6.7"}) {
    const auto a = run_suite(id, one);
    const auto b = run_suite(id, many);
    CHECK(a.payload() == b.payload());
    CHECK(a.payload().find("wall_time") == std::string::npos);
    CHECK(a.text().find("wall_time_seconds=") != std::string::npos);
  }
  SuiteOptions other = one;
  other.seed = 10;
  CHECK(run_suite("T2.4", one).payload() != run_suite("T2.4", other).payload());
}

TEST_CASE("instance i depends only on the seed and i") {
  SuiteOptions small;
  small.seed = 3;
  small.budgets.count = 4;
  SuiteOptions large = small;
  large.budgets.count = 9;
  const auto a = run_suite("P4.4", small);
  const auto b = run_suite("P4.4", large);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(a.instances[i].description == b.instances[i].description);
    CHECK(a.instances[i].fields == b.instances[i].fields);
  }
}

TEST_CASE("report shape") {
  SuiteOptions o;
  o.budgets.count = 3;
  const auto r = run_suite("C6.5", o);
  const std::string p = r.payload();
  CHECK(p.rfind("suite=C6.5\n", 0) == 0);
  CHECK(p.find("instance.0.description=zero module") != std::string::npos);
  CHECK(p.find("verdict=pass") != std::string::npos);
  CHECK(r.count_tag("b2-equality") == 1);
  const std::string j = r.summary_json();
  CHECK(j.find("\"suite\": \"C6.5\"") != std::string::npos);
  CHECK(j.find("\"failures\": 0") != std::string::npos);
  CHECK_THROWS_AS(run_suite("T9.9", o), ValidationError);
  CHECK(suite_ids().size() == 18);
}
