#include <algorithm>

#include "doctest.h"
#include "dtopw/errors.hpp"
#include "dtopw/suites.hpp"

using namespace dtopw;

namespace {

SuiteResult run(const std::string& id, int max_size, int depth = 4) {
  SuiteConfig c;
  c.id = id;
  c.max_size = max_size;
  c.depth = depth;
  return run_suite(c);
}

}  // namespace

TEST_SUITE("suites") {

TEST_CASE("every suite passes at small sizes") {
  const auto ids = suite_ids();
  CHECK(ids.size() == 15);
  for (const auto& id : ids) {
    CAPTURE(id);
    const auto r = run(id, 3);
    CHECK(r.passed());
    CHECK(r.instances > 0);
    CHECK(r.checks >= r.instances);
  }
}

TEST_CASE("reports are deterministic and independent of the job count") {
  SuiteConfig a;
  a.id = "thm-3.12";
  a.max_size = 3;
  a.jobs = 1;
  SuiteConfig b = a;
  b.jobs = 4;
  CHECK(run_suite(a).summary() == run_suite(b).summary());
}

TEST_CASE("bad configurations") {
  CHECK_THROWS_AS(run("nope", 3), UnknownName);
  CHECK_THROWS_AS(run("thm-2.3", 6), BoundExceeded);
  CHECK_THROWS_AS(run("thm-2.3", 0), BoundExceeded);
  CHECK_THROWS_AS(run("gallery-all", 3, 13), BoundExceeded);
  CHECK(default_jobs() >= 1);
}

TEST_CASE("properties") {
  const FiniteSpace s({"0", "1"}, {0b00, 0b10, 0b11});
  for (const auto& p : property_names()) {
    CAPTURE(p);
    CHECK(check_property(s, p).holds);
  }
  CHECK_THROWS_AS(check_property(s, "unknown-prop"), UnknownProperty);
}

}  // TEST_SUITE
