#include <doctest.h>

#include "almostcover/error.hpp"
#include "almostcover/verify.hpp"

using namespace almostcover;

TEST_CASE("verification suites pass on small grids") {
  for (const std::string& suite : verify_suite_names()) {
    CAPTURE(suite);
    VerifyOptions options;
    options.max_n = suite == "binomial" ? 12 : 3;
    const VerifyReport report = run_verify_suite(suite, options);
    CHECK(report.suite == suite);
    CHECK_FALSE(report.checks.empty());
    for (const VerifyCheck& c : report.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_WITH_AS(run_verify_suite("main5"), doctest::Contains("unknown suite"), Error);
}
