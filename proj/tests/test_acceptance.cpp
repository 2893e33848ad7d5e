#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "toric/acceptance.hpp"

using namespace toric;

TEST_CASE("acceptance suite") {
  std::vector<AcceptanceResult> results = run_acceptance_suite();
  REQUIRE(results.size() == 15);
  for (const AcceptanceResult& r : results) {
    std::printf("%s  %2d  %s (%s)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    CAPTURE(r.id);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("a corrupted golden value is caught") {
  std::vector<AcceptanceResult> results = run_acceptance_suite(/*corrupt_golden=*/true);
  CHECK_FALSE(results[0].pass);
}
