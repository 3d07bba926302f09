#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpd/verify.hpp"

using namespace gpd;

TEST_CASE("criterion subset selection") {
  VerifyOptions opts;
  opts.only = {4, 11};
  std::vector<CriterionResult> results = run_acceptance(opts);
  REQUIRE(results.size() == 2);
  CHECK(results[0].id == 4);
  CHECK(results[1].id == 11);
  CHECK(results[0].passed);
  CHECK(results[1].passed);
}

TEST_CASE("fault injection fails exactly the matching criterion") {
  VerifyOptions opts;
  opts.only = {4, 9};
  opts.provider = [](Builtin b) {
    Configuration c = builtin(b);
    if (b == Builtin::Klein) {
      // Perturb one marked point; the Klein invariance criterion must fail.
      Field f = c.field;
      (*c.marked)[0][0] = ProjPoint({f.integer(2), f.one()});
    }
    return c;
  };
  std::vector<CriterionResult> results = run_acceptance(opts);
  REQUIRE(results.size() == 2);
  CHECK(results[0].id == 4);
  CHECK(results[0].passed);
  CHECK(results[1].id == 9);
  CHECK_FALSE(results[1].passed);
}
