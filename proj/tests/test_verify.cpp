#include "schubert/verify.hpp"

#include <doctest.h>

using namespace schubert;

TEST_CASE("every suite passes on small boards")
{
    for (const auto& name : suite_names()) {
        for (int n = 1; n <= 4; ++n) {
            for (int k = 0; k <= n; ++k) {
                const SuiteReport r = run_suite(name, n, k);
                INFO(r.summary());
                CHECK(r.passed());
                CHECK_FALSE(r.sampled);
                CHECK(r.suite == name);
            }
        }
    }
}

TEST_CASE("case counts")
{
    CHECK(run_suite("oracle-equality", 4, 2).cases >= 36);
    const SuiteReport gash = run_suite("gash-identities", 4, 2);
    CHECK(gash.passed());
    CHECK(gash.cases == 216 * 4);
    const SuiteReport pieri = run_suite("pieri", 5, 2);
    CHECK(pieri.passed());
    CHECK(pieri.cases > 0);
    const SuiteReport c = run_suite("c-identities", 4, 2);
    CHECK(c.passed());
    CHECK(run_suite("pieri", 3, 0).vacuous);
}

TEST_CASE("sampling is deterministic")
{
    SuiteOptions o;
    o.exhaustive_max_n = 3;
    o.sample_size = 20;
    const SuiteReport a = run_suite("oracle-equality", 5, 2, o);
    const SuiteReport b = run_suite("oracle-equality", 5, 2, o);
    CHECK(a.sampled);
    CHECK(a.passed());
    CHECK(a.cases == b.cases);

    o.threads = 1;
    const SuiteReport serial = run_suite("oracle-equality", 5, 2, o);
    CHECK(serial.cases == a.cases);
}

TEST_CASE("errors and reports")
{
    CHECK_THROWS_AS(run_suite("no-such-suite", 3, 1), UnknownSuite);
    CHECK_THROWS_AS(run_suite("gkm", 3, 4), std::invalid_argument);

    const SuiteReport fx = regression_fixtures();
    INFO(fx.summary());
    CHECK(fx.passed());
    CHECK(fx.cases > 10);

    const auto j = run_suite("gkm", 3, 1).to_json();
    CHECK(j["suite"] == "gkm");
    CHECK(j["passed"] == true);
    CHECK(j["failures"].empty());

    SuiteReport bad;
    bad.suite = "x";
    bad.cases = 1;
    bad.failures.push_back({"in", "a", "b", "note"});
    CHECK_FALSE(bad.passed());
    CHECK(bad.summary().find("FAIL") != std::string::npos);
    CHECK(bad.summary().find("note [in]: a  vs  b") != std::string::npos);
    SuiteReport empty;
    CHECK_FALSE(empty.passed());
}
