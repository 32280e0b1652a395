#include "pbmac/suites.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pbmac;

TEST_CASE("suites pass at small bounds") {
    SuiteOptions opt;
    opt.n = 2;
    opt.degree = 3;
    opt.jobs = 2;
    for (const std::string& name :
         {"oracle", "partition", "factorization", "symmetry", "negative-example"}) {
        std::vector<SuiteReport> reports = run_suites(name, opt);
        REQUIRE(reports.size() == 1);
        INFO(reports[0].to_string());
        CHECK(reports[0].passed());
        CHECK(reports[0].instance_count > 0);
    }
}

TEST_CASE("expansion and hall-littlewood suites at n=3") {
    SuiteOptions opt;
    opt.n = 3;
    opt.degree = 3;
    opt.jobs = 2;
    for (const std::string& name : {"expansion", "hall-littlewood", "operators"}) {
        std::vector<SuiteReport> reports = run_suites(name, opt);
        REQUIRE(reports.size() == 1);
        INFO(reports[0].to_string());
        CHECK(reports[0].passed());
    }
}

TEST_CASE("homogeneity, triple counts and partial symmetry up to n=4, degree 5") {
    SuiteOptions opt;
    opt.n = 4;
    opt.degree = 5;
    opt.jobs = 2;
    SuiteReport r = run_suites("symmetry", opt).front();
    INFO(r.to_string());
    CHECK(r.passed());
    CHECK(r.instance_count == 3402);
}

TEST_CASE("sampled oracle equivalence at n=4") {
    SuiteOptions opt;
    opt.n = 4;
    opt.degree = 4;
    opt.samples = 50;
    opt.seed = 3;
    opt.jobs = 2;
    SuiteReport r = run_suites("oracle-sampled", opt).front();
    INFO(r.to_string());
    CHECK(r.passed());
    CHECK(r.instance_count == 50);
}

TEST_CASE("sampled suites respect their seed and report deterministically") {
    SuiteOptions opt;
    opt.n = 3;
    opt.degree = 3;
    opt.seed = 42;
    opt.samples = 20;
    opt.jobs = 2;
    SuiteReport a = run_suites("partition-sampled", opt).front();
    SuiteReport b = run_suites("partition-sampled", opt).front();
    CHECK(a.passed());
    CHECK(a.to_json().dump() == b.to_json().dump());

    opt.jobs = 1; // parallelism must not change the serialized report
    SuiteReport c = run_suites("partition-sampled", opt).front();
    CHECK(a.to_json().dump() == c.to_json().dump());
}

TEST_CASE("suite errors") {
    SuiteOptions opt;
    CHECK_THROWS_AS(run_suites("no-such-suite", opt), std::invalid_argument);
    opt.n = 6;
    CHECK_THROWS_AS(run_suites("oracle", opt), std::invalid_argument);
}

TEST_CASE("report json excludes wall time and keeps failures") {
    SuiteOptions opt;
    opt.n = 2;
    opt.degree = 2;
    SuiteReport r = run_suites("negative-example", opt).front();
    nlohmann::json j = r.to_json();
    CHECK(j.contains("suite"));
    CHECK(j.contains("pass"));
    CHECK(!j.contains("wall"));
    CHECK(!j.contains("wall_seconds"));
}

TEST_CASE("all runs every base suite") {
    SuiteOptions opt;
    opt.n = 2;
    opt.degree = 2;
    opt.jobs = 2;
    std::vector<SuiteReport> reports = run_suites("all", opt);
    CHECK(reports.size() == 8);
    for (const auto& r : reports) {
        INFO(r.to_string());
        CHECK(r.passed());
    }
}
