#include <doctest.h>

#include "wfb/errors.hpp"
#include "wfb/suites.hpp"

using namespace wfb;

TEST_CASE("every suite passes") {
    for (const auto& name : suite_names()) {
        SuiteResult r = run_suite(name);
        for (const auto& c : r.checks) {
            INFO(name, "/", c.id, ": computed ", c.computed, " expected ", c.expected);
            CHECK(c.pass);
        }
        CHECK(r.pass());
    }
}

TEST_CASE("unknown suite") {
    CHECK_THROWS_AS(run_suite("nope"), DomainError);
}

TEST_CASE("deterministic output bytes") {
    for (const auto& name : suite_names()) {
        std::string a = suite_to_json(run_suite(name));
        std::string b = suite_to_json(run_suite(name));
        CHECK(a == b);
    }
}

TEST_CASE("discrepancy suite reports exactly three typos") {
    SuiteResult r = run_suite("paper-discrepancies");
    CHECK(r.checks.size() == 3);
    CHECK(r.pass());
}

TEST_CASE("reports carry citations and expected values") {
    for (const auto& name : suite_names()) {
        SuiteResult r = run_suite(name);
        CHECK(!r.checks.empty());
        for (const auto& c : r.checks) {
            CHECK(!c.id.empty());
            CHECK(!c.ref.empty());
            CHECK(!c.description.empty());
        }
    }
}
