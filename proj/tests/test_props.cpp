#include <doctest.h>

#include "qent/errors.hpp"
#include "qent/props.hpp"

using namespace qent;

TEST_CASE("every property suite passes a short run") {
    for (const std::string& name : property_check_names()) {
        const PropertyReport r = run_property_check(name, 10, 99);
        INFO(name << " worst case: " << r.worst_case);
        CHECK(r.passed);
        CHECK(r.trials == 10);
        CHECK(r.check == name);
    }
}

TEST_CASE("property runs are deterministic for a fixed seed") {
    const PropertyReport a = run_property_check("lu-invariance", 8, 1234);
    const PropertyReport b = run_property_check("lu-invariance", 8, 1234);
    CHECK(a.worst_deviation == b.worst_deviation);
    CHECK(a.worst_case == b.worst_case);
}

TEST_CASE("property runner validates input") {
    CHECK_THROWS_AS(run_property_check("nosuch", 10, 1), ParseError);
    CHECK_THROWS_AS(run_property_check("nonneg", 0, 1), ShapeError);
}
