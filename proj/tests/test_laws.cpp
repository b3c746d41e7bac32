#include <doctest.h>

#include "fskit/laws.hpp"

using namespace fskit;

TEST_CASE("law suites pass with seeded randomness") {
    const auto demorgan = law_demorgan(17, 200);
    CHECK(demorgan.passed());
    CHECK(demorgan.cases == 200);
    CHECK(demorgan.first_witness.empty());

    CHECK(law_maplaws(17, 100).passed());
    CHECK(law_identities(17, 100).passed());
    CHECK(law_normaxioms(17, 100).passed());
}

TEST_CASE("identical seeds reproduce identical reports") {
    const auto a = law_maplaws(99, 50);
    const auto b = law_maplaws(99, 50);
    CHECK(a.violations == b.violations);
    CHECK(a.first_witness == b.first_witness);

    const auto c = law_demorgan(1, 50, true);
    const auto d = law_demorgan(1, 50, true);
    CHECK(c.first_witness == d.first_witness);
}

TEST_CASE("fault injection surfaces a witness") {
    for (auto law : {law_demorgan, law_maplaws, law_identities, law_normaxioms}) {
        const auto report = law(23, 60, true);
        CHECK(report.violations >= 1);
        CHECK(!report.first_witness.empty());
    }
}
