#include <doctest.h>

#include <cmath>

#include "fskit/rng.hpp"
#include "fskit/soft_real.hpp"

using namespace fskit;

namespace {

const ParameterSet& params2() {
    static const ParameterSet p({"e1", "e2"});
    return p;
}

FuzzySoftReal random_fsr(Rng& rng, const AlphaGrid& grid) {
    std::vector<FuzzyReal> values;
    for (std::size_t e = 0; e < params2().size(); ++e) {
        const double apex = rng.uniform(-4.0, 4.0);
        values.push_back(fr_triangular(apex - rng.uniform(0.0, 2.0), apex,
                                       apex + rng.uniform(0.0, 2.0), grid));
    }
    return FuzzySoftReal(params2(), std::move(values));
}

}  // namespace

TEST_CASE("construction and crisp lifts") {
    const auto grid = AlphaGrid::uniform(101);

    CHECK_THROWS_AS(FuzzySoftReal(params2(), {fr_crisp(1.0, grid)}), ValidationError);
    CHECK_THROWS_AS(
        FuzzySoftReal(params2(), {fr_crisp(1.0, grid), fr_crisp(1.0, AlphaGrid::uniform(7))}),
        GridMismatchError);

    const auto five = fsr_crisp(5.0, params2(), grid);
    double v = 0.0;
    CHECK(fsr_is_crisp(five, &v));
    CHECK(v == 5.0);
    CHECK(fsr_level(five, "e2", 1.0) == Interval{5.0, 5.0});
    CHECK(fsr_level(five, "e1", grid.level(0)) == Interval{5.0, 5.0});

    CHECK(fsr_is_nonnegative(fsr_crisp(0.0, params2(), grid)));
    CHECK(fsr_is_nonnegative(five));
    CHECK(!fsr_is_nonnegative(fsr_crisp(-0.1, params2(), grid)));
}

TEST_CASE("levels delegate to the per-parameter cuts") {
    const auto grid = AlphaGrid::uniform(101);
    const FuzzySoftReal r(params2(), {fr_triangular(0.0, 1.0, 2.0, grid),
                                      fr_triangular(3.0, 4.0, 5.0, grid)});

    CHECK(fsr_level(r, "e2", 1.0) == Interval{4.0, 4.0});
    CHECK(fsr_level(r, "e1", grid.level(10)) == r.value(0).cut(10));

    CHECK_THROWS_AS(fsr_level(r, "e3", 1.0), ParameterMismatchError);
    CHECK_THROWS_AS(fsr_level(r, "e1", 0.505), ValidationError);  // off-grid
}

TEST_CASE("order and equality") {
    const auto grid = AlphaGrid::uniform(101);
    Rng rng(41);

    const auto a = random_fsr(rng, grid);
    CHECK(fsr_leq(a, a));
    CHECK(fsr_equal(a, a, 0.0));
    CHECK(fsr_leq(fsr_crisp(1.0, params2(), grid), fsr_crisp(2.0, params2(), grid)));

    // One parameter with crossed cuts sinks the whole comparison.
    const FuzzySoftReal crossed(params2(), {fr_crisp(0.0, grid),
                                            fr_triangular(0.0, 1.0, 2.0, grid)});
    const FuzzySoftReal target(params2(), {fr_crisp(1.0, grid), fr_crisp(1.0, grid)});
    CHECK(!fsr_leq(crossed, target));
    CHECK(!fsr_leq(target, crossed));

    for (int i = 0; i < 50; ++i) {
        const auto x = random_fsr(rng, grid);
        const auto y = fsr_add(x, fsr_crisp(rng.uniform(0.0, 3.0), params2(), grid));
        const auto z = fsr_add(y, fsr_crisp(rng.uniform(0.0, 3.0), params2(), grid));
        CHECK(fsr_leq(x, y));
        CHECK(fsr_leq(x, z));  // transitive closure of the two shifts
    }
}

TEST_CASE("arithmetic identities hold exactly") {
    const auto grid = AlphaGrid::uniform(101);
    const auto zero = fsr_crisp(0.0, params2(), grid);
    const auto one = fsr_crisp(1.0, params2(), grid);
    Rng rng(42);

    for (int i = 0; i < 100; ++i) {
        const auto a = random_fsr(rng, grid);
        CHECK(fsr_equal(fsr_add(a, zero), a, 0.0));
        CHECK(fsr_equal(fsr_mul(a, one), a, 0.0));
    }

    CHECK(fsr_equal(fsr_add(fsr_crisp(2.0, params2(), grid), fsr_crisp(3.0, params2(), grid)),
                    fsr_crisp(5.0, params2(), grid), 0.0));
}

TEST_CASE("crisp lift lemma") {
    const auto grid = AlphaGrid::uniform(101);
    Rng rng(43);
    for (int i = 0; i < 100; ++i) {
        const double r = rng.uniform(-10.0, 10.0);
        const double x = rng.uniform(-10.0, 10.0);
        CHECK(fsr_equal(fsr_abs(fsr_crisp(r, params2(), grid)),
                        fsr_crisp(std::fabs(r), params2(), grid), 0.0));
        CHECK(fsr_equal(fsr_mul(fsr_crisp(r, params2(), grid), fsr_crisp(x, params2(), grid)),
                        fsr_crisp(r * x, params2(), grid), 0.0));
    }
}

TEST_CASE("absolute value") {
    const auto grid = AlphaGrid::uniform(101);
    const auto zero = fsr_crisp(0.0, params2(), grid);
    CHECK(fsr_equal(fsr_abs(fsr_crisp(-3.0, params2(), grid)),
                    fsr_crisp(3.0, params2(), grid), 0.0));
    CHECK(fsr_equal(fsr_abs(zero), zero, 0.0));

    Rng rng(44);
    for (int i = 0; i < 50; ++i) CHECK(fsr_is_nonnegative(fsr_abs(random_fsr(rng, grid))));
}

TEST_CASE("mismatched carriers are rejected") {
    const auto grid = AlphaGrid::uniform(101);
    const ParameterSet other({"q1", "q2"});
    const auto a = fsr_crisp(1.0, params2(), grid);
    const auto b = fsr_crisp(1.0, other, grid);
    CHECK_THROWS_AS(fsr_add(a, b), ParameterMismatchError);
    CHECK_THROWS_AS(fsr_leq(a, b), ParameterMismatchError);
    CHECK_THROWS_AS(fsr_add(a, fsr_crisp(1.0, params2(), AlphaGrid::uniform(7))),
                    GridMismatchError);
    CHECK_THROWS_AS(fsr_div(a, fsr_crisp(0.0, params2(), grid)),
                    DivisionByIntervalContainingZeroError);
}
