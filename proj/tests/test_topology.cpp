#include <doctest.h>

#include <algorithm>

#include "fskit/topology.hpp"
#include "helpers.hpp"

using namespace fskit;
using namespace fskit::test;

namespace {

const std::vector<double> kLattice{0.0, 0.25, 0.5, 0.75, 1.0};

FuzzySoftSet one_param_set(const Universe& u, std::vector<double> row) {
    return FuzzySoftSet(ParameterSet({"e1"}), u, {std::move(row)});
}

}  // namespace

TEST_CASE("crisp topology check") {
    const Universe u({"a", "b", "c"});
    const CrispSet none(3, false);
    const CrispSet all(3, true);
    const CrispSet just_a{true, false, false};
    const CrispSet just_b{false, true, false};

    CHECK(crisp_check(u, {none, all}).ok());
    CHECK(crisp_check(u, {all}).kind == TopologyVerdict::Kind::missing_null);
    CHECK(crisp_check(u, {none}).kind == TopologyVerdict::Kind::missing_absolute);
    CHECK(crisp_check(u, {none, just_a, all}).ok());  // Sierpinski-style chain

    const auto verdict = crisp_check(u, {none, just_a, just_b, all});
    CHECK(verdict.kind == TopologyVerdict::Kind::union_violation);
    CHECK(verdict.witness == std::vector<std::size_t>{1, 2});

    CHECK_THROWS_AS(CrispTopology(u, {none}), ValidationError);
}

TEST_CASE("fuzzy topology check") {
    const Universe u({"a", "b"});
    const FuzzySet zero = FuzzySet::constant(u, 0.0);
    const FuzzySet one = FuzzySet::constant(u, 1.0);

    CHECK(fuzzy_check(u, {zero, one}).ok());
    CHECK(fuzzy_check(u, {one}).kind == TopologyVerdict::Kind::missing_null);

    // Closed chain of comparable fuzzy sets.
    const FuzzySet low(u, {0.25, 0.25});
    const FuzzySet high(u, {0.75, 0.75});
    CHECK(fuzzy_check(u, {zero, low, high, one}).ok());

    // Incomparable pair without their join.
    const FuzzySet left(u, {0.5, 0.0});
    const FuzzySet right(u, {0.0, 0.5});
    const FuzzySet meet(u, {0.0, 0.0});
    const auto verdict = fuzzy_check(u, {zero, left, right, one});
    CHECK(verdict.kind == TopologyVerdict::Kind::union_violation);
    (void)meet;
}

TEST_CASE("fuzzy soft topology check") {
    const Universe u({"a", "b"});
    const ParameterSet params({"e1"});
    const auto phi = FuzzySoftSet::null_set(params, u);
    const auto all = FuzzySoftSet::absolute(params, u);

    CHECK(fst_check({phi, all}).ok());  // indiscrete
    CHECK(fst_check({}).kind == TopologyVerdict::Kind::missing_null);
    CHECK(fst_check({phi}).kind == TopologyVerdict::Kind::missing_absolute);

    SUBCASE("grade lattice on a single cell closes") {
        const Universe single({"a"});
        const auto collection = std::vector<FuzzySoftSet>{
            FuzzySoftSet(params, single, {{0.0}}),
            FuzzySoftSet(params, single, {{0.5}}),
            FuzzySoftSet(params, single, {{1.0}}),
        };
        CHECK(fst_check(collection).ok());
    }

    SUBCASE("missing union is caught with its witness") {
        const auto f = one_param_set(u, {0.4, 0.6});
        const auto g = one_param_set(u, {0.6, 0.4});
        const auto meet = fs_intersection(f, g);
        const std::vector<FuzzySoftSet> family{phi, all, f, g, meet};
        const auto verdict = fst_check(family);
        CHECK(verdict.kind == TopologyVerdict::Kind::union_violation);
        // Folding the named subfamily and adding it repairs the collection.
        FuzzySoftSet missing = family[verdict.witness.front()];
        for (std::size_t i : verdict.witness) missing = fs_union(missing, family[i]);
        CHECK(fst_check({phi, all, f, g, meet, missing}).ok());
    }

    SUBCASE("missing intersection is caught") {
        const auto f = one_param_set(u, {0.4, 0.6});
        const auto g = one_param_set(u, {0.6, 0.4});
        const auto join = fs_union(f, g);
        const auto verdict = fst_check({phi, all, f, g, join});
        CHECK(verdict.kind == TopologyVerdict::Kind::intersection_violation);
    }

    CHECK_THROWS_AS(FSTopology({phi}), ValidationError);
}

TEST_CASE("sampled union closure for large collections") {
    Rng rng(51);
    const Universe u({"a", "b"});
    const ParameterSet params({"e1", "e2"});
    const auto family = random_topology_collection(rng, params, u, kLattice, 4);
    const auto verdict = fst_check(family, ClosurePolicy{3, 500, 99});
    CHECK(verdict.ok());
    if (family.size() > 3) {
        CHECK(!verdict.exhaustive);
        CHECK(verdict.samples_run == 500);
    }
}

TEST_CASE("slices of a fuzzy soft topology are fuzzy topologies") {
    const Universe u({"a", "b"});
    const ParameterSet params({"e1", "e2"});

    SUBCASE("indiscrete slices to the two constants") {
        const FSTopology indiscrete({FuzzySoftSet::null_set(params, u),
                                     FuzzySoftSet::absolute(params, u)});
        const auto slice = fst_slice(indiscrete, "e1");
        CHECK(slice.size() == 2);
        CHECK(fuzzy_check(u, slice).ok());
        CHECK_THROWS_AS(fst_slice(indiscrete, "zzz"), ParameterMismatchError);
    }

    SUBCASE("random closures slice cleanly at every parameter") {
        Rng rng(52);
        for (int i = 0; i < 25; ++i) {
            const FSTopology topo(random_topology_collection(rng, params, u, kLattice, 2));
            for (const auto& e : params.labels())
                CHECK(fuzzy_check(u, fst_slice(topo, e)).ok());
        }
    }
}

TEST_CASE("crisp lift") {
    const Universe u({"a", "b"});
    const ParameterSet params({"e1", "e2"});
    const CrispSet none(2, false);
    const CrispSet all(2, true);
    const CrispSet just_a{true, false};
    const CrispSet just_b{false, true};

    SUBCASE("lift of the trivial topology") {
        const auto lifted = fst_lift_crisp(CrispTopology(u, {none, all}), params);
        CHECK(lifted.opens().size() == 2);
        CHECK(lifted.opens()[0].is_null());
        CHECK(lifted.opens()[1].is_absolute());
    }

    SUBCASE("lift of the four-open topology on two points") {
        const CrispTopology discrete(u, {none, just_a, just_b, all});
        const auto lifted = fst_lift_crisp(discrete, params);
        CHECK(lifted.opens().size() == 4);
        CHECK(fst_check(lifted.opens()).ok());

        // Slices at every parameter recover the characteristic functions.
        for (const auto& e : params.labels()) {
            const auto slice = fst_slice(lifted, e);
            CHECK(slice.size() == 4);
            for (const auto& open : slice)
                for (double g : open.grades()) CHECK((g == 0.0 || g == 1.0));
        }
        CHECK(fst_slice(lifted, "e1").size() == fst_slice(lifted, "e2").size());

        // Every lifted open is a member of the generated topology.
        for (const auto& open : lifted.opens())
            CHECK(fst_membership_wprime(open, discrete, kLattice));
    }
}

TEST_CASE("membership predicate for the generated topology") {
    const Universe u({"a", "b"});
    const ParameterSet params({"e1"});
    const CrispTopology chain(u, {CrispSet{false, false}, CrispSet{true, false},
                                  CrispSet{true, true}});

    // Superlevel sets {a}, {a,b} are open.
    CHECK(fst_membership_wprime(one_param_set(u, {0.75, 0.25}), chain, kLattice));
    // Superlevel at 0 would be {b}: not open in the chain.
    CHECK(!fst_membership_wprime(one_param_set(u, {0.0, 0.5}), chain, kLattice));
}

TEST_CASE("superlevel topology from a fuzzy topology") {
    const Universe u({"a", "b"});

    SUBCASE("constants collapse to the trivial topology") {
        const FuzzyTopology ft(u, {FuzzySet::constant(u, 0.0), FuzzySet::constant(u, 1.0)});
        const auto crisp = ft_it(ft, {0.0, 0.5});
        CHECK(crisp.opens().size() == 2);
        CHECK(crisp.contains(CrispSet(2, false)));
        CHECK(crisp.contains(CrispSet(2, true)));
    }

    SUBCASE("round trip through lift and slice recovers the crisp opens") {
        const CrispSet none(2, false);
        const CrispSet all(2, true);
        const CrispSet just_a{true, false};
        const CrispTopology original(u, {none, just_a, all});
        const ParameterSet params({"e1", "e2"});
        const auto lifted = fst_lift_crisp(original, params);
        const FuzzyTopology slice(u, fst_slice(lifted, "e1"));
        const auto recovered = ft_it(slice, {0.0});
        CHECK(recovered.opens().size() == original.opens().size());
        for (const auto& open : original.opens()) CHECK(recovered.contains(open));
    }

    SUBCASE("thresholds at zero give the supports") {
        const FuzzySet half(u, {1.0, 0.0});
        const FuzzyTopology ft(u, {FuzzySet::constant(u, 0.0), half,
                                   FuzzySet::constant(u, 1.0)});
        const auto crisp = ft_it(ft, {0.0});
        CHECK(crisp.contains(CrispSet{true, false}));
    }

    SUBCASE("superlevels shrink as the threshold grows") {
        Rng rng(53);
        for (int i = 0; i < 50; ++i) {
            const FuzzySet f = random_fuzzy_set(rng, u);
            const double lo = rng.uniform(0.0, 0.5);
            const double hi = rng.uniform(lo, 0.999);
            for (std::size_t x = 0; x < u.size(); ++x)
                if (f.grade(x) > hi) CHECK(f.grade(x) > lo);
        }
    }
}

TEST_CASE("alpha-cut lift") {
    const Universe u({"a", "b"});

    SUBCASE("constant one deduplicates to the indiscrete pair") {
        const auto lift = fst_lift_alpha_cuts(FuzzySet::constant(u, 1.0), {0.5, 1.0});
        CHECK(lift.collection.size() == 2);
        CHECK(lift.verdict.ok());
    }

    SUBCASE("rows flip exactly at the grade thresholds") {
        const FuzzySet mu(u, {0.3, 0.7});
        const auto lift = fst_lift_alpha_cuts(mu, {0.25, 0.5, 1.0});
        CHECK(lift.verdict.ok());
        const auto& lifted = lift.collection.back();
        CHECK(lifted.params().has_reindex());
        // alpha = 0.25: both objects sit at or above the cut.
        CHECK(lifted.row_of("0.25").grades() == std::vector<double>{1.0, 1.0});
        // alpha = 0.5: only the 0.7-grade object survives.
        CHECK(lifted.row_of("0.5").grades() == std::vector<double>{0.0, 1.0});
        // alpha = 1: nothing survives.
        CHECK(lifted.row_of("1").grades() == std::vector<double>{0.0, 0.0});
    }

    CHECK_THROWS_AS(fst_lift_alpha_cuts(FuzzySet::constant(u, 1.0), {0.0, 1.0}),
                    ValidationError);
}

TEST_CASE("neighborhoods") {
    const Universe u({"a", "b"});
    const ParameterSet params({"e1", "e2"});
    const auto phi = FuzzySoftSet::null_set(params, u);
    const auto all = FuzzySoftSet::absolute(params, u);
    const FSTopology indiscrete({phi, all});

    const FuzzySoftPoint pt("a", params, {0.5, 0.5});
    CHECK(fsn_is_neighborhood(all, pt, indiscrete));

    // Only the absolute set contains the point, so nothing below it works.
    std::vector<std::vector<double>> grades{{1.0, 1.0}, {1.0, 0.5}};
    const FuzzySoftSet g(params, u, grades);
    CHECK(!fsn_is_neighborhood(g, pt, indiscrete));

    // Quasi-neighborhood only needs coincidence somewhere below g.
    CHECK(fsn_is_q_neighborhood(all, pt, indiscrete));
    CHECK(!fsn_is_q_neighborhood(g, pt, indiscrete));

    // In a lifted topology, the lifted open around the support works.
    const CrispTopology discrete(u, {CrispSet{false, false}, CrispSet{true, false},
                                     CrispSet{false, true}, CrispSet{true, true}});
    const auto lifted = fst_lift_crisp(discrete, params);
    CHECK(fsn_is_neighborhood(lifted.opens()[1], pt, lifted));
}

TEST_CASE("separation axioms") {
    const Universe u({"a", "b"});
    const ParameterSet params({"e1"});

    const FuzzySoftPoint pa = FuzzySoftPoint::crisp("a", params);
    const FuzzySoftPoint pb = FuzzySoftPoint::crisp("b", params);

    SUBCASE("indiscrete space separates nothing") {
        const FSTopology indiscrete({FuzzySoftSet::null_set(params, u),
                                     FuzzySoftSet::absolute(params, u)});
        const auto report = fst_separation(indiscrete, {{pa, pb}});
        CHECK(!report.t0.holds);
        CHECK(report.t0.failing_pair == 0);
        CHECK(!report.t1.holds);
        CHECK(!report.t2.holds);
    }

    SUBCASE("full grade-lattice topology separates crisp points") {
        Rng rng(54);
        // All {0, 0.5, 1}-valued sets over one parameter and two objects.
        std::vector<FuzzySoftSet> all_sets;
        for (double ga : {0.0, 0.5, 1.0})
            for (double gb : {0.0, 0.5, 1.0})
                all_sets.push_back(one_param_set(u, {ga, gb}));
        const FSTopology discrete(all_sets);
        const auto report = fst_separation(discrete, {{pa, pb}});
        CHECK(report.t0.holds);
        CHECK(report.t1.holds);
        CHECK(report.t2.holds);
        CHECK(report.t2.witness_opens.size() == 2);
    }

    SUBCASE("lifted discrete crisp topology is Hausdorff on crisp points") {
        const CrispTopology discrete(u, {CrispSet{false, false}, CrispSet{true, false},
                                         CrispSet{false, true}, CrispSet{true, true}});
        const auto lifted = fst_lift_crisp(discrete, params);
        const auto report = fst_separation(lifted, {{pa, pb}});
        CHECK(report.t2.holds);
    }

    SUBCASE("equal supports are rejected up front") {
        const FSTopology indiscrete({FuzzySoftSet::null_set(params, u),
                                     FuzzySoftSet::absolute(params, u)});
        const FuzzySoftPoint pa2("a", params, {0.5});
        CHECK_THROWS_AS(fst_separation(indiscrete, {{pa, pa2}}), NotDistinctError);
    }
}
