#include "fskit/laws.hpp"

#include <cmath>
#include <optional>
#include <vector>

#include "fskit/format.hpp"
#include "fskit/normed.hpp"
#include "fskit/rng.hpp"
#include "fskit/soft_real.hpp"
#include "fskit/soft_set.hpp"

namespace fskit {

namespace {

std::vector<std::string> make_labels(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

FuzzySoftSet random_fss(Rng& rng, const ParameterSet& params, const Universe& universe,
                        int lattice_steps) {
    std::vector<std::vector<double>> grades(params.size(),
                                            std::vector<double>(universe.size()));
    for (auto& row : grades)
        for (double& g : row) g = rng.lattice(lattice_steps);
    return FuzzySoftSet(params, universe, std::move(grades));
}

/// First differing cell between two sets over identical parameter sets.
std::optional<std::string> diff_witness(const FuzzySoftSet& lhs, const FuzzySoftSet& rhs) {
    if (fs_equal(lhs, rhs)) return std::nullopt;
    for (std::size_t e = 0; e < lhs.params().size(); ++e) {
        const auto re = rhs.params().index_of(lhs.params().label(e));
        if (!re) return "parameter " + lhs.params().label(e) + " missing on one side";
        for (std::size_t x = 0; x < lhs.universe().size(); ++x)
            if (lhs.grade(e, x) != rhs.grade(*re, x))
                return "(" + lhs.params().label(e) + "," + lhs.universe().label(x) + "): " +
                       format_double(lhs.grade(e, x)) + " vs " +
                       format_double(rhs.grade(*re, x));
    }
    return "parameter sets differ";
}

FuzzySoftSet corrupt_one_grade(const FuzzySoftSet& f) {
    auto grades = f.grades();
    double& g = grades[0][0];
    g = g >= 0.5 ? g - 0.25 : g + 0.25;
    return FuzzySoftSet(f.params(), f.universe(), std::move(grades));
}

FuzzySoftSet fold_union(const std::vector<FuzzySoftSet>& family) {
    FuzzySoftSet acc = family.front();
    for (std::size_t i = 1; i < family.size(); ++i) acc = fs_union(acc, family[i]);
    return acc;
}

FuzzySoftSet fold_intersection(const std::vector<FuzzySoftSet>& family) {
    FuzzySoftSet acc = family.front();
    for (std::size_t i = 1; i < family.size(); ++i) acc = fs_intersection(acc, family[i]);
    return acc;
}

}  // namespace

LawReport law_demorgan(std::uint64_t seed, int cases, bool inject_fault) {
    LawReport report{"demorgan", seed, cases, 0, ""};
    Rng rng(seed);
    const ParameterSet params(make_labels("e", 4));
    const Universe universe(make_labels("x", 5));

    for (int c = 0; c < cases; ++c) {
        const FuzzySoftSet f = random_fss(rng, params, universe, 20);
        const FuzzySoftSet g = random_fss(rng, params, universe, 20);

        FuzzySoftSet union_lhs = fs_complement(fs_union(f, g));
        if (inject_fault && c == cases / 2) union_lhs = corrupt_one_grade(union_lhs);

        const auto union_law =
            diff_witness(union_lhs, fs_intersection(fs_complement(f), fs_complement(g)));
        const auto inter_law =
            diff_witness(fs_complement(fs_intersection(f, g)),
                         fs_union(fs_complement(f), fs_complement(g)));

        for (const auto* w : {&union_law, &inter_law}) {
            if (*w) {
                ++report.violations;
                if (report.first_witness.empty())
                    report.first_witness = "case " + std::to_string(c) + ": " + **w;
                break;
            }
        }
    }
    return report;
}

LawReport law_maplaws(std::uint64_t seed, int cases, bool inject_fault) {
    LawReport report{"maplaws", seed, cases, 0, ""};
    Rng rng(seed);

    for (int c = 0; c < cases; ++c) {
        const std::size_t nx = 2 + rng.below(3);       // 2..4
        const std::size_t ny = 1 + rng.below(nx);      // 1..nx, so u can be onto
        const std::size_t ne = 1 + rng.below(3);       // 1..3
        const std::size_t nep = 1 + rng.below(3);      // 1..3
        const Universe ux(make_labels("x", nx));
        const Universe uy(make_labels("y", ny));
        const ParameterSet pe(make_labels("e", ne));
        const ParameterSet pep(make_labels("d", nep));

        std::vector<std::size_t> object_map(nx), parameter_map(ne);
        for (std::size_t i = 0; i < nx; ++i)
            object_map[i] = i < ny ? i : rng.below(ny);  // onto by construction
        for (std::size_t i = 0; i < ne; ++i) parameter_map[i] = rng.below(nep);
        const SoftMapping h(ux, uy, pe, pep, object_map, parameter_map);

        // Shared carrier A for the image family; every B_i for the preimage
        // family contains a common anchor so the intersection stays defined.
        std::vector<std::string> a_labels;
        for (const auto& l : pe.labels())
            if (rng.coin()) a_labels.push_back(l);
        if (a_labels.empty()) a_labels.push_back(pe.label(rng.below(ne)));
        const ParameterSet pa(a_labels);

        const std::string anchor = pep.label(rng.below(nep));

        const std::size_t f_count = 1 + rng.below(3);
        std::vector<FuzzySoftSet> fs;
        for (std::size_t i = 0; i < f_count; ++i) fs.push_back(random_fss(rng, pa, ux, 20));

        const std::size_t g_count = 1 + rng.below(3);
        std::vector<FuzzySoftSet> gs;
        for (std::size_t i = 0; i < g_count; ++i) {
            std::vector<std::string> b_labels;
            for (const auto& l : pep.labels())
                if (l == anchor || rng.coin()) b_labels.push_back(l);
            gs.push_back(random_fss(rng, ParameterSet(b_labels), uy, 20));
        }

        const FuzzySoftSet f_full = random_fss(rng, pe, ux, 20);
        const FuzzySoftSet g_full = random_fss(rng, pep, uy, 20);

        std::optional<std::string> witness;
        auto note = [&](const char* item, std::optional<std::string> w) {
            if (w && !witness) witness = std::string(item) + ": " + *w;
        };
        auto check = [&](const char* item, bool ok) {
            if (!ok && !witness) witness = std::string(item) + " failed";
        };

        // 1. Null maps to null, both ways.
        check("image of null", fs_image(h, FuzzySoftSet::null_set(pa, ux)).is_null());
        check("preimage of null",
              fs_preimage(h, FuzzySoftSet::null_set(gs.front().params(), uy)).is_null());

        // 2. Image of absolute sits below absolute; preimage of absolute is
        // absolute.
        check("image of absolute below absolute",
              fs_subset(fs_image(h, FuzzySoftSet::absolute(pe, ux)),
                        FuzzySoftSet::absolute(pep, uy)));
        check("preimage of absolute",
              fs_preimage(h, FuzzySoftSet::absolute(pep, uy)).is_absolute());

        // 3. Both commute with unions.
        {
            std::vector<FuzzySoftSet> images, preimages;
            for (const auto& fi : fs) images.push_back(fs_image(h, fi));
            for (const auto& gi : gs) preimages.push_back(fs_preimage(h, gi));
            note("image of union", diff_witness(fs_image(h, fold_union(fs)), fold_union(images)));
            note("preimage of union",
                 diff_witness(fs_preimage(h, fold_union(gs)), fold_union(preimages)));

            // 4. Image of intersection sits below the intersection of images;
            // preimage commutes exactly.
            check("image of intersection",
                  fs_subset(fs_image(h, fold_intersection(fs)), fold_intersection(images)));
            note("preimage of intersection",
                 diff_witness(fs_preimage(h, fold_intersection(gs)),
                              fold_intersection(preimages)));
        }

        // 5. Complement laws over the full parameter sets.
        check("complement of image",
              fs_subset(fs_complement(fs_image(h, f_full)), fs_image(h, fs_complement(f_full))));
        FuzzySoftSet pre_complement = fs_complement(fs_preimage(h, g_full));
        if (inject_fault && c == cases / 2) pre_complement = corrupt_one_grade(pre_complement);
        note("complement of preimage",
             diff_witness(pre_complement, fs_preimage(h, fs_complement(g_full))));

        if (witness) {
            ++report.violations;
            if (report.first_witness.empty())
                report.first_witness = "case " + std::to_string(c) + ": " + *witness;
        }
    }
    return report;
}

LawReport law_identities(std::uint64_t seed, int cases, bool inject_fault) {
    LawReport report{"identities", seed, cases, 0, ""};
    Rng rng(seed);
    const ParameterSet params(make_labels("e", 2));
    const AlphaGrid grid = AlphaGrid::uniform(101);
    const FuzzySoftReal zero = fsr_crisp(0.0, params, grid);
    const FuzzySoftReal one = fsr_crisp(1.0, params, grid);

    for (int c = 0; c < cases; ++c) {
        std::vector<FuzzyReal> values;
        for (std::size_t e = 0; e < params.size(); ++e) {
            const double apex = rng.uniform(-5.0, 5.0);
            const double left = rng.uniform(0.0, 3.0);
            const double right = rng.uniform(0.0, 3.0);
            values.push_back(fr_triangular(apex - left, apex, apex + right, grid));
        }
        FuzzySoftReal a(params, std::move(values));

        std::optional<std::string> witness;
        if (!fsr_equal(fsr_add(a, zero), a, 0.0)) witness = "additive identity drifted";
        if (!witness && !fsr_equal(fsr_mul(a, one), a, 0.0))
            witness = "multiplicative identity drifted";

        const double r = rng.uniform(-10.0, 10.0);
        const double x = rng.uniform(-10.0, 10.0);
        if (!witness &&
            !fsr_equal(fsr_abs(fsr_crisp(r, params, grid)),
                       fsr_crisp(std::fabs(r), params, grid), 0.0))
            witness = "crisp |r| lift differs at r = " + format_double(r);
        double product_lift = r * x;
        if (inject_fault && c == cases / 2) product_lift += 0.125;
        if (!witness &&
            !fsr_equal(fsr_mul(fsr_crisp(r, params, grid), fsr_crisp(x, params, grid)),
                       fsr_crisp(product_lift, params, grid), 0.0))
            witness = "crisp product lift differs at r = " + format_double(r) +
                      ", x = " + format_double(x);

        if (witness) {
            ++report.violations;
            if (report.first_witness.empty())
                report.first_witness = "case " + std::to_string(c) + ": " + *witness;
        }
    }
    return report;
}

LawReport law_normaxioms(std::uint64_t seed, int cases, bool inject_fault) {
    LawReport report{"normaxioms", seed, cases, 0, ""};
    Rng rng(seed);
    const ParameterSet params(make_labels("e", 3));
    const AlphaGrid grid = AlphaGrid::uniform(101);
    std::vector<double> weights(params.size());
    for (double& w : weights) w = rng.uniform(0.5, 2.0);
    const FSNorm norm(params, grid, BaseNorm::L2, weights);

    auto random_point = [&](bool maybe_zero) {
        Vector coords(3);
        for (double& c : coords) c = rng.uniform(-5.0, 5.0);
        if (maybe_zero && rng.below(10) == 0) coords.assign(3, 0.0);
        std::vector<double> lambda(params.size());
        for (double& l : lambda)
            l = static_cast<double>(rng.below(20) + 1) / 20.0;
        return FSVectorPoint(coords, params, lambda);
    };

    for (int c = 0; c < cases; ++c) {
        const NormSample sample{random_point(true), random_point(false), rng.uniform(-3.0, 3.0)};
        const auto axioms = fsnorm_axiom_check(norm, {sample});
        int observed = axioms.violations;
        std::string witness = axioms.first_witness;
        if (inject_fault && c == cases / 2 && observed == 0) {
            // Corrupted expectation: homogeneity compared against the wrong
            // scalar. y is never the zero vector, so the sides must differ.
            const FuzzySoftReal lhs = norm.eval(fs_scalar_mul(sample.scalar, sample.y));
            const FuzzySoftReal rhs =
                fsr_mul(fsr_crisp(std::fabs(sample.scalar) + 0.25, params, grid),
                        norm.eval(sample.y));
            if (!fsr_equal(lhs, rhs, kChainTol)) {
                observed = 1;
                witness = "injected homogeneity fault";
            }
        }
        if (observed > 0) {
            ++report.violations;
            if (report.first_witness.empty())
                report.first_witness = "case " + std::to_string(c) + ": " + witness;
        }
    }
    return report;
}

}  // namespace fskit
