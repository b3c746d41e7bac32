#pragma once

#include <string>
#include <vector>

#include "fskit/rng.hpp"
#include "fskit/soft_set.hpp"

namespace fskit::test {

inline Universe forest_universe() { return Universe({"A", "B", "C"}); }

inline ParameterSet forest_params() { return ParameterSet({"e1", "e2", "e3", "e4"}); }

/// Grade table of the three-region example used across the suites.
inline FuzzySoftSet forest_set() {
    return FuzzySoftSet(forest_params(), forest_universe(),
                        {{0.8, 0.3, 0.5},
                         {0.1, 0.5, 0.7},
                         {0.2, 0.3, 0.8},
                         {0.1, 0.3, 0.5}});
}

inline std::vector<std::string> labels(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

inline FuzzySet random_fuzzy_set(Rng& rng, const Universe& u) {
    std::vector<double> grades(u.size());
    for (double& g : grades) g = rng.uniform01();
    return FuzzySet(u, std::move(grades));
}

inline FuzzySoftSet random_soft_set(Rng& rng, const ParameterSet& params, const Universe& u) {
    std::vector<std::vector<double>> grades(params.size(), std::vector<double>(u.size()));
    for (auto& row : grades)
        for (double& g : row) g = rng.uniform01();
    return FuzzySoftSet(params, u, std::move(grades));
}

inline FuzzySoftSet random_lattice_soft_set(Rng& rng, const ParameterSet& params,
                                            const Universe& u,
                                            const std::vector<double>& lattice) {
    std::vector<std::vector<double>> grades(params.size(), std::vector<double>(u.size()));
    for (auto& row : grades)
        for (double& g : row) g = rng.pick(lattice);
    return FuzzySoftSet(params, u, std::move(grades));
}

/// Seed sets plus the null/absolute sets, closed under pairwise union and
/// intersection. On a finite grade lattice the closure is finite and is a
/// fuzzy soft topology by construction.
inline std::vector<FuzzySoftSet> random_topology_collection(
    Rng& rng, const ParameterSet& params, const Universe& u,
    const std::vector<double>& lattice, int seed_sets) {
    std::vector<FuzzySoftSet> family{FuzzySoftSet::null_set(params, u),
                                     FuzzySoftSet::absolute(params, u)};
    auto push_unique = [&](FuzzySoftSet f) {
        for (const auto& g : family)
            if (g.grades() == f.grades()) return;
        family.push_back(std::move(f));
    };
    for (int i = 0; i < seed_sets; ++i)
        push_unique(random_lattice_soft_set(rng, params, u, lattice));

    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t n = family.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                for (auto& candidate : {fs_union(family[i], family[j]),
                                        fs_intersection(family[i], family[j])}) {
                    const bool seen = [&] {
                        for (const auto& g : family)
                            if (g.grades() == candidate.grades()) return true;
                        return false;
                    }();
                    if (!seen) {
                        family.push_back(candidate);
                        changed = true;
                    }
                }
            }
        }
    }
    return family;
}

}  // namespace fskit::test
