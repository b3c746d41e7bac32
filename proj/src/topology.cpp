#include "fskit/topology.hpp"

#include <algorithm>
#include <set>

#include "fskit/format.hpp"
#include "fskit/rng.hpp"

namespace fskit {

namespace {

std::string witness_list(const std::vector<std::size_t>& witness) {
    std::string out = "{";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(witness[i]);
    }
    return out + "}";
}

/// Shared closure driver. `n` collection members; `fold_union` folds a
/// subfamily of indices; `intersect` combines a pair; `find` locates a value
/// in the collection. Null/absolute presence is the caller's business.
template <class Value, class FoldUnion, class Intersect, class Find>
TopologyVerdict closure_check(std::size_t n, FoldUnion&& fold_union, Intersect&& intersect,
                              Find&& find, const ClosurePolicy& policy) {
    TopologyVerdict verdict;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (!find(intersect(i, j))) {
                verdict.kind = TopologyVerdict::Kind::intersection_violation;
                verdict.witness = {i, j};
                return verdict;
            }
        }
    }

    if (n <= policy.exhaustive_limit) {
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<std::size_t> indices;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) indices.push_back(i);
            if (!find(fold_union(indices))) {
                verdict.kind = TopologyVerdict::Kind::union_violation;
                verdict.witness = std::move(indices);
                return verdict;
            }
        }
    } else {
        verdict.exhaustive = false;
        Rng rng(policy.seed);
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        if (!find(fold_union(all))) {
            verdict.kind = TopologyVerdict::Kind::union_violation;
            verdict.witness = std::move(all);
            return verdict;
        }
        for (std::size_t s = 0; s < policy.samples; ++s) {
            std::vector<std::size_t> indices;
            for (std::size_t i = 0; i < n; ++i)
                if (rng.coin()) indices.push_back(i);
            if (indices.empty()) indices.push_back(rng.below(n));
            ++verdict.samples_run;
            if (!find(fold_union(indices))) {
                verdict.kind = TopologyVerdict::Kind::union_violation;
                verdict.witness = std::move(indices);
                return verdict;
            }
        }
    }
    return verdict;
}

CrispSet crisp_union(const CrispSet& a, const CrispSet& b) {
    CrispSet out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] || b[i];
    return out;
}

CrispSet crisp_intersect(const CrispSet& a, const CrispSet& b) {
    CrispSet out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
    return out;
}

}  // namespace

std::string TopologyVerdict::describe() const {
    switch (kind) {
        case Kind::ok:
            return exhaustive ? "ok"
                              : "ok (union closure sampled, " +
                                    std::to_string(samples_run) + " subfamilies)";
        case Kind::missing_null:
            return "missing null set";
        case Kind::missing_absolute:
            return "missing absolute set";
        case Kind::union_violation:
            return "union of subfamily " + witness_list(witness) + " not in collection";
        case Kind::intersection_violation:
            return "intersection of pair " + witness_list(witness) + " not in collection";
    }
    return "unknown";
}

TopologyVerdict crisp_check(const Universe& universe, const std::vector<CrispSet>& opens) {
    TopologyVerdict verdict;
    for (const auto& s : opens)
        if (s.size() != universe.size())
            throw ValidationError("crisp open size does not match universe");

    const CrispSet empty(universe.size(), false);
    const CrispSet full(universe.size(), true);
    auto find = [&](const CrispSet& s) {
        return std::find(opens.begin(), opens.end(), s) != opens.end();
    };
    if (!find(empty)) {
        verdict.kind = TopologyVerdict::Kind::missing_null;
        return verdict;
    }
    if (!find(full)) {
        verdict.kind = TopologyVerdict::Kind::missing_absolute;
        return verdict;
    }
    for (std::size_t i = 0; i < opens.size(); ++i) {
        for (std::size_t j = i; j < opens.size(); ++j) {
            if (!find(crisp_union(opens[i], opens[j]))) {
                verdict.kind = TopologyVerdict::Kind::union_violation;
                verdict.witness = {i, j};
                return verdict;
            }
            if (!find(crisp_intersect(opens[i], opens[j]))) {
                verdict.kind = TopologyVerdict::Kind::intersection_violation;
                verdict.witness = {i, j};
                return verdict;
            }
        }
    }
    return verdict;
}

CrispTopology::CrispTopology(Universe universe, std::vector<CrispSet> opens)
    : universe_(std::move(universe)), opens_(std::move(opens)) {
    const auto verdict = crisp_check(universe_, opens_);
    if (!verdict.ok())
        throw ValidationError("not a point-set topology: " + verdict.describe());
}

bool CrispTopology::contains(const CrispSet& s) const {
    return std::find(opens_.begin(), opens_.end(), s) != opens_.end();
}

TopologyVerdict fuzzy_check(const Universe& universe, const std::vector<FuzzySet>& opens,
                            const ClosurePolicy& policy) {
    TopologyVerdict verdict;
    for (const auto& f : opens)
        if (f.universe() != universe)
            throw UniverseMismatchError("fuzzy open over the wrong universe");

    auto is_zero = [](const FuzzySet& f) {
        return std::all_of(f.grades().begin(), f.grades().end(),
                           [](double g) { return g == 0.0; });
    };
    auto is_one = [](const FuzzySet& f) {
        return std::all_of(f.grades().begin(), f.grades().end(),
                           [](double g) { return g == 1.0; });
    };
    if (std::none_of(opens.begin(), opens.end(), is_zero)) {
        verdict.kind = TopologyVerdict::Kind::missing_null;
        return verdict;
    }
    if (std::none_of(opens.begin(), opens.end(), is_one)) {
        verdict.kind = TopologyVerdict::Kind::missing_absolute;
        return verdict;
    }

    auto find = [&](const FuzzySet& f) {
        return std::any_of(opens.begin(), opens.end(),
                           [&](const FuzzySet& g) { return g.grades() == f.grades(); });
    };
    auto fold_union = [&](const std::vector<std::size_t>& indices) {
        FuzzySet acc = opens[indices.front()];
        for (std::size_t k = 1; k < indices.size(); ++k)
            acc = fz_max(acc, opens[indices[k]]);
        return acc;
    };
    auto intersect = [&](std::size_t i, std::size_t j) { return fz_min(opens[i], opens[j]); };
    return closure_check<FuzzySet>(opens.size(), fold_union, intersect, find, policy);
}

FuzzyTopology::FuzzyTopology(Universe universe, std::vector<FuzzySet> opens,
                             const ClosurePolicy& policy)
    : universe_(std::move(universe)), opens_(std::move(opens)) {
    const auto verdict = fuzzy_check(universe_, opens_, policy);
    if (!verdict.ok())
        throw ValidationError("not a fuzzy topology: " + verdict.describe());
}

TopologyVerdict fst_check(const std::vector<FuzzySoftSet>& opens,
                          const ClosurePolicy& policy) {
    TopologyVerdict verdict;
    if (opens.empty()) {
        verdict.kind = TopologyVerdict::Kind::missing_null;
        return verdict;
    }
    for (const auto& f : opens) {
        if (f.universe() != opens.front().universe())
            throw UniverseMismatchError("collection members over different universes");
        if (f.params() != opens.front().params())
            throw ParameterMismatchError("collection members over different parameter sets");
    }

    if (std::none_of(opens.begin(), opens.end(),
                     [](const FuzzySoftSet& f) { return f.is_null(); })) {
        verdict.kind = TopologyVerdict::Kind::missing_null;
        return verdict;
    }
    if (std::none_of(opens.begin(), opens.end(),
                     [](const FuzzySoftSet& f) { return f.is_absolute(); })) {
        verdict.kind = TopologyVerdict::Kind::missing_absolute;
        return verdict;
    }

    auto find = [&](const FuzzySoftSet& f) {
        return std::any_of(opens.begin(), opens.end(), [&](const FuzzySoftSet& g) {
            return g.grades() == f.grades();
        });
    };
    auto fold_union = [&](const std::vector<std::size_t>& indices) {
        FuzzySoftSet acc = opens[indices.front()];
        for (std::size_t k = 1; k < indices.size(); ++k)
            acc = fs_union(acc, opens[indices[k]]);
        return acc;
    };
    auto intersect = [&](std::size_t i, std::size_t j) {
        return fs_intersection(opens[i], opens[j]);
    };
    return closure_check<FuzzySoftSet>(opens.size(), fold_union, intersect, find, policy);
}

FSTopology::FSTopology(std::vector<FuzzySoftSet> opens, const ClosurePolicy& policy)
    : opens_(std::move(opens)) {
    const auto verdict = fst_check(opens_, policy);
    if (!verdict.ok())
        throw ValidationError("not a fuzzy soft topology: " + verdict.describe());
}

std::vector<FuzzySet> fst_slice(const FSTopology& t, std::string_view param_label) {
    auto e = t.params().index_of(param_label);
    if (!e) throw ParameterMismatchError("unknown parameter: " + std::string(param_label));
    std::vector<FuzzySet> out;
    for (const auto& f : t.opens()) {
        FuzzySet row = f.row(*e);
        const bool seen = std::any_of(out.begin(), out.end(), [&](const FuzzySet& g) {
            return g.grades() == row.grades();
        });
        if (!seen) out.push_back(std::move(row));
    }
    return out;
}

FSTopology fst_lift_crisp(const CrispTopology& t, const ParameterSet& params) {
    std::vector<FuzzySoftSet> opens;
    opens.reserve(t.opens().size());
    for (const auto& open : t.opens()) {
        std::vector<double> indicator(open.size());
        for (std::size_t x = 0; x < open.size(); ++x) indicator[x] = open[x] ? 1.0 : 0.0;
        std::vector<std::vector<double>> grades(params.size(), indicator);
        opens.emplace_back(params, t.universe(), std::move(grades));
    }
    return FSTopology(std::move(opens));
}

bool fst_membership_wprime(const FuzzySoftSet& f, const CrispTopology& t,
                           const std::vector<double>& grade_grid) {
    if (f.universe() != t.universe())
        throw UniverseMismatchError("set and topology over different universes");
    std::set<double> thresholds{0.0};
    for (double g : grade_grid)
        if (g >= 0.0 && g < 1.0) thresholds.insert(g);
    for (std::size_t e = 0; e < f.params().size(); ++e) {
        for (double thr : thresholds) {
            CrispSet superlevel(f.universe().size());
            for (std::size_t x = 0; x < f.universe().size(); ++x)
                superlevel[x] = f.grade(e, x) > thr;
            if (!t.contains(superlevel)) return false;
        }
    }
    return true;
}

CrispTopology ft_it(const FuzzyTopology& ft, const std::vector<double>& thresholds) {
    std::vector<CrispSet> family;
    auto push_unique = [&](CrispSet s) {
        if (std::find(family.begin(), family.end(), s) == family.end())
            family.push_back(std::move(s));
    };
    for (const auto& open : ft.opens()) {
        for (double thr : thresholds) {
            if (!(thr >= 0.0 && thr < 1.0)) continue;
            CrispSet superlevel(ft.universe().size());
            for (std::size_t x = 0; x < ft.universe().size(); ++x)
                superlevel[x] = open.grade(x) > thr;
            push_unique(std::move(superlevel));
        }
    }
    // Close under pairwise union/intersection; the family is finite.
    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t n = family.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                for (auto& candidate :
                     {crisp_union(family[i], family[j]), crisp_intersect(family[i], family[j])}) {
                    if (std::find(family.begin(), family.end(), candidate) == family.end()) {
                        family.push_back(candidate);
                        changed = true;
                    }
                }
            }
        }
    }
    return CrispTopology(ft.universe(), std::move(family));
}

AlphaCutLift fst_lift_alpha_cuts(const FuzzySet& mu, const std::vector<double>& levels) {
    if (levels.empty()) throw ValidationError("alpha-cut lift needs at least one level");
    std::vector<std::string> labels;
    for (double a : levels) {
        if (!(a > 0.0 && a <= 1.0))
            throw ValidationError("alpha level must lie in (0,1]: " + format_double(a));
        labels.push_back(format_double(a));
    }
    ParameterSet params(labels, levels);

    std::vector<std::vector<double>> grades;
    grades.reserve(levels.size());
    for (double a : levels) {
        std::vector<double> row(mu.size());
        for (std::size_t x = 0; x < mu.size(); ++x) row[x] = mu.grade(x) >= a ? 1.0 : 0.0;
        grades.push_back(std::move(row));
    }

    AlphaCutLift out;
    out.collection.push_back(FuzzySoftSet::null_set(params, mu.universe()));
    out.collection.push_back(FuzzySoftSet::absolute(params, mu.universe()));
    FuzzySoftSet lifted(params, mu.universe(), std::move(grades));
    const bool duplicate = std::any_of(
        out.collection.begin(), out.collection.end(),
        [&](const FuzzySoftSet& g) { return g.grades() == lifted.grades(); });
    if (!duplicate) out.collection.push_back(std::move(lifted));
    out.verdict = fst_check(out.collection);
    return out;
}

bool fsn_is_neighborhood(const FuzzySoftSet& g, const FuzzySoftPoint& pt,
                         const FSTopology& t) {
    return std::any_of(t.opens().begin(), t.opens().end(), [&](const FuzzySoftSet& f) {
        return fsp_member(pt, f) && fs_subset(f, g);
    });
}

bool fsn_is_q_neighborhood(const FuzzySoftSet& g, const FuzzySoftPoint& pt,
                           const FSTopology& t) {
    return std::any_of(t.opens().begin(), t.opens().end(), [&](const FuzzySoftSet& f) {
        return fsp_quasi_coincident(pt, f) && fs_subset(f, g);
    });
}

SeparationReport fst_separation(
    const FSTopology& t,
    const std::vector<std::pair<FuzzySoftPoint, FuzzySoftPoint>>& pairs) {
    SeparationReport report;
    const auto& opens = t.opens();

    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& [a, b] = pairs[p];
        if (!fsp_distinct(a, b))
            throw NotDistinctError("separation sample pair " + std::to_string(p) +
                                   " has equal supports");
        const FuzzySoftSet sa = to_set(a, t.universe());
        const FuzzySoftSet sb = to_set(b, t.universe());

        auto misses = [&](const FuzzySoftSet& f, const FuzzySoftSet& point_set) {
            return fs_intersection(f, point_set).is_null();
        };

        // T0: one of the two points has an open containing it and missing
        // the other point.
        std::optional<std::size_t> t0_witness;
        for (std::size_t i = 0; i < opens.size() && !t0_witness; ++i) {
            if ((fsp_member(a, opens[i]) && misses(opens[i], sb)) ||
                (fsp_member(b, opens[i]) && misses(opens[i], sa)))
                t0_witness = i;
        }
        if (!t0_witness && report.t0.holds) {
            report.t0.holds = false;
            report.t0.failing_pair = p;
        } else if (t0_witness && report.t0.holds && report.t0.witness_opens.empty()) {
            report.t0.witness_opens = {*t0_witness};
        }

        // T1: each point has an open containing it and missing the other.
        std::optional<std::size_t> fa, fb;
        for (std::size_t i = 0; i < opens.size(); ++i) {
            if (!fa && fsp_member(a, opens[i]) && misses(opens[i], sb)) fa = i;
            if (!fb && fsp_member(b, opens[i]) && misses(opens[i], sa)) fb = i;
        }
        if (!(fa && fb) && report.t1.holds) {
            report.t1.holds = false;
            report.t1.failing_pair = p;
        } else if (fa && fb && report.t1.holds && report.t1.witness_opens.empty()) {
            report.t1.witness_opens = {*fa, *fb};
        }

        // T2: disjoint opens around the two points.
        std::optional<std::pair<std::size_t, std::size_t>> t2_witness;
        for (std::size_t i = 0; i < opens.size() && !t2_witness; ++i) {
            if (!fsp_member(a, opens[i])) continue;
            for (std::size_t j = 0; j < opens.size() && !t2_witness; ++j) {
                if (!fsp_member(b, opens[j])) continue;
                if (fs_intersection(opens[i], opens[j]).is_null()) t2_witness = {i, j};
            }
        }
        if (!t2_witness && report.t2.holds) {
            report.t2.holds = false;
            report.t2.failing_pair = p;
        } else if (t2_witness && report.t2.holds && report.t2.witness_opens.empty()) {
            report.t2.witness_opens = {t2_witness->first, t2_witness->second};
        }

        ++report.pairs_checked;
    }
    return report;
}

}  // namespace fskit
