#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fskit/soft_set.hpp"

namespace fskit {

/// How union-closure is verified: every subfamily is enumerated while the
/// collection holds at most `exhaustive_limit` members (2^n subfamilies);
/// larger collections get `samples` random subfamilies plus the full-family
/// union. Pairwise intersections are always checked exhaustively.
struct ClosurePolicy {
    std::size_t exhaustive_limit = 12;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
};

/// Outcome of a topology axiom check. `witness` lists the offending member
/// indices (the violating pair, or the subfamily whose union is missing).
struct TopologyVerdict {
    enum class Kind {
        ok,
        missing_null,
        missing_absolute,
        union_violation,
        intersection_violation,
    };

    Kind kind = Kind::ok;
    std::vector<std::size_t> witness;
    bool exhaustive = true;        // false when union closure was sampled
    std::size_t samples_run = 0;

    bool ok() const noexcept { return kind == Kind::ok; }
    std::string describe() const;
};

/// Finite point-set topology: opens are object subsets stored as indicator
/// vectors aligned with the universe.
using CrispSet = std::vector<bool>;

TopologyVerdict crisp_check(const Universe& universe, const std::vector<CrispSet>& opens);

class CrispTopology {
public:
    CrispTopology(Universe universe, std::vector<CrispSet> opens);

    const Universe& universe() const noexcept { return universe_; }
    const std::vector<CrispSet>& opens() const noexcept { return opens_; }
    bool contains(const CrispSet& s) const;

private:
    Universe universe_;
    std::vector<CrispSet> opens_;
};

/// Finite fuzzy topology: opens are fuzzy sets over one universe.
TopologyVerdict fuzzy_check(const Universe& universe, const std::vector<FuzzySet>& opens,
                            const ClosurePolicy& policy = {});

class FuzzyTopology {
public:
    FuzzyTopology(Universe universe, std::vector<FuzzySet> opens,
                  const ClosurePolicy& policy = {});

    const Universe& universe() const noexcept { return universe_; }
    const std::vector<FuzzySet>& opens() const noexcept { return opens_; }

private:
    Universe universe_;
    std::vector<FuzzySet> opens_;
};

/// Exhaustive verification of the fuzzy soft topology axioms over an
/// explicit collection. All members must share one (parameter set, universe).
TopologyVerdict fst_check(const std::vector<FuzzySoftSet>& opens,
                          const ClosurePolicy& policy = {});

class FSTopology {
public:
    /// Throws ValidationError when the collection fails fst_check.
    FSTopology(std::vector<FuzzySoftSet> opens, const ClosurePolicy& policy = {});

    const ParameterSet& params() const { return opens_.front().params(); }
    const Universe& universe() const { return opens_.front().universe(); }
    const std::vector<FuzzySoftSet>& opens() const noexcept { return opens_; }

private:
    std::vector<FuzzySoftSet> opens_;
};

/// The fuzzy sets carried at one parameter by every open, deduplicated.
std::vector<FuzzySet> fst_slice(const FSTopology& t, std::string_view param_label);

/// Lift every crisp open to the fuzzy soft set whose rows are all its
/// characteristic function.
FSTopology fst_lift_crisp(const CrispTopology& t, const ParameterSet& params);

/// Membership in the (unenumerable) fuzzy soft topology generated by a crisp
/// topology: every strict superlevel set of every row must be open. The
/// thresholds checked are grade_grid plus 0; with grades restricted to
/// grade_grid this is exhaustive.
bool fst_membership_wprime(const FuzzySoftSet& f, const CrispTopology& t,
                           const std::vector<double>& grade_grid);

/// Strict superlevel sets of every open at every threshold, closed up under
/// pairwise union and intersection.
CrispTopology ft_it(const FuzzyTopology& ft, const std::vector<double>& thresholds);

/// Candidate collection built from the characteristic functions of the
/// alpha-cuts of mu, one row per level, with the null and absolute sets
/// adjoined. The verdict is reported, not asserted.
struct AlphaCutLift {
    std::vector<FuzzySoftSet> collection;
    TopologyVerdict verdict;
};
AlphaCutLift fst_lift_alpha_cuts(const FuzzySet& mu, const std::vector<double>& levels);

/// Neighborhood: some open f with pt in f and f below g.
bool fsn_is_neighborhood(const FuzzySoftSet& g, const FuzzySoftPoint& pt,
                         const FSTopology& t);
/// Quasi-neighborhood: some open f quasi-coincident with pt and below g.
bool fsn_is_q_neighborhood(const FuzzySoftSet& g, const FuzzySoftPoint& pt,
                           const FSTopology& t);

/// Separation verdicts over a sample of distinct point pairs. A failing
/// axiom names the first pair with no separating opens; a holding axiom
/// names witness opens for the first pair.
struct SeparationReport {
    struct Axiom {
        bool holds = true;
        std::optional<std::size_t> failing_pair;
        std::vector<std::size_t> witness_opens;
    };

    Axiom t0, t1, t2;
    std::size_t pairs_checked = 0;
};

SeparationReport fst_separation(
    const FSTopology& t,
    const std::vector<std::pair<FuzzySoftPoint, FuzzySoftPoint>>& pairs);

}  // namespace fskit
