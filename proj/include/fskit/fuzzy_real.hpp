#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fskit/errors.hpp"

namespace fskit {

/// Discretization carrier for alpha in (0,1]: strictly increasing levels
/// ending exactly at 1.
class AlphaGrid {
public:
    explicit AlphaGrid(std::vector<double> levels);

    /// Levels j/m for j = 1..m. The default m = 101 balances oracle
    /// agreement (level gap 1/101) against speed.
    static AlphaGrid uniform(std::size_t m = 101);

    std::size_t size() const noexcept { return levels_.size(); }
    double level(std::size_t j) const { return levels_.at(j); }
    const std::vector<double>& levels() const noexcept { return levels_; }
    std::optional<std::size_t> index_of(double alpha) const;

    bool operator==(const AlphaGrid& other) const { return levels_ == other.levels_; }
    bool operator!=(const AlphaGrid& other) const { return !(*this == other); }

private:
    std::vector<double> levels_;
};

using Interval = std::pair<double, double>;

/// Fuzzy real number represented by its nested family of closed alpha-cuts
/// [lower(j), upper(j)], one per grid level. Convexity and upper
/// semicontinuity are encoded by the interval representation itself.
class FuzzyReal {
public:
    FuzzyReal(AlphaGrid grid, std::vector<double> lower, std::vector<double> upper);

    const AlphaGrid& grid() const noexcept { return grid_; }
    std::size_t levels() const noexcept { return lower_.size(); }
    double lower(std::size_t j) const { return lower_.at(j); }
    double upper(std::size_t j) const { return upper_.at(j); }
    const std::vector<double>& lowers() const noexcept { return lower_; }
    const std::vector<double>& uppers() const noexcept { return upper_; }
    Interval cut(std::size_t j) const { return {lower_.at(j), upper_.at(j)}; }
    Interval cut_at(double alpha) const;

private:
    AlphaGrid grid_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Records whether an arithmetic result needed re-normalization to restore
/// the nested-cut invariant, and by how much endpoints moved.
struct ArithmeticTrace {
    bool normalized = false;
    double max_shift = 0.0;
};

/// Characteristic function of r: every cut is [r, r].
FuzzyReal fr_crisp(double r, const AlphaGrid& grid);

/// Triangular number with feet a, c and apex b (a <= b <= c):
/// cut(alpha) = [a + alpha(b-a), c - alpha(c-b)].
FuzzyReal fr_triangular(double a, double b, double c, const AlphaGrid& grid);

/// Level-wise interval arithmetic. Addition and multiplication are
/// inclusion-monotone and never need repair; the subtraction and division
/// formulas here (min/max of the endpoint differences/quotients rather than
/// the cross combinations) can yield a non-nested raw family, which is then
/// re-normalized to the tightest nested family containing every raw cut.
/// The trace, when supplied, reports that repair.
FuzzyReal fr_add(const FuzzyReal& a, const FuzzyReal& b, ArithmeticTrace* trace = nullptr);
FuzzyReal fr_sub(const FuzzyReal& a, const FuzzyReal& b, ArithmeticTrace* trace = nullptr);
FuzzyReal fr_mul(const FuzzyReal& a, const FuzzyReal& b, ArithmeticTrace* trace = nullptr);
/// Requires zero strictly outside every cut of b (boundary-touching
/// divisors are rejected).
FuzzyReal fr_div(const FuzzyReal& a, const FuzzyReal& b, ArithmeticTrace* trace = nullptr);

/// Level-wise [max{0, lo, -hi}, max{|lo|, |hi|}].
FuzzyReal fr_abs(const FuzzyReal& a);

bool fr_is_nonnegative(const FuzzyReal& a);

/// Cut-wise partial order: both endpoints of a never exceed those of b.
bool fr_leq(const FuzzyReal& a, const FuzzyReal& b);
/// Cut-wise endpoint equality within tol (tol = 0 means identical arrays).
bool fr_equal(const FuzzyReal& a, const FuzzyReal& b, double tol);

/// Membership recovered from the nested cuts, piecewise linear between
/// grid levels; zero outside the widest cut, one inside the top cut.
double fr_membership(const FuzzyReal& a, double t);

/// Discretized membership function produced by the sup-min oracle.
struct MembershipCurve {
    std::vector<double> ts;
    std::vector<double> membership;

    double max_membership() const;
    /// [first, last] node with membership >= alpha. When no node reaches
    /// alpha the threshold falls back to the best membership attained, so
    /// near-degenerate top cuts still recover a witness interval.
    Interval recovered_cut(double alpha) const;
};

/// Brute-force sup-min convolutions over regular support grids; these are
/// the independent oracles for the level-wise arithmetic above. The
/// decomposition variable is sampled over both operands' supports, so
/// one-point (crisp) operands are still hit exactly.
MembershipCurve fr_ext_add(const FuzzyReal& a, const FuzzyReal& b, double support_step);
/// sup_s min{a(s), b(s - t)}: note this recovers cuts [a_lo - b_hi, a_hi - b_lo],
/// which differs in general from the level-wise subtraction formula.
MembershipCurve fr_ext_sub(const FuzzyReal& a, const FuzzyReal& b, double support_step);
/// sup over s != 0 of min{a(s), b(t/s)}.
MembershipCurve fr_ext_mul(const FuzzyReal& a, const FuzzyReal& b, double support_step);
/// sup_s min{a(s t), b(s)}: implemented exactly as that unusual form, for
/// comparison only.
MembershipCurve fr_ext_div(const FuzzyReal& a, const FuzzyReal& b, double support_step);

/// Largest cut-wise endpoint deviation between a fuzzy real and an oracle
/// curve, over every grid level.
double fr_max_cut_deviation(const FuzzyReal& a, const MembershipCurve& curve);

}  // namespace fskit
