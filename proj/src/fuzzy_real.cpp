#include "fskit/fuzzy_real.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fskit {

namespace {

void require_same_grid(const FuzzyReal& a, const FuzzyReal& b) {
    if (a.grid() != b.grid())
        throw GridMismatchError("fuzzy reals live on different alpha grids");
}

/// Repair a raw endpoint family into the tightest nested family containing
/// every raw cut: sweep from the top level down, widening as needed.
void normalize_nested(std::vector<double>& lo, std::vector<double>& hi,
                      ArithmeticTrace* trace) {
    double shift = 0.0;
    for (std::size_t j = lo.size() - 1; j-- > 0;) {
        const double nl = std::min(lo[j], lo[j + 1]);
        const double nh = std::max(hi[j], hi[j + 1]);
        shift = std::max(shift, std::max(lo[j] - nl, nh - hi[j]));
        lo[j] = nl;
        hi[j] = nh;
    }
    if (trace) {
        trace->normalized = trace->normalized || shift > 0.0;
        trace->max_shift = std::max(trace->max_shift, shift);
    }
}

template <class LevelOp>
FuzzyReal levelwise(const FuzzyReal& a, const FuzzyReal& b, ArithmeticTrace* trace,
                    LevelOp&& op) {
    require_same_grid(a, b);
    std::vector<double> lo(a.levels()), hi(a.levels());
    for (std::size_t j = 0; j < a.levels(); ++j) {
        const auto [l, h] = op(a.lower(j), a.upper(j), b.lower(j), b.upper(j));
        lo[j] = l;
        hi[j] = h;
    }
    normalize_nested(lo, hi, trace);
    return FuzzyReal(a.grid(), std::move(lo), std::move(hi));
}

std::vector<double> support_grid(double lo, double hi, double step) {
    if (!(step > 0.0)) throw ValidationError("support step must be positive");
    std::vector<double> nodes;
    if (hi <= lo) {
        nodes.push_back(lo);
        return nodes;
    }
    for (double t = lo; t < hi; t += step) nodes.push_back(t);
    nodes.push_back(hi);
    return nodes;
}

}  // namespace

AlphaGrid::AlphaGrid(std::vector<double> levels) : levels_(std::move(levels)) {
    if (levels_.size() < 2) throw ValidationError("alpha grid needs at least two levels");
    if (!(levels_.front() > 0.0)) throw ValidationError("alpha levels must be positive");
    for (std::size_t j = 1; j < levels_.size(); ++j)
        if (!(levels_[j] > levels_[j - 1]))
            throw ValidationError("alpha levels must be strictly increasing");
    if (levels_.back() != 1.0) throw ValidationError("last alpha level must be exactly 1");
}

AlphaGrid AlphaGrid::uniform(std::size_t m) {
    std::vector<double> levels(m);
    for (std::size_t j = 0; j < m; ++j)
        levels[j] = static_cast<double>(j + 1) / static_cast<double>(m);
    levels.back() = 1.0;
    return AlphaGrid(std::move(levels));
}

std::optional<std::size_t> AlphaGrid::index_of(double alpha) const {
    auto it = std::lower_bound(levels_.begin(), levels_.end(), alpha);
    if (it != levels_.end() && *it == alpha)
        return static_cast<std::size_t>(it - levels_.begin());
    return std::nullopt;
}

FuzzyReal::FuzzyReal(AlphaGrid grid, std::vector<double> lower, std::vector<double> upper)
    : grid_(std::move(grid)), lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != grid_.size() || upper_.size() != grid_.size())
        throw ValidationError("cut endpoint count does not match alpha grid size");
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (!std::isfinite(lower_[j]) || !std::isfinite(upper_[j]))
            throw ValidationError("cut endpoints must be finite");
        if (!(lower_[j] <= upper_[j]))
            throw ValidationError("empty cut at level " + std::to_string(grid_.level(j)));
    }
    for (std::size_t j = 1; j < lower_.size(); ++j)
        if (lower_[j] < lower_[j - 1] || upper_[j] > upper_[j - 1])
            throw ValidationError("cuts are not nested");
}

Interval FuzzyReal::cut_at(double alpha) const {
    auto j = grid_.index_of(alpha);
    if (!j)
        throw ValidationError("alpha level not on grid: " + std::to_string(alpha));
    return cut(*j);
}

FuzzyReal fr_crisp(double r, const AlphaGrid& grid) {
    return FuzzyReal(grid, std::vector<double>(grid.size(), r),
                     std::vector<double>(grid.size(), r));
}

FuzzyReal fr_triangular(double a, double b, double c, const AlphaGrid& grid) {
    if (!(a <= b && b <= c))
        throw ValidationError("triangular number requires a <= b <= c");
    std::vector<double> lo(grid.size()), hi(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double alpha = grid.level(j);
        // Clamp to the apex so rounding cannot push a cut past it.
        lo[j] = std::min(a + alpha * (b - a), b);
        hi[j] = std::max(c - alpha * (c - b), b);
    }
    lo.back() = b;
    hi.back() = b;
    return FuzzyReal(grid, std::move(lo), std::move(hi));
}

FuzzyReal fr_add(const FuzzyReal& a, const FuzzyReal& b, ArithmeticTrace* trace) {
    return levelwise(a, b, trace, [](double al, double ah, double bl, double bh) {
        return Interval{al + bl, ah + bh};
    });
}

FuzzyReal fr_sub(const FuzzyReal& a, const FuzzyReal& b, ArithmeticTrace* trace) {
    return levelwise(a, b, trace, [](double al, double ah, double bl, double bh) {
        const double d1 = al - bl;
        const double d2 = ah - bh;
        return Interval{std::min(d1, d2), std::max(d1, d2)};
    });
}

FuzzyReal fr_mul(const FuzzyReal& a, const FuzzyReal& b, ArithmeticTrace* trace) {
    return levelwise(a, b, trace, [](double al, double ah, double bl, double bh) {
        const double p1 = al * bl, p2 = ah * bh, p3 = al * bh, p4 = ah * bl;
        return Interval{std::min(std::min(p1, p2), std::min(p3, p4)),
                        std::max(std::max(p1, p2), std::max(p3, p4))};
    });
}

FuzzyReal fr_div(const FuzzyReal& a, const FuzzyReal& b, ArithmeticTrace* trace) {
    require_same_grid(a, b);
    if (!(b.lower(0) > 0.0 || b.upper(0) < 0.0))
        throw DivisionByIntervalContainingZeroError(
            "divisor cut contains or touches zero at level " +
            std::to_string(b.grid().level(0)));
    return levelwise(a, b, trace, [](double al, double ah, double bl, double bh) {
        const double q1 = al / bl, q2 = ah / bh, q3 = al / bh, q4 = ah / bl;
        return Interval{std::min(std::min(q1, q2), std::min(q3, q4)),
                        std::max(std::max(q1, q2), std::max(q3, q4))};
    });
}

FuzzyReal fr_abs(const FuzzyReal& a) {
    std::vector<double> lo(a.levels()), hi(a.levels());
    for (std::size_t j = 0; j < a.levels(); ++j) {
        lo[j] = std::max({0.0, a.lower(j), -a.upper(j)});
        hi[j] = std::max(std::fabs(a.lower(j)), std::fabs(a.upper(j)));
    }
    return FuzzyReal(a.grid(), std::move(lo), std::move(hi));
}

bool fr_is_nonnegative(const FuzzyReal& a) { return a.lower(0) >= 0.0; }

bool fr_leq(const FuzzyReal& a, const FuzzyReal& b) {
    require_same_grid(a, b);
    for (std::size_t j = 0; j < a.levels(); ++j)
        if (a.lower(j) > b.lower(j) || a.upper(j) > b.upper(j)) return false;
    return true;
}

bool fr_equal(const FuzzyReal& a, const FuzzyReal& b, double tol) {
    require_same_grid(a, b);
    for (std::size_t j = 0; j < a.levels(); ++j)
        if (std::fabs(a.lower(j) - b.lower(j)) > tol ||
            std::fabs(a.upper(j) - b.upper(j)) > tol)
            return false;
    return true;
}

double fr_membership(const FuzzyReal& a, double t) {
    if (t < a.lower(0) || t > a.upper(0)) return 0.0;
    // Containment is monotone in the level index: binary-search the last
    // level whose cut still contains t.
    std::size_t lo = 0, hi = a.levels() - 1;
    if (a.lower(hi) <= t && t <= a.upper(hi)) return 1.0;
    while (lo + 1 < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (a.lower(mid) <= t && t <= a.upper(mid))
            lo = mid;
        else
            hi = mid;
    }
    const std::size_t j = lo;
    const double a0 = a.grid().level(j), a1 = a.grid().level(j + 1);
    double from_left = a1, from_right = a1;
    if (t < a.lower(j + 1))
        from_left = a0 + (a1 - a0) * (t - a.lower(j)) / (a.lower(j + 1) - a.lower(j));
    if (t > a.upper(j + 1))
        from_right = a0 + (a1 - a0) * (a.upper(j) - t) / (a.upper(j) - a.upper(j + 1));
    return std::min(from_left, from_right);
}

double MembershipCurve::max_membership() const {
    double best = 0.0;
    for (double m : membership) best = std::max(best, m);
    return best;
}

Interval MembershipCurve::recovered_cut(double alpha) const {
    if (ts.empty()) throw ValidationError("empty membership curve");
    const double thresh = std::min(alpha, max_membership()) - 1e-12;
    double first = 0.0, last = 0.0;
    bool seen = false;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (membership[i] >= thresh) {
            if (!seen) first = ts[i];
            last = ts[i];
            seen = true;
        }
    }
    return {first, last};
}

// The decomposition variable is sampled over both operands' supports: a
// crisp operand is a one-point spike that sampling on the other side alone
// almost never lands on, while its own support grid hits it exactly.

MembershipCurve fr_ext_add(const FuzzyReal& a, const FuzzyReal& b, double support_step) {
    const auto sa = support_grid(a.lower(0), a.upper(0), support_step);
    const auto sb = support_grid(b.lower(0), b.upper(0), support_step);
    MembershipCurve out;
    out.ts = support_grid(a.lower(0) + b.lower(0), a.upper(0) + b.upper(0), support_step);
    out.membership.resize(out.ts.size());
    for (std::size_t i = 0; i < out.ts.size(); ++i) {
        const double t = out.ts[i];
        double best = 0.0;
        for (double s : sa)
            best = std::max(best, std::min(fr_membership(a, s), fr_membership(b, t - s)));
        for (double s : sb)
            best = std::max(best, std::min(fr_membership(a, t - s), fr_membership(b, s)));
        out.membership[i] = best;
    }
    return out;
}

MembershipCurve fr_ext_sub(const FuzzyReal& a, const FuzzyReal& b, double support_step) {
    const auto sa = support_grid(a.lower(0), a.upper(0), support_step);
    const auto sb = support_grid(b.lower(0), b.upper(0), support_step);
    MembershipCurve out;
    out.ts = support_grid(a.lower(0) - b.upper(0), a.upper(0) - b.lower(0), support_step);
    out.membership.resize(out.ts.size());
    for (std::size_t i = 0; i < out.ts.size(); ++i) {
        const double t = out.ts[i];
        double best = 0.0;
        for (double s : sa)
            best = std::max(best, std::min(fr_membership(a, s), fr_membership(b, s - t)));
        for (double s : sb)
            best = std::max(best, std::min(fr_membership(a, s + t), fr_membership(b, s)));
        out.membership[i] = best;
    }
    return out;
}

MembershipCurve fr_ext_mul(const FuzzyReal& a, const FuzzyReal& b, double support_step) {
    const auto sa = support_grid(a.lower(0), a.upper(0), support_step);
    const auto sb = support_grid(b.lower(0), b.upper(0), support_step);
    const double p1 = a.lower(0) * b.lower(0), p2 = a.upper(0) * b.upper(0);
    const double p3 = a.lower(0) * b.upper(0), p4 = a.upper(0) * b.lower(0);
    MembershipCurve out;
    out.ts = support_grid(std::min(std::min(p1, p2), std::min(p3, p4)),
                          std::max(std::max(p1, p2), std::max(p3, p4)), support_step);
    out.membership.resize(out.ts.size());
    for (std::size_t i = 0; i < out.ts.size(); ++i) {
        const double t = out.ts[i];
        double best = 0.0;
        for (double s : sa) {
            if (s == 0.0) continue;  // the decomposition variable never sits at 0
            best = std::max(best, std::min(fr_membership(a, s), fr_membership(b, t / s)));
        }
        // The mirrored pass re-parameterizes s as t / s'; at t = 0 it would
        // reintroduce the excluded s = 0 decomposition, so it is skipped.
        if (t != 0.0)
            for (double s : sb) {
                if (s == 0.0) continue;
                best = std::max(best,
                                std::min(fr_membership(a, t / s), fr_membership(b, s)));
            }
        out.membership[i] = best;
    }
    return out;
}

MembershipCurve fr_ext_div(const FuzzyReal& a, const FuzzyReal& b, double support_step) {
    if (!(b.lower(0) > 0.0 || b.upper(0) < 0.0))
        throw DivisionByIntervalContainingZeroError("divisor support contains zero");
    const auto s_nodes = support_grid(b.lower(0), b.upper(0), support_step);
    const double q1 = a.lower(0) / b.lower(0), q2 = a.upper(0) / b.upper(0);
    const double q3 = a.lower(0) / b.upper(0), q4 = a.upper(0) / b.lower(0);
    MembershipCurve out;
    out.ts = support_grid(std::min(std::min(q1, q2), std::min(q3, q4)),
                          std::max(std::max(q1, q2), std::max(q3, q4)), support_step);
    out.membership.resize(out.ts.size());
    for (std::size_t i = 0; i < out.ts.size(); ++i) {
        const double t = out.ts[i];
        double best = 0.0;
        for (double s : s_nodes)
            best = std::max(best, std::min(fr_membership(a, s * t), fr_membership(b, s)));
        out.membership[i] = best;
    }
    return out;
}

double fr_max_cut_deviation(const FuzzyReal& a, const MembershipCurve& curve) {
    double worst = 0.0;
    for (std::size_t j = 0; j < a.levels(); ++j) {
        const auto rec = curve.recovered_cut(a.grid().level(j));
        worst = std::max(worst, std::fabs(rec.first - a.lower(j)));
        worst = std::max(worst, std::fabs(rec.second - a.upper(j)));
    }
    return worst;
}

}  // namespace fskit
