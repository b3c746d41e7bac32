#include "fskit/soft_real.hpp"

#include <string>

namespace fskit {

namespace {

void require_aligned(const FuzzySoftReal& a, const FuzzySoftReal& b) {
    if (!a.params().same_labels(b.params()))
        throw ParameterMismatchError("soft reals carry different parameter sets");
    if (a.grid() != b.grid())
        throw GridMismatchError("soft reals live on different alpha grids");
}

template <class Op>
FuzzySoftReal zip(const FuzzySoftReal& a, const FuzzySoftReal& b, Op&& op) {
    require_aligned(a, b);
    std::vector<FuzzyReal> values;
    values.reserve(a.params().size());
    for (std::size_t e = 0; e < a.params().size(); ++e) {
        const std::size_t be = *b.params().index_of(a.params().label(e));
        values.push_back(op(a.value(e), b.value(be)));
    }
    return FuzzySoftReal(a.params(), std::move(values));
}

}  // namespace

FuzzySoftReal::FuzzySoftReal(ParameterSet params, std::vector<FuzzyReal> values)
    : params_(std::move(params)), values_(std::move(values)) {
    if (values_.size() != params_.size())
        throw ValidationError("soft real needs exactly one fuzzy real per parameter");
    for (const auto& v : values_)
        if (v.grid() != values_.front().grid())
            throw GridMismatchError("all parameter values must share one alpha grid");
}

const FuzzyReal& FuzzySoftReal::value_of(std::string_view param_label) const {
    auto e = params_.index_of(param_label);
    if (!e) throw ParameterMismatchError("unknown parameter: " + std::string(param_label));
    return values_[*e];
}

FuzzySoftReal fsr_crisp(double r, const ParameterSet& params, const AlphaGrid& grid) {
    std::vector<FuzzyReal> values(params.size(), fr_crisp(r, grid));
    return FuzzySoftReal(params, std::move(values));
}

bool fsr_is_crisp(const FuzzySoftReal& a, double* value) {
    const double r = a.value(0).lower(0);
    for (const auto& v : a.values())
        for (std::size_t j = 0; j < v.levels(); ++j)
            if (v.lower(j) != r || v.upper(j) != r) return false;
    if (value) *value = r;
    return true;
}

Interval fsr_level(const FuzzySoftReal& a, std::string_view param_label, double alpha) {
    return a.value_of(param_label).cut_at(alpha);
}

bool fsr_leq(const FuzzySoftReal& a, const FuzzySoftReal& b) {
    require_aligned(a, b);
    for (std::size_t e = 0; e < a.params().size(); ++e) {
        const std::size_t be = *b.params().index_of(a.params().label(e));
        if (!fr_leq(a.value(e), b.value(be))) return false;
    }
    return true;
}

bool fsr_equal(const FuzzySoftReal& a, const FuzzySoftReal& b, double tol) {
    require_aligned(a, b);
    for (std::size_t e = 0; e < a.params().size(); ++e) {
        const std::size_t be = *b.params().index_of(a.params().label(e));
        if (!fr_equal(a.value(e), b.value(be), tol)) return false;
    }
    return true;
}

FuzzySoftReal fsr_add(const FuzzySoftReal& a, const FuzzySoftReal& b, ArithmeticTrace* trace) {
    return zip(a, b, [trace](const FuzzyReal& x, const FuzzyReal& y) {
        return fr_add(x, y, trace);
    });
}

FuzzySoftReal fsr_sub(const FuzzySoftReal& a, const FuzzySoftReal& b, ArithmeticTrace* trace) {
    return zip(a, b, [trace](const FuzzyReal& x, const FuzzyReal& y) {
        return fr_sub(x, y, trace);
    });
}

FuzzySoftReal fsr_mul(const FuzzySoftReal& a, const FuzzySoftReal& b, ArithmeticTrace* trace) {
    return zip(a, b, [trace](const FuzzyReal& x, const FuzzyReal& y) {
        return fr_mul(x, y, trace);
    });
}

FuzzySoftReal fsr_div(const FuzzySoftReal& a, const FuzzySoftReal& b, ArithmeticTrace* trace) {
    return zip(a, b, [trace](const FuzzyReal& x, const FuzzyReal& y) {
        return fr_div(x, y, trace);
    });
}

FuzzySoftReal fsr_abs(const FuzzySoftReal& a) {
    std::vector<FuzzyReal> values;
    values.reserve(a.params().size());
    for (const auto& v : a.values()) values.push_back(fr_abs(v));
    return FuzzySoftReal(a.params(), std::move(values));
}

bool fsr_is_nonnegative(const FuzzySoftReal& a) {
    for (const auto& v : a.values())
        if (!fr_is_nonnegative(v)) return false;
    return true;
}

}  // namespace fskit
