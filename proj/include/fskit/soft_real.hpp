#pragma once

#include <string_view>
#include <vector>

#include "fskit/fuzzy_real.hpp"
#include "fskit/soft_set.hpp"

namespace fskit {

/// Fuzzy soft real number: one fuzzy real per parameter, all on a shared
/// alpha grid. The crisp variant (every cut degenerate) is recognized by
/// fsr_is_crisp rather than being a separate type.
class FuzzySoftReal {
public:
    FuzzySoftReal(ParameterSet params, std::vector<FuzzyReal> values);

    const ParameterSet& params() const noexcept { return params_; }
    const AlphaGrid& grid() const { return values_.front().grid(); }
    const FuzzyReal& value(std::size_t param_idx) const { return values_.at(param_idx); }
    const FuzzyReal& value_of(std::string_view param_label) const;
    const std::vector<FuzzyReal>& values() const noexcept { return values_; }

private:
    ParameterSet params_;
    std::vector<FuzzyReal> values_;
};

/// The characteristic lift of r at every parameter.
FuzzySoftReal fsr_crisp(double r, const ParameterSet& params, const AlphaGrid& grid);

/// True when every cut at every parameter is one point; that point is
/// written to *value when requested.
bool fsr_is_crisp(const FuzzySoftReal& a, double* value = nullptr);

/// The alpha-cut at one (parameter, level) pair. Off-grid alpha values are
/// rejected, never interpolated.
Interval fsr_level(const FuzzySoftReal& a, std::string_view param_label, double alpha);

/// Parameter-wise cut order / equality, quantified over all parameters.
bool fsr_leq(const FuzzySoftReal& a, const FuzzySoftReal& b);
bool fsr_equal(const FuzzySoftReal& a, const FuzzySoftReal& b, double tol);

/// Parameter-wise fuzzy-real arithmetic over a common parameter set.
FuzzySoftReal fsr_add(const FuzzySoftReal& a, const FuzzySoftReal& b,
                      ArithmeticTrace* trace = nullptr);
FuzzySoftReal fsr_sub(const FuzzySoftReal& a, const FuzzySoftReal& b,
                      ArithmeticTrace* trace = nullptr);
FuzzySoftReal fsr_mul(const FuzzySoftReal& a, const FuzzySoftReal& b,
                      ArithmeticTrace* trace = nullptr);
FuzzySoftReal fsr_div(const FuzzySoftReal& a, const FuzzySoftReal& b,
                      ArithmeticTrace* trace = nullptr);

FuzzySoftReal fsr_abs(const FuzzySoftReal& a);

bool fsr_is_nonnegative(const FuzzySoftReal& a);

}  // namespace fskit
