#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fskit/errors.hpp"

namespace fskit {

/// Tolerance applied only where arithmetic chains accumulate rounding
/// (norm homogeneity, solver bounds). Plain lattice algebra (max/min/1-x)
/// is compared exactly.
inline constexpr double kChainTol = 1e-12;

/// Membership degree in [0, 1].
class Grade {
public:
    explicit Grade(double value) : value_(value) {
        if (!(value >= 0.0 && value <= 1.0))
            throw ValidationError("grade out of range [0,1]: " + std::to_string(value));
    }

    double value() const noexcept { return value_; }

private:
    double value_;
};

/// Finite ordered set of distinct object labels.
class Universe {
public:
    explicit Universe(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> index_of(std::string_view label) const;

    bool operator==(const Universe& other) const { return labels_ == other.labels_; }
    bool operator!=(const Universe& other) const { return !(*this == other); }

private:
    std::vector<std::string> labels_;
};

/// Fuzzy subset of a universe: one grade per object.
class FuzzySet {
public:
    FuzzySet(Universe universe, std::vector<double> grades);

    static FuzzySet constant(const Universe& universe, double grade);

    const Universe& universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return grades_.size(); }
    double grade(std::size_t i) const { return grades_.at(i); }
    const std::vector<double>& grades() const noexcept { return grades_; }

    /// Same universe and bitwise-identical grades.
    bool operator==(const FuzzySet& other) const {
        return universe_ == other.universe_ && grades_ == other.grades_;
    }
    bool operator!=(const FuzzySet& other) const { return !(*this == other); }

private:
    Universe universe_;
    std::vector<double> grades_;
};

/// Pointwise 1 - grade.
FuzzySet fz_complement(const FuzzySet& a);

/// Pointwise max / min. Both operands must share a universe.
FuzzySet fz_max(const FuzzySet& a, const FuzzySet& b);
FuzzySet fz_min(const FuzzySet& a, const FuzzySet& b);

/// Objects with grade >= alpha. Requires alpha > 0; the degenerate full cut
/// at alpha = 0 is rejected.
std::vector<std::string> fz_alpha_cut(const FuzzySet& a, Grade alpha);

/// Objects with strictly positive grade.
std::vector<std::string> fz_support(const FuzzySet& a);

}  // namespace fskit
