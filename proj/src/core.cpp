#include "fskit/core.hpp"

#include <algorithm>
#include <set>

namespace fskit {

namespace {

void require_same_universe(const FuzzySet& a, const FuzzySet& b) {
    if (a.universe() != b.universe())
        throw UniverseMismatchError("fuzzy sets live over different universes");
}

}  // namespace

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ValidationError("universe must be non-empty");
    std::set<std::string_view> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw ValidationError("duplicate object label: " + l);
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

FuzzySet::FuzzySet(Universe universe, std::vector<double> grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
    if (grades_.size() != universe_.size())
        throw ValidationError("grade count does not match universe size");
    for (double g : grades_)
        if (!(g >= 0.0 && g <= 1.0))
            throw ValidationError("grade out of range [0,1]: " + std::to_string(g));
}

FuzzySet FuzzySet::constant(const Universe& universe, double grade) {
    return FuzzySet(universe, std::vector<double>(universe.size(), Grade(grade).value()));
}

FuzzySet fz_complement(const FuzzySet& a) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = 1.0 - a.grade(i);
    return FuzzySet(a.universe(), std::move(out));
}

FuzzySet fz_max(const FuzzySet& a, const FuzzySet& b) {
    require_same_universe(a, b);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a.grade(i), b.grade(i));
    return FuzzySet(a.universe(), std::move(out));
}

FuzzySet fz_min(const FuzzySet& a, const FuzzySet& b) {
    require_same_universe(a, b);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a.grade(i), b.grade(i));
    return FuzzySet(a.universe(), std::move(out));
}

std::vector<std::string> fz_alpha_cut(const FuzzySet& a, Grade alpha) {
    if (alpha.value() <= 0.0)
        throw ValidationError("alpha cut requires alpha > 0");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.grade(i) >= alpha.value()) out.push_back(a.universe().label(i));
    return out;
}

std::vector<std::string> fz_support(const FuzzySet& a) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.grade(i) > 0.0) out.push_back(a.universe().label(i));
    return out;
}

}  // namespace fskit
