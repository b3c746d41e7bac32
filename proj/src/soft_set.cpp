#include "fskit/soft_set.hpp"

#include <algorithm>
#include <set>

namespace fskit {

namespace {

void require_same_universe(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    if (f.universe() != g.universe())
        throw UniverseMismatchError("fuzzy soft sets live over different universes");
}

void check_point_grade(double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw ValidationError("point grade must lie in (0,1]: " + std::to_string(lambda));
}

}  // namespace

ParameterSet::ParameterSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ValidationError("parameter set must be non-empty");
    std::set<std::string_view> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw ValidationError("duplicate parameter label: " + l);
}

ParameterSet::ParameterSet(std::vector<std::string> labels, std::vector<double> reindex)
    : ParameterSet(std::move(labels)) {
    if (reindex.size() != labels_.size())
        throw ValidationError("re-index value count does not match parameter count");
    std::set<double> seen;
    for (double v : reindex) {
        if (!(v > 0.0 && v <= 1.0))
            throw ValidationError("re-index value must lie in (0,1]: " + std::to_string(v));
        if (!seen.insert(v).second)
            throw ValidationError("re-index values must be distinct");
    }
    reindex_ = std::move(reindex);
}

ParameterSet ParameterSet::auto_reindexed(std::vector<std::string> labels) {
    const std::size_t k = labels.size();
    std::vector<double> values(k);
    for (std::size_t i = 0; i < k; ++i)
        values[i] = static_cast<double>(i + 1) / static_cast<double>(k);
    return ParameterSet(std::move(labels), std::move(values));
}

std::optional<std::size_t> ParameterSet::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

bool ParameterSet::same_labels(const ParameterSet& other) const {
    return size() == other.size() && subset_of(other);
}

bool ParameterSet::subset_of(const ParameterSet& other) const {
    for (const auto& l : labels_)
        if (!other.index_of(l)) return false;
    return true;
}

FuzzySoftSet::FuzzySoftSet(ParameterSet params, Universe universe,
                           std::vector<std::vector<double>> grades)
    : params_(std::move(params)), universe_(std::move(universe)), grades_(std::move(grades)) {
    if (grades_.size() != params_.size())
        throw ValidationError("grade matrix row count does not match parameter count");
    for (const auto& row : grades_) {
        if (row.size() != universe_.size())
            throw ValidationError("grade matrix column count does not match universe size");
        for (double g : row)
            if (!(g >= 0.0 && g <= 1.0))
                throw ValidationError("grade out of range [0,1]: " + std::to_string(g));
    }
}

FuzzySoftSet FuzzySoftSet::null_set(ParameterSet params, Universe universe) {
    std::vector<std::vector<double>> grades(params.size(),
                                            std::vector<double>(universe.size(), 0.0));
    return FuzzySoftSet(std::move(params), std::move(universe), std::move(grades));
}

FuzzySoftSet FuzzySoftSet::absolute(ParameterSet params, Universe universe) {
    std::vector<std::vector<double>> grades(params.size(),
                                            std::vector<double>(universe.size(), 1.0));
    return FuzzySoftSet(std::move(params), std::move(universe), std::move(grades));
}

FuzzySet FuzzySoftSet::row(std::size_t param_idx) const {
    return FuzzySet(universe_, grades_.at(param_idx));
}

FuzzySet FuzzySoftSet::row_of(std::string_view param_label) const {
    auto idx = params_.index_of(param_label);
    if (!idx) throw ParameterMismatchError("unknown parameter: " + std::string(param_label));
    return row(*idx);
}

bool FuzzySoftSet::is_null() const {
    for (const auto& row : grades_)
        for (double g : row)
            if (g != 0.0) return false;
    return true;
}

bool FuzzySoftSet::is_absolute() const {
    for (const auto& row : grades_)
        for (double g : row)
            if (g != 1.0) return false;
    return true;
}

bool fs_subset(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    require_same_universe(f, g);
    for (std::size_t e = 0; e < f.params().size(); ++e) {
        auto ge = g.params().index_of(f.params().label(e));
        if (!ge) return false;
        for (std::size_t x = 0; x < f.universe().size(); ++x)
            if (f.grade(e, x) > g.grade(*ge, x)) return false;
    }
    return true;
}

bool fs_equal(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    return fs_subset(f, g) && fs_subset(g, f);
}

FuzzySoftSet fs_complement(const FuzzySoftSet& f) {
    std::vector<std::vector<double>> grades(f.params().size(),
                                            std::vector<double>(f.universe().size()));
    for (std::size_t e = 0; e < f.params().size(); ++e)
        for (std::size_t x = 0; x < f.universe().size(); ++x)
            grades[e][x] = 1.0 - f.grade(e, x);
    return FuzzySoftSet(f.params(), f.universe(), std::move(grades));
}

FuzzySoftSet fs_union(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    require_same_universe(f, g);
    std::vector<std::string> labels = f.params().labels();
    for (const auto& l : g.params().labels())
        if (!f.params().index_of(l)) labels.push_back(l);

    std::vector<std::vector<double>> grades;
    grades.reserve(labels.size());
    for (const auto& l : labels) {
        auto fe = f.params().index_of(l);
        auto ge = g.params().index_of(l);
        std::vector<double> row(f.universe().size());
        for (std::size_t x = 0; x < row.size(); ++x) {
            if (fe && ge)
                row[x] = std::max(f.grade(*fe, x), g.grade(*ge, x));
            else if (fe)
                row[x] = f.grade(*fe, x);
            else
                row[x] = g.grade(*ge, x);
        }
        grades.push_back(std::move(row));
    }
    return FuzzySoftSet(ParameterSet(std::move(labels)), f.universe(), std::move(grades));
}

FuzzySoftSet fs_intersection(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    require_same_universe(f, g);
    std::vector<std::string> labels;
    for (const auto& l : f.params().labels())
        if (g.params().index_of(l)) labels.push_back(l);
    if (labels.empty())
        throw EmptyParameterIntersectionError(
            "intersection over disjoint parameter sets is undefined");

    std::vector<std::vector<double>> grades;
    grades.reserve(labels.size());
    for (const auto& l : labels) {
        const std::size_t fe = *f.params().index_of(l);
        const std::size_t ge = *g.params().index_of(l);
        std::vector<double> row(f.universe().size());
        for (std::size_t x = 0; x < row.size(); ++x)
            row[x] = std::min(f.grade(fe, x), g.grade(ge, x));
        grades.push_back(std::move(row));
    }
    return FuzzySoftSet(ParameterSet(std::move(labels)), f.universe(), std::move(grades));
}

SoftMapping::SoftMapping(Universe source_universe, Universe target_universe,
                         ParameterSet source_params, ParameterSet target_params,
                         std::vector<std::size_t> object_map,
                         std::vector<std::size_t> parameter_map)
    : source_universe_(std::move(source_universe)),
      target_universe_(std::move(target_universe)),
      source_params_(std::move(source_params)),
      target_params_(std::move(target_params)),
      object_map_(std::move(object_map)),
      parameter_map_(std::move(parameter_map)) {
    if (object_map_.size() != source_universe_.size())
        throw ValidationError("object map must be total on the source universe");
    if (parameter_map_.size() != source_params_.size())
        throw ValidationError("parameter map must be total on the source parameters");
    for (std::size_t t : object_map_)
        if (t >= target_universe_.size())
            throw ValidationError("object map target index out of range");
    for (std::size_t t : parameter_map_)
        if (t >= target_params_.size())
            throw ValidationError("parameter map target index out of range");
}

FuzzySoftSet fs_image(const SoftMapping& h, const FuzzySoftSet& f) {
    if (f.universe() != h.source_universe())
        throw UniverseMismatchError("image argument does not live over the source universe");
    if (!f.params().subset_of(h.source_params()))
        throw ParameterMismatchError("image argument carries unknown source parameters");

    // Parameters actually reached by p, kept in target order.
    std::vector<bool> reached(h.target_params().size(), false);
    for (std::size_t e = 0; e < h.source_params().size(); ++e)
        reached[h.map_parameter(e)] = true;
    std::vector<std::string> out_labels;
    std::vector<std::size_t> out_target_idx;
    for (std::size_t t = 0; t < h.target_params().size(); ++t)
        if (reached[t]) {
            out_labels.push_back(h.target_params().label(t));
            out_target_idx.push_back(t);
        }

    std::vector<std::vector<double>> grades(out_labels.size(),
                                            std::vector<double>(h.target_universe().size(), 0.0));
    for (std::size_t row = 0; row < out_target_idx.size(); ++row) {
        const std::size_t eprime = out_target_idx[row];
        for (std::size_t y = 0; y < h.target_universe().size(); ++y) {
            double best = 0.0;
            for (std::size_t e = 0; e < h.source_params().size(); ++e) {
                if (h.map_parameter(e) != eprime) continue;
                auto fe = f.params().index_of(h.source_params().label(e));
                if (!fe) continue;  // outside A
                for (std::size_t x = 0; x < h.source_universe().size(); ++x)
                    if (h.map_object(x) == y) best = std::max(best, f.grade(*fe, x));
            }
            grades[row][y] = best;
        }
    }
    return FuzzySoftSet(ParameterSet(std::move(out_labels)), h.target_universe(),
                        std::move(grades));
}

FuzzySoftSet fs_preimage(const SoftMapping& h, const FuzzySoftSet& g) {
    if (g.universe() != h.target_universe())
        throw UniverseMismatchError("preimage argument does not live over the target universe");
    if (!g.params().subset_of(h.target_params()))
        throw ParameterMismatchError("preimage argument carries unknown target parameters");

    std::vector<std::vector<double>> grades(h.source_params().size(),
                                            std::vector<double>(h.source_universe().size(), 0.0));
    for (std::size_t e = 0; e < h.source_params().size(); ++e) {
        const auto& target_label = h.target_params().label(h.map_parameter(e));
        auto ge = g.params().index_of(target_label);
        if (!ge) continue;  // p(e) outside B: row stays zero
        for (std::size_t x = 0; x < h.source_universe().size(); ++x)
            grades[e][x] = g.grade(*ge, h.map_object(x));
    }
    return FuzzySoftSet(h.source_params(), h.source_universe(), std::move(grades));
}

FuzzySoftPoint::FuzzySoftPoint(std::string support, ParameterSet params,
                               std::vector<double> lambda)
    : support_(std::move(support)), params_(std::move(params)), lambda_(std::move(lambda)) {
    if (lambda_.size() != params_.size())
        throw ValidationError("point grade count does not match parameter count");
    for (double l : lambda_) check_point_grade(l);
}

FuzzySoftPoint FuzzySoftPoint::crisp(std::string support, ParameterSet params) {
    std::vector<double> ones(params.size(), 1.0);
    return FuzzySoftPoint(std::move(support), std::move(params), std::move(ones));
}

FuzzySoftSinglePoint::FuzzySoftSinglePoint(std::string support, std::string parameter,
                                           double lambda)
    : support_(std::move(support)), parameter_(std::move(parameter)), lambda_(lambda) {
    check_point_grade(lambda_);
}

FuzzySoftSet to_set(const FuzzySoftPoint& pt, const Universe& universe) {
    auto x = universe.index_of(pt.support());
    if (!x) throw UniverseMismatchError("point support not in universe: " + pt.support());
    std::vector<std::vector<double>> grades(pt.params().size(),
                                            std::vector<double>(universe.size(), 0.0));
    for (std::size_t e = 0; e < pt.params().size(); ++e) grades[e][*x] = pt.lambda(e);
    return FuzzySoftSet(pt.params(), universe, std::move(grades));
}

FuzzySoftSet to_set(const FuzzySoftSinglePoint& pt, const ParameterSet& params,
                    const Universe& universe) {
    auto x = universe.index_of(pt.support());
    if (!x) throw UniverseMismatchError("point support not in universe: " + pt.support());
    auto e = params.index_of(pt.parameter());
    if (!e) throw ParameterMismatchError("point parameter not in set: " + pt.parameter());
    std::vector<std::vector<double>> grades(params.size(),
                                            std::vector<double>(universe.size(), 0.0));
    grades[*e][*x] = pt.lambda();
    return FuzzySoftSet(params, universe, std::move(grades));
}

namespace {

std::size_t point_object_index(const FuzzySoftPoint& pt, const FuzzySoftSet& f) {
    auto x = f.universe().index_of(pt.support());
    if (!x) throw UniverseMismatchError("point support not in universe: " + pt.support());
    if (!pt.params().same_labels(f.params()))
        throw ParameterMismatchError("point and set carry different parameter sets");
    return *x;
}

}  // namespace

bool fsp_member(const FuzzySoftPoint& pt, const FuzzySoftSet& f) {
    const std::size_t x = point_object_index(pt, f);
    for (std::size_t e = 0; e < pt.params().size(); ++e) {
        const std::size_t fe = *f.params().index_of(pt.params().label(e));
        if (!(pt.lambda(e) <= f.grade(fe, x))) return false;
    }
    return true;
}

bool fsp_member(const FuzzySoftSinglePoint& pt, const FuzzySoftSet& f) {
    auto x = f.universe().index_of(pt.support());
    if (!x) throw UniverseMismatchError("point support not in universe: " + pt.support());
    auto e = f.params().index_of(pt.parameter());
    if (!e) throw ParameterMismatchError("point parameter not in set: " + pt.parameter());
    return pt.lambda() <= f.grade(*e, *x);
}

bool fsp_different(const FuzzySoftPoint& a, const FuzzySoftPoint& b) {
    if (!a.params().same_labels(b.params()))
        throw ParameterMismatchError("points carry different parameter sets");
    if (a.support() != b.support()) return true;
    for (std::size_t e = 0; e < a.params().size(); ++e) {
        const std::size_t be = *b.params().index_of(a.params().label(e));
        if (a.lambda(e) != b.lambda(be)) return true;
    }
    return false;
}

bool fsp_distinct(const FuzzySoftPoint& a, const FuzzySoftPoint& b) {
    if (!a.params().same_labels(b.params()))
        throw ParameterMismatchError("points carry different parameter sets");
    return a.support() != b.support();
}

bool fsp_quasi_coincident(const FuzzySoftPoint& pt, const FuzzySoftSet& f) {
    const std::size_t x = point_object_index(pt, f);
    for (std::size_t e = 0; e < pt.params().size(); ++e) {
        const std::size_t fe = *f.params().index_of(pt.params().label(e));
        if (pt.lambda(e) + f.grade(fe, x) > 1.0) return true;
    }
    return false;
}

bool fsp_quasi_coincident(const FuzzySoftSinglePoint& pt, const FuzzySoftSet& f) {
    auto x = f.universe().index_of(pt.support());
    if (!x) throw UniverseMismatchError("point support not in universe: " + pt.support());
    auto e = f.params().index_of(pt.parameter());
    if (!e) throw ParameterMismatchError("point parameter not in set: " + pt.parameter());
    return pt.lambda() + f.grade(*e, *x) > 1.0;
}

bool fs_quasi_coincident_at(const FuzzySoftSet& g, const FuzzySoftSet& f,
                            std::string_view object_label) {
    require_same_universe(g, f);
    if (!g.params().same_labels(f.params()))
        throw ParameterMismatchError("sets carry different parameter sets");
    auto x = g.universe().index_of(object_label);
    if (!x) throw UniverseMismatchError("unknown object: " + std::string(object_label));
    for (std::size_t e = 0; e < g.params().size(); ++e) {
        const std::size_t fe = *f.params().index_of(g.params().label(e));
        if (g.grade(e, *x) + f.grade(fe, *x) > 1.0) return true;
    }
    return false;
}

}  // namespace fskit
