#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fskit/core.hpp"

namespace fskit {

/// Finite ordered set of distinct parameter labels, optionally re-indexed
/// into (0,1]. The re-index values are metadata: they never influence the
/// algebra, only labels used by (0,1]-parameterized topology constructions.
class ParameterSet {
public:
    explicit ParameterSet(std::vector<std::string> labels);
    ParameterSet(std::vector<std::string> labels, std::vector<double> reindex);

    /// Re-index a k-element set as {1/k, ..., (k-1)/k, 1}.
    static ParameterSet auto_reindexed(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> index_of(std::string_view label) const;

    bool has_reindex() const noexcept { return !reindex_.empty(); }
    const std::vector<double>& reindex() const noexcept { return reindex_; }

    /// Equal as label sets, ignoring order and re-index metadata.
    bool same_labels(const ParameterSet& other) const;
    /// True when every label of this set occurs in `other`.
    bool subset_of(const ParameterSet& other) const;

    bool operator==(const ParameterSet& other) const { return labels_ == other.labels_; }
    bool operator!=(const ParameterSet& other) const { return !(*this == other); }

private:
    std::vector<std::string> labels_;
    std::vector<double> reindex_;
};

/// Grade matrix over (parameter, object) pairs: the central algebra object.
/// Rows follow the parameter order, columns the universe order.
class FuzzySoftSet {
public:
    FuzzySoftSet(ParameterSet params, Universe universe,
                 std::vector<std::vector<double>> grades);

    /// All-zero grade matrix.
    static FuzzySoftSet null_set(ParameterSet params, Universe universe);
    /// All-one grade matrix.
    static FuzzySoftSet absolute(ParameterSet params, Universe universe);

    const ParameterSet& params() const noexcept { return params_; }
    const Universe& universe() const noexcept { return universe_; }
    double grade(std::size_t param_idx, std::size_t object_idx) const {
        return grades_.at(param_idx).at(object_idx);
    }
    const std::vector<std::vector<double>>& grades() const noexcept { return grades_; }

    /// The fuzzy set carried at one parameter.
    FuzzySet row(std::size_t param_idx) const;
    FuzzySet row_of(std::string_view param_label) const;

    bool is_null() const;
    bool is_absolute() const;

private:
    ParameterSet params_;
    Universe universe_;
    std::vector<std::vector<double>> grades_;
};

/// f over A is a subset of g over B: A is contained in B and grades of f
/// never exceed those of g on shared parameters.
bool fs_subset(const FuzzySoftSet& f, const FuzzySoftSet& g);

/// Mutual subset; parameter order is irrelevant, the label-to-row mapping is.
bool fs_equal(const FuzzySoftSet& f, const FuzzySoftSet& g);

/// Row-wise complement over the same parameter set.
FuzzySoftSet fs_complement(const FuzzySoftSet& f);

/// Union over A or B: rows copied outside the overlap, pointwise max inside.
FuzzySoftSet fs_union(const FuzzySoftSet& f, const FuzzySoftSet& g);

/// Intersection over A and B (must be non-empty): pointwise min.
FuzzySoftSet fs_intersection(const FuzzySoftSet& f, const FuzzySoftSet& g);

/// Pair of plain functions (u on objects, p on parameters) inducing a map
/// between fuzzy soft classes.
class SoftMapping {
public:
    SoftMapping(Universe source_universe, Universe target_universe,
                ParameterSet source_params, ParameterSet target_params,
                std::vector<std::size_t> object_map,
                std::vector<std::size_t> parameter_map);

    const Universe& source_universe() const noexcept { return source_universe_; }
    const Universe& target_universe() const noexcept { return target_universe_; }
    const ParameterSet& source_params() const noexcept { return source_params_; }
    const ParameterSet& target_params() const noexcept { return target_params_; }
    std::size_t map_object(std::size_t i) const { return object_map_.at(i); }
    std::size_t map_parameter(std::size_t i) const { return parameter_map_.at(i); }

private:
    Universe source_universe_;
    Universe target_universe_;
    ParameterSet source_params_;
    ParameterSet target_params_;
    std::vector<std::size_t> object_map_;
    std::vector<std::size_t> parameter_map_;
};

/// Image of f under the mapping: sup over object and parameter preimages,
/// zero where either preimage is empty. Result carries the parameters
/// reached by p, in target order.
FuzzySoftSet fs_image(const SoftMapping& h, const FuzzySoftSet& f);

/// Preimage of g: grade at (e, x) is g_{p(e)}(u(x)) when p(e) is carried by
/// g, else zero. Result carries the full source parameter set.
FuzzySoftSet fs_preimage(const SoftMapping& h, const FuzzySoftSet& g);

/// One object with a strictly positive grade per parameter of the full set E.
class FuzzySoftPoint {
public:
    FuzzySoftPoint(std::string support, ParameterSet params, std::vector<double> lambda);

    /// All grades equal to 1.
    static FuzzySoftPoint crisp(std::string support, ParameterSet params);

    const std::string& support() const noexcept { return support_; }
    const ParameterSet& params() const noexcept { return params_; }
    double lambda(std::size_t param_idx) const { return lambda_.at(param_idx); }
    const std::vector<double>& lambdas() const noexcept { return lambda_; }

private:
    std::string support_;
    ParameterSet params_;
    std::vector<double> lambda_;
};

/// Restriction of a point to a single parameter.
class FuzzySoftSinglePoint {
public:
    FuzzySoftSinglePoint(std::string support, std::string parameter, double lambda);

    const std::string& support() const noexcept { return support_; }
    const std::string& parameter() const noexcept { return parameter_; }
    double lambda() const noexcept { return lambda_; }

private:
    std::string support_;
    std::string parameter_;
    double lambda_;
};

/// Materialize the point as a fuzzy soft set over the given universe.
FuzzySoftSet to_set(const FuzzySoftPoint& pt, const Universe& universe);
FuzzySoftSet to_set(const FuzzySoftSinglePoint& pt, const ParameterSet& params,
                    const Universe& universe);

/// Membership: lambda_e <= f_e(x) for every parameter.
bool fsp_member(const FuzzySoftPoint& pt, const FuzzySoftSet& f);
bool fsp_member(const FuzzySoftSinglePoint& pt, const FuzzySoftSet& f);

/// Different: supports differ, or some grade differs at the shared support.
bool fsp_different(const FuzzySoftPoint& a, const FuzzySoftPoint& b);

/// Distinct: the pointwise min of the two point sets is null, i.e. the
/// supports differ (all point grades are strictly positive).
bool fsp_distinct(const FuzzySoftPoint& a, const FuzzySoftPoint& b);

/// Quasi-coincidence: some parameter where the grades sum strictly above 1.
bool fsp_quasi_coincident(const FuzzySoftPoint& pt, const FuzzySoftSet& f);
bool fsp_quasi_coincident(const FuzzySoftSinglePoint& pt, const FuzzySoftSet& f);
/// Set-with-set quasi-coincidence at one object.
bool fs_quasi_coincident_at(const FuzzySoftSet& g, const FuzzySoftSet& f,
                            std::string_view object_label);

}  // namespace fskit
