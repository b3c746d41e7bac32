#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fskit/soft_real.hpp"

namespace fskit {

/// Plain vector in R^d.
using Vector = std::vector<double>;
using Matrix = std::vector<Vector>;  // row-major

Vector vec_add(const Vector& a, const Vector& b);
Vector vec_sub(const Vector& a, const Vector& b);
Vector vec_scale(double r, const Vector& a);

enum class BaseNorm { L1, L2, LInf };

double vec_norm(const Vector& v, BaseNorm p);

/// Operator norm of a matrix induced by the base vector norm. L1 and LInf
/// are exact column/row sums; L2 uses deterministic power iteration on
/// A^T A.
double operator_norm(const Matrix& a, BaseNorm p);

/// Fuzzy soft point over the vector carrier: a support vector plus one
/// grade in (0,1] per parameter.
class FSVectorPoint {
public:
    FSVectorPoint(Vector coords, ParameterSet params, std::vector<double> lambda);

    static FSVectorPoint crisp(Vector coords, ParameterSet params);

    const Vector& coords() const noexcept { return coords_; }
    const ParameterSet& params() const noexcept { return params_; }
    double lambda(std::size_t param_idx) const { return lambda_.at(param_idx); }
    const std::vector<double>& lambdas() const noexcept { return lambda_; }

private:
    Vector coords_;
    ParameterSet params_;
    std::vector<double> lambda_;
};

/// Distinct supports (coordinate-wise exact comparison).
bool fsp_distinct(const FSVectorPoint& a, const FSVectorPoint& b);

/// Sum point: support x + y, grade min(lambda_e, gamma_e) per parameter
/// (the sup-min addition collapses to this on single-support points).
FSVectorPoint fs_vec_add(const FSVectorPoint& a, const FSVectorPoint& b);

/// Difference point: support x - y, min grades (used by the contraction
/// norm inequality).
FSVectorPoint fs_vec_sub(const FSVectorPoint& a, const FSVectorPoint& b);

/// Scaled point: support r x, grades unchanged. r = 0 collapses the support
/// to the origin and keeps the grades (the sup in the crisp-scalar formula
/// is attained at the point's own support).
FSVectorPoint fs_scalar_mul(double r, const FSVectorPoint& a);

/// Fuzzy soft norm realized through the characteristic lift of a weighted
/// p-norm: the value at parameter e is the crisp fuzzy real at
/// w_e * ||x||_p, so every (e, alpha) cut is degenerate.
class FSNorm {
public:
    FSNorm(ParameterSet params, AlphaGrid grid, BaseNorm p, std::vector<double> weights);

    const ParameterSet& params() const noexcept { return params_; }
    const AlphaGrid& grid() const noexcept { return grid_; }
    BaseNorm base() const noexcept { return p_; }
    double weight(std::size_t param_idx) const { return weights_.at(param_idx); }

    /// Crisp slice value w_e * ||x||_p; identical for every alpha level and
    /// endpoint index.
    double slice(const Vector& x, std::size_t param_idx) const;

    /// The full fuzzy soft real ||x||: non-negative and crisp.
    FuzzySoftReal eval(const FSVectorPoint& pt) const;

private:
    ParameterSet params_;
    AlphaGrid grid_;
    BaseNorm p_;
    std::vector<double> weights_;
};

/// Axiom check over explicit samples: zero-iff-zero, homogeneity through
/// the soft-real arithmetic (relative tolerance kChainTol), and the
/// triangle inequality in the soft-real order (exact).
struct NormAxiomReport {
    int samples_checked = 0;
    int violations = 0;
    std::string first_witness;
};

struct NormSample {
    FSVectorPoint x;
    FSVectorPoint y;
    double scalar = 1.0;
};

NormAxiomReport fsnorm_axiom_check(const FSNorm& n, const std::vector<NormSample>& samples);

/// Open ball in the base norm; its characteristic lift is the F.S open
/// neighborhood used for Hausdorff separation.
struct Ball {
    Vector center;
    double radius = 0.0;

    bool contains(const Vector& z, BaseNorm p) const {
        return vec_norm(vec_sub(z, center), p) < radius;
    }
};

/// Result of the constructive Hausdorff separation: balls of radius
/// ||x - y|| / 3 around the two supports, validated pointwise-disjoint on a
/// regular grid covering both balls.
struct SeparationResult {
    Ball around_x;
    Ball around_y;
    bool centers_contained = false;
    bool disjoint_on_grid = false;
    std::size_t grid_points = 0;
};

SeparationResult hausdorff_separate(const FSNorm& n, const FSVectorPoint& x,
                                    const FSVectorPoint& y, double grid_step = 0.1);

/// Ordered fuzzy soft points sharing one carrier.
class FSSequence {
public:
    explicit FSSequence(std::vector<FSVectorPoint> points);

    std::size_t size() const noexcept { return points_.size(); }
    const FSVectorPoint& at(std::size_t i) const { return points_.at(i); }
    const std::vector<FSVectorPoint>& points() const noexcept { return points_; }

private:
    std::vector<FSVectorPoint> points_;
};

/// Select the points at strictly increasing positions (0-based).
FSSequence subsequence(const FSSequence& seq, const std::vector<std::size_t>& indices);

/// Finite-prefix convergence verdict. N is the smallest 1-based index from
/// which every later prefix element stays within delta of the limit support
/// (in every slice norm) and within eps of the limit grades; at least the
/// last two elements must confirm. Never a claim about the infinite tail.
struct ConvergenceVerdict {
    bool accepted = false;
    std::size_t witness_n = 0;         // 1-based, when accepted
    std::size_t counterexample = 0;    // 1-based index, when rejected
    std::string reason;
};

ConvergenceVerdict seq_converges(const FSNorm& n, const FSSequence& seq,
                                 const FSVectorPoint& limit, double eps, double delta_probe);

/// Finite-prefix Cauchy verdict: smallest 1-based N with all pairs beyond
/// it within eps in every slice norm and in every grade, with at least the
/// last two elements beyond N. The counterexample names a violating pair.
struct CauchyVerdict {
    bool accepted = false;
    std::size_t witness_n = 0;
    std::pair<std::size_t, std::size_t> counterexample{0, 0};
};

CauchyVerdict seq_is_cauchy(const FSNorm& n, const FSSequence& seq, double eps);

/// A self-map of the carrier together with its declared Lipschitz constant.
class ContractionSpec {
public:
    ContractionSpec(std::function<Vector(const Vector&)> map, double k);

    /// Affine map x -> A x + b; the operator norm of A must not exceed k in
    /// the given base norm (checked, with kChainTol slack).
    static ContractionSpec affine(const Matrix& a, const Vector& b, double k, BaseNorm p);

    /// One-dimensional map.
    static ContractionSpec scalar(std::function<double(double)> f, double k);

    Vector apply(const Vector& x) const { return map_(x); }
    double k() const noexcept { return k_; }

private:
    std::function<Vector(const Vector&)> map_;
    double k_;
};

/// Apply a map to a point: the support moves, the grades do not.
FSVectorPoint op_apply(const ContractionSpec& spec, const FSVectorPoint& pt);
FSVectorPoint op_apply(const std::function<Vector(const Vector&)>& map,
                       const FSVectorPoint& pt);

/// Sequential continuity probe: for each direction, supports shrink toward
/// the base point with the grades held fixed, and the image sequence must
/// approach the image of the base point.
struct ContinuityVerdict {
    bool continuous = true;
    std::optional<std::size_t> failing_direction;
    std::string reason;
};

ContinuityVerdict continuity_check(const FSNorm& source, const FSNorm& target,
                                   const std::function<Vector(const Vector&)>& map,
                                   const FSVectorPoint& at,
                                   const std::vector<Vector>& directions, int halvings,
                                   double eps, double delta_probe);

/// Contraction iteration from a start point. Stops on the a-posteriori
/// bound k/(1-k) * ||step|| <= tol (sharper than the a-priori bound, which
/// is still reported per step as k^n ||x1 - z|| / (1-k)). Grades are
/// carried unchanged through every iterate.
struct FixpointResult {
    enum class Status { converged, max_iter_exceeded };

    FSVectorPoint fixed_point;
    std::vector<FSVectorPoint> iterates;     // x_1 = T z, x_2, ...
    std::vector<double> step_norms;          // ||x_{n+1} - x_n||, per iterate
    std::vector<double> apriori_bounds;      // k^n ||x_1 - z|| / (1-k)
    std::vector<double> aposteriori_bounds;  // k/(1-k) ||step||
    double initial_step = 0.0;               // ||x_1 - z||
    Status status = Status::converged;
};

FixpointResult fixpoint_solve(const FSNorm& n, const ContractionSpec& spec,
                              const FSVectorPoint& start, double tol, int max_iter);

/// Run the solver from several starts: supports must agree pairwise within
/// tol; the returned grades follow each start's own grade profile.
struct UniquenessReport {
    bool supports_agree = true;
    double max_support_spread = 0.0;
    std::vector<FixpointResult> runs;
};

UniquenessReport fixpoint_uniqueness_probe(const FSNorm& n, const ContractionSpec& spec,
                                           const std::vector<FSVectorPoint>& starts,
                                           double tol, int max_iter);

}  // namespace fskit
