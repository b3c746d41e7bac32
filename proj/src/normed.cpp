#include "fskit/normed.hpp"

#include <algorithm>
#include <cmath>

#include "fskit/format.hpp"

namespace fskit {

namespace {

void require_same_dim(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw ValidationError("vector dimensions differ: " + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()));
}

void check_lambda(const std::vector<double>& lambda) {
    for (double l : lambda)
        if (!(l > 0.0 && l <= 1.0))
            throw ValidationError("point grade must lie in (0,1]: " + format_double(l));
}

std::vector<double> min_lambdas(const FSVectorPoint& a, const FSVectorPoint& b) {
    if (!a.params().same_labels(b.params()))
        throw ParameterMismatchError("points carry different parameter sets");
    std::vector<double> out(a.params().size());
    for (std::size_t e = 0; e < out.size(); ++e) {
        const std::size_t be = *b.params().index_of(a.params().label(e));
        out[e] = std::min(a.lambda(e), b.lambda(be));
    }
    return out;
}

}  // namespace

Vector vec_add(const Vector& a, const Vector& b) {
    require_same_dim(a, b);
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector vec_sub(const Vector& a, const Vector& b) {
    require_same_dim(a, b);
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vector vec_scale(double r, const Vector& a) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = r * a[i];
    return out;
}

double vec_norm(const Vector& v, BaseNorm p) {
    switch (p) {
        case BaseNorm::L1: {
            double s = 0.0;
            for (double x : v) s += std::fabs(x);
            return s;
        }
        case BaseNorm::L2: {
            double s = 0.0;
            for (double x : v) s += x * x;
            return std::sqrt(s);
        }
        case BaseNorm::LInf: {
            double s = 0.0;
            for (double x : v) s = std::max(s, std::fabs(x));
            return s;
        }
    }
    return 0.0;
}

double operator_norm(const Matrix& a, BaseNorm p) {
    if (a.empty()) throw ValidationError("empty matrix");
    const std::size_t rows = a.size(), cols = a.front().size();
    for (const auto& row : a)
        if (row.size() != cols) throw ValidationError("ragged matrix");

    switch (p) {
        case BaseNorm::LInf: {
            double best = 0.0;
            for (const auto& row : a) {
                double s = 0.0;
                for (double x : row) s += std::fabs(x);
                best = std::max(best, s);
            }
            return best;
        }
        case BaseNorm::L1: {
            double best = 0.0;
            for (std::size_t j = 0; j < cols; ++j) {
                double s = 0.0;
                for (std::size_t i = 0; i < rows; ++i) s += std::fabs(a[i][j]);
                best = std::max(best, s);
            }
            return best;
        }
        case BaseNorm::L2: {
            // Power iteration on A^T A from a fixed start vector.
            Matrix ata(cols, Vector(cols, 0.0));
            for (std::size_t i = 0; i < cols; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    for (std::size_t r = 0; r < rows; ++r) ata[i][j] += a[r][i] * a[r][j];
            Vector v(cols, 1.0);
            double lambda = 0.0;
            for (int iter = 0; iter < 200; ++iter) {
                Vector w(cols, 0.0);
                for (std::size_t i = 0; i < cols; ++i)
                    for (std::size_t j = 0; j < cols; ++j) w[i] += ata[i][j] * v[j];
                const double wn = vec_norm(w, BaseNorm::L2);
                if (wn == 0.0) return 0.0;
                lambda = wn;
                v = vec_scale(1.0 / wn, w);
            }
            return std::sqrt(lambda);
        }
    }
    return 0.0;
}

FSVectorPoint::FSVectorPoint(Vector coords, ParameterSet params, std::vector<double> lambda)
    : coords_(std::move(coords)), params_(std::move(params)), lambda_(std::move(lambda)) {
    if (coords_.empty()) throw ValidationError("point needs at least one coordinate");
    for (double c : coords_)
        if (!std::isfinite(c)) throw ValidationError("point coordinates must be finite");
    if (lambda_.size() != params_.size())
        throw ValidationError("point grade count does not match parameter count");
    check_lambda(lambda_);
}

FSVectorPoint FSVectorPoint::crisp(Vector coords, ParameterSet params) {
    std::vector<double> ones(params.size(), 1.0);
    return FSVectorPoint(std::move(coords), std::move(params), std::move(ones));
}

bool fsp_distinct(const FSVectorPoint& a, const FSVectorPoint& b) {
    require_same_dim(a.coords(), b.coords());
    return a.coords() != b.coords();
}

FSVectorPoint fs_vec_add(const FSVectorPoint& a, const FSVectorPoint& b) {
    return FSVectorPoint(vec_add(a.coords(), b.coords()), a.params(), min_lambdas(a, b));
}

FSVectorPoint fs_vec_sub(const FSVectorPoint& a, const FSVectorPoint& b) {
    return FSVectorPoint(vec_sub(a.coords(), b.coords()), a.params(), min_lambdas(a, b));
}

FSVectorPoint fs_scalar_mul(double r, const FSVectorPoint& a) {
    if (r == 0.0)
        return FSVectorPoint(Vector(a.coords().size(), 0.0), a.params(), a.lambdas());
    return FSVectorPoint(vec_scale(r, a.coords()), a.params(), a.lambdas());
}

FSNorm::FSNorm(ParameterSet params, AlphaGrid grid, BaseNorm p, std::vector<double> weights)
    : params_(std::move(params)), grid_(std::move(grid)), p_(p), weights_(std::move(weights)) {
    if (weights_.size() != params_.size())
        throw ValidationError("norm needs one weight per parameter");
    for (double w : weights_)
        if (!(w > 0.0)) throw ValidationError("norm weights must be positive");
}

double FSNorm::slice(const Vector& x, std::size_t param_idx) const {
    return weights_.at(param_idx) * vec_norm(x, p_);
}

FuzzySoftReal FSNorm::eval(const FSVectorPoint& pt) const {
    if (!pt.params().same_labels(params_))
        throw ParameterMismatchError("point and norm carry different parameter sets");
    std::vector<FuzzyReal> values;
    values.reserve(params_.size());
    for (std::size_t e = 0; e < params_.size(); ++e)
        values.push_back(fr_crisp(slice(pt.coords(), e), grid_));
    return FuzzySoftReal(params_, std::move(values));
}

NormAxiomReport fsnorm_axiom_check(const FSNorm& n, const std::vector<NormSample>& samples) {
    NormAxiomReport report;
    const FuzzySoftReal zero = fsr_crisp(0.0, n.params(), n.grid());

    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        ++report.samples_checked;
        std::string fail;

        const bool support_zero = std::all_of(s.x.coords().begin(), s.x.coords().end(),
                                              [](double c) { return c == 0.0; });
        const FuzzySoftReal nx = n.eval(s.x);
        if (support_zero != fsr_equal(nx, zero, 0.0))
            fail = "axiom 1 (zero iff zero)";

        if (fail.empty()) {
            const FuzzySoftReal lhs = n.eval(fs_scalar_mul(s.scalar, s.x));
            const FuzzySoftReal rhs =
                fsr_mul(fsr_crisp(std::fabs(s.scalar), n.params(), n.grid()), nx);
            double scale = 1.0;
            for (const auto& v : rhs.values())
                scale = std::max(scale, std::fabs(v.upper(0)));
            if (!fsr_equal(lhs, rhs, kChainTol * scale))
                fail = "axiom 2 (homogeneity)";
        }

        if (fail.empty()) {
            const FuzzySoftReal lhs = n.eval(fs_vec_add(s.x, s.y));
            const FuzzySoftReal rhs = fsr_add(nx, n.eval(s.y));
            if (!fsr_leq(lhs, rhs)) fail = "axiom 3 (triangle inequality)";
        }

        if (!fail.empty()) {
            ++report.violations;
            if (report.first_witness.empty())
                report.first_witness = "sample " + std::to_string(i) + ": " + fail;
        }
    }
    return report;
}

SeparationResult hausdorff_separate(const FSNorm& n, const FSVectorPoint& x,
                                    const FSVectorPoint& y, double grid_step) {
    if (!fsp_distinct(x, y))
        throw NotDistinctError("separation requires points with distinct supports");
    if (!(grid_step > 0.0)) throw ValidationError("grid step must be positive");

    const double dist = vec_norm(vec_sub(x.coords(), y.coords()), n.base());
    SeparationResult out;
    out.around_x = Ball{x.coords(), dist / 3.0};
    out.around_y = Ball{y.coords(), dist / 3.0};
    out.centers_contained = out.around_x.contains(x.coords(), n.base()) &&
                            out.around_y.contains(y.coords(), n.base());

    const std::size_t d = x.coords().size();
    Vector lo(d), hi(d);
    std::vector<std::size_t> steps(d);
    for (std::size_t i = 0; i < d; ++i) {
        lo[i] = std::min(x.coords()[i], y.coords()[i]) - dist / 3.0;
        hi[i] = std::max(x.coords()[i], y.coords()[i]) + dist / 3.0;
        steps[i] = static_cast<std::size_t>(std::floor((hi[i] - lo[i]) / grid_step)) + 1;
    }

    out.disjoint_on_grid = true;
    std::vector<std::size_t> idx(d, 0);
    Vector z(d);
    while (true) {
        for (std::size_t i = 0; i < d; ++i) z[i] = lo[i] + static_cast<double>(idx[i]) * grid_step;
        ++out.grid_points;
        if (out.around_x.contains(z, n.base()) && out.around_y.contains(z, n.base()))
            out.disjoint_on_grid = false;
        std::size_t i = 0;
        for (; i < d; ++i) {
            if (++idx[i] <= steps[i]) break;
            idx[i] = 0;
        }
        if (i == d) break;
    }
    return out;
}

FSSequence::FSSequence(std::vector<FSVectorPoint> points) : points_(std::move(points)) {
    if (points_.empty()) throw ValidationError("sequence needs at least one point");
    for (const auto& p : points_) {
        if (p.coords().size() != points_.front().coords().size())
            throw ValidationError("sequence points have differing dimensions");
        if (!p.params().same_labels(points_.front().params()))
            throw ParameterMismatchError("sequence points carry different parameter sets");
    }
}

FSSequence subsequence(const FSSequence& seq, const std::vector<std::size_t>& indices) {
    if (indices.empty()) throw ValidationError("subsequence needs at least one index");
    std::vector<FSVectorPoint> out;
    out.reserve(indices.size());
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (k > 0 && indices[k] <= indices[k - 1])
            throw ValidationError("subsequence indices must be strictly increasing");
        if (indices[k] >= seq.size())
            throw ValidationError("subsequence index out of range");
        out.push_back(seq.at(indices[k]));
    }
    return FSSequence(std::move(out));
}

ConvergenceVerdict seq_converges(const FSNorm& n, const FSSequence& seq,
                                 const FSVectorPoint& limit, double eps, double delta_probe) {
    if (!limit.params().same_labels(n.params()))
        throw ParameterMismatchError("limit and norm carry different parameter sets");

    const std::size_t len = seq.size();
    std::size_t last_fail = 0;  // 1-based; 0 when every element passes
    for (std::size_t i = 0; i < len; ++i) {
        const auto& pt = seq.at(i);
        const Vector diff = vec_sub(pt.coords(), limit.coords());
        bool pass = true;
        for (std::size_t e = 0; e < n.params().size() && pass; ++e) {
            if (!(n.slice(diff, e) < delta_probe)) pass = false;
            const std::size_t pe = *pt.params().index_of(n.params().label(e));
            const std::size_t le = *limit.params().index_of(n.params().label(e));
            if (!(std::fabs(pt.lambda(pe) - limit.lambda(le)) < eps)) pass = false;
        }
        if (!pass) last_fail = i + 1;
    }

    ConvergenceVerdict verdict;
    if (last_fail == 0) {
        verdict.accepted = true;
        verdict.witness_n = 1;
    } else if (last_fail + 2 <= len) {
        verdict.accepted = true;
        verdict.witness_n = last_fail + 1;
    } else {
        verdict.counterexample = last_fail;
        verdict.reason = "element " + std::to_string(last_fail) +
                         " still violates the bound near the end of the prefix";
    }
    return verdict;
}

CauchyVerdict seq_is_cauchy(const FSNorm& n, const FSSequence& seq, double eps) {
    const std::size_t len = seq.size();
    std::size_t worst_min = 0;  // 1-based smaller index of the latest bad pair
    std::pair<std::size_t, std::size_t> worst_pair{0, 0};

    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 1; j < len; ++j) {
            const Vector diff = vec_sub(seq.at(i).coords(), seq.at(j).coords());
            bool bad = false;
            for (std::size_t e = 0; e < n.params().size() && !bad; ++e) {
                if (n.slice(diff, e) > eps) bad = true;
                const std::size_t ie = *seq.at(i).params().index_of(n.params().label(e));
                const std::size_t je = *seq.at(j).params().index_of(n.params().label(e));
                if (std::fabs(seq.at(i).lambda(ie) - seq.at(j).lambda(je)) > eps) bad = true;
            }
            if (bad && i + 1 > worst_min) {
                worst_min = i + 1;
                worst_pair = {i + 1, j + 1};
            }
        }
    }

    CauchyVerdict verdict;
    if (worst_min == 0) {
        verdict.accepted = true;
        verdict.witness_n = 1;
    } else if (worst_min + 2 <= len) {
        verdict.accepted = true;
        verdict.witness_n = worst_min + 1;
    } else {
        verdict.counterexample = worst_pair;
    }
    return verdict;
}

ContractionSpec::ContractionSpec(std::function<Vector(const Vector&)> map, double k)
    : map_(std::move(map)), k_(k) {
    if (!(k_ > 0.0 && k_ < 1.0))
        throw InvalidContractionError("contraction factor must lie in (0,1): " +
                                      format_double(k));
    if (!map_) throw ValidationError("contraction map must be callable");
}

ContractionSpec ContractionSpec::affine(const Matrix& a, const Vector& b, double k,
                                        BaseNorm p) {
    if (a.size() != b.size()) throw ValidationError("matrix row count must match offset size");
    const double opnorm = operator_norm(a, p);
    if (opnorm > k + kChainTol)
        throw InvalidContractionError("operator norm " + format_double(opnorm) +
                                      " exceeds declared factor " + format_double(k));
    Matrix a_copy = a;
    Vector b_copy = b;
    return ContractionSpec(
        [a_copy, b_copy](const Vector& x) {
            Vector out = b_copy;
            for (std::size_t i = 0; i < a_copy.size(); ++i)
                for (std::size_t j = 0; j < x.size(); ++j) out[i] += a_copy[i][j] * x[j];
            return out;
        },
        k);
}

ContractionSpec ContractionSpec::scalar(std::function<double(double)> f, double k) {
    return ContractionSpec(
        [f = std::move(f)](const Vector& x) { return Vector{f(x.at(0))}; }, k);
}

FSVectorPoint op_apply(const std::function<Vector(const Vector&)>& map,
                       const FSVectorPoint& pt) {
    return FSVectorPoint(map(pt.coords()), pt.params(), pt.lambdas());
}

FSVectorPoint op_apply(const ContractionSpec& spec, const FSVectorPoint& pt) {
    return FSVectorPoint(spec.apply(pt.coords()), pt.params(), pt.lambdas());
}

ContinuityVerdict continuity_check(const FSNorm& source, const FSNorm& target,
                                   const std::function<Vector(const Vector&)>& map,
                                   const FSVectorPoint& at,
                                   const std::vector<Vector>& directions, int halvings,
                                   double eps, double delta_probe) {
    (void)source;  // probe radii are dimensionless halvings of the direction
    if (halvings < 2) throw ValidationError("need at least two halvings");
    const FSVectorPoint image_limit = op_apply(map, at);

    ContinuityVerdict verdict;
    for (std::size_t d = 0; d < directions.size(); ++d) {
        std::vector<FSVectorPoint> images;
        images.reserve(static_cast<std::size_t>(halvings));
        double scale = 1.0;
        for (int j = 0; j < halvings; ++j) {
            scale *= 0.5;
            const Vector z = vec_add(at.coords(), vec_scale(scale, directions[d]));
            const FSVectorPoint probe(z, at.params(), at.lambdas());
            images.push_back(op_apply(map, probe));
        }
        const auto conv =
            seq_converges(target, FSSequence(std::move(images)), image_limit, eps, delta_probe);
        if (!conv.accepted) {
            verdict.continuous = false;
            verdict.failing_direction = d;
            verdict.reason = conv.reason;
            return verdict;
        }
    }
    return verdict;
}

FixpointResult fixpoint_solve(const FSNorm& n, const ContractionSpec& spec,
                              const FSVectorPoint& start, double tol, int max_iter) {
    if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
    if (max_iter < 1) throw ValidationError("need at least one iteration");

    const double k = spec.k();
    const double shrink = k / (1.0 - k);

    FSVectorPoint current = op_apply(spec, start);  // x_1 = T z
    FixpointResult result{current, {}, {}, {}, {}, 0.0,
                          FixpointResult::Status::max_iter_exceeded};
    result.initial_step = vec_norm(vec_sub(current.coords(), start.coords()), n.base());

    double prev_step = result.initial_step;
    double kpow = 1.0;
    Vector prev = start.coords();

    for (int iter = 1; iter <= max_iter; ++iter) {
        const double step = vec_norm(vec_sub(current.coords(), prev), n.base());
        // Empirical Lipschitz check along the orbit.
        if (iter > 1 && step > k * prev_step + kChainTol * (1.0 + prev_step))
            throw ContractionViolatedError(
                "step " + std::to_string(iter) + " grew beyond the declared factor: " +
                format_double(step) + " > " + format_double(k) + " * " +
                format_double(prev_step));

        kpow *= k;
        result.iterates.push_back(current);
        result.step_norms.push_back(step);
        result.apriori_bounds.push_back(kpow * result.initial_step / (1.0 - k));
        result.aposteriori_bounds.push_back(shrink * step);

        if (shrink * step <= tol) {
            result.status = FixpointResult::Status::converged;
            break;
        }

        prev = current.coords();
        prev_step = step;
        current = op_apply(spec, current);
    }

    result.fixed_point = result.iterates.back();
    return result;
}

UniquenessReport fixpoint_uniqueness_probe(const FSNorm& n, const ContractionSpec& spec,
                                           const std::vector<FSVectorPoint>& starts,
                                           double tol, int max_iter) {
    if (starts.empty()) throw ValidationError("need at least one start point");
    UniquenessReport report;
    // Each run stops within tol/2 of the fixed point, so any two runs land
    // pairwise within tol.
    for (const auto& z : starts)
        report.runs.push_back(fixpoint_solve(n, spec, z, tol / 2.0, max_iter));

    for (std::size_t i = 0; i < report.runs.size(); ++i) {
        for (std::size_t j = i + 1; j < report.runs.size(); ++j) {
            const double spread =
                vec_norm(vec_sub(report.runs[i].fixed_point.coords(),
                                 report.runs[j].fixed_point.coords()),
                         n.base());
            report.max_support_spread = std::max(report.max_support_spread, spread);
        }
    }
    report.supports_agree = report.max_support_spread <= tol;
    return report;
}

}  // namespace fskit
