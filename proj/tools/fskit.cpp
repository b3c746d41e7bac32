// fskit command-line driver: desk-scale experiments over fuzzy soft sets,
// fuzzy real arithmetic, finite topologies and the contraction solver.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fskit/format.hpp"
#include "fskit/io.hpp"
#include "fskit/laws.hpp"
#include "fskit/map_expr.hpp"
#include "fskit/normed.hpp"
#include "fskit/rng.hpp"
#include "fskit/soft_real.hpp"
#include "fskit/topology.hpp"

namespace {

using namespace fskit;

struct GlobalOptions {
    std::uint64_t seed = 7;
    std::size_t grid = 101;
    double tol = 1e-9;
    std::string format = "text";
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || text.empty() || text.back() == sep) out.push_back(cur);
    return out;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& tok : split(text, ',')) {
        if (tok.empty()) throw ParseError("empty entry in number list: \"" + text + "\"");
        out.push_back(std::stod(tok));
    }
    return out;
}

int emit(const RunReport& report, const GlobalOptions& opt,
         std::chrono::steady_clock::time_point started, int exit_code) {
    RunReport final_report = report;
    const auto elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    final_report.add("exit", std::to_string(exit_code));
    final_report.add("timing_ms", format_double(elapsed));
    std::cout << (opt.format == "json" ? final_report.to_json() : final_report.to_text());
    return exit_code;
}

// ---------------------------------------------------------------------------
// ops: tiny expression grammar over loaded sets
// ---------------------------------------------------------------------------

struct OpsArgs {
    std::vector<std::string> loads;
    std::string expr;
    std::string out;
};

int run_ops(const OpsArgs& args, const GlobalOptions& opt,
            std::chrono::steady_clock::time_point started) {
    RunReport report;
    report.add("command", "ops");
    report.add("expr", args.expr);

    std::map<std::string, FuzzySoftSet> sets;
    std::string digest_input = args.expr;
    for (const auto& spec : args.loads) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw ParseError("--load expects name=path, got \"" + spec + "\"");
        const std::string name = spec.substr(0, eq);
        const std::string path = spec.substr(eq + 1);
        const std::string text = read_text_file(path);
        digest_input += text;
        sets.emplace(name, load_fss(path));
    }
    report.add("inputs", digest_hex(fnv1a(digest_input)));
    report.add("seed", std::to_string(opt.seed));

    const auto tokens = split(args.expr, ' ');
    if (tokens.empty()) throw ParseError("empty expression");
    const std::string& op = tokens.front();

    auto resolve = [&](const std::string& name,
                       const FuzzySoftSet* context) -> FuzzySoftSet {
        if (auto it = sets.find(name); it != sets.end()) return it->second;
        if (name == "phi" || name == "absolute") {
            if (!context)
                throw ParseError("builtin \"" + name +
                                 "\" needs another operand for its carrier");
            return name == "phi"
                       ? FuzzySoftSet::null_set(context->params(), context->universe())
                       : FuzzySoftSet::absolute(context->params(), context->universe());
        }
        throw ParseError("unknown identifier \"" + name + "\"");
    };

    std::optional<FuzzySoftSet> result_set;
    if (op == "complement") {
        if (tokens.size() != 2) throw ParseError("complement takes one operand");
        result_set = fs_complement(resolve(tokens[1], nullptr));
    } else if (op == "union" || op == "intersect") {
        if (tokens.size() != 3) throw ParseError(op + " takes two operands");
        const bool a_builtin = !sets.count(tokens[1]);
        FuzzySoftSet rhs_first = resolve(tokens[a_builtin ? 2 : 1], nullptr);
        FuzzySoftSet lhs = a_builtin ? resolve(tokens[1], &rhs_first) : rhs_first;
        FuzzySoftSet rhs = a_builtin ? rhs_first : resolve(tokens[2], &lhs);
        result_set = op == "union" ? fs_union(lhs, rhs) : fs_intersection(lhs, rhs);
    } else if (op == "subset?" || op == "equal?") {
        if (tokens.size() != 3) throw ParseError(op + " takes two operands");
        const FuzzySoftSet lhs = resolve(tokens[1], nullptr);
        const FuzzySoftSet rhs = resolve(tokens[2], &lhs);
        const bool verdict = op == "subset?" ? fs_subset(lhs, rhs) : fs_equal(lhs, rhs);
        report.add("result", verdict ? "true" : "false");
    } else {
        throw ParseError("unknown operation \"" + op + "\"");
    }

    if (result_set) {
        if (!args.out.empty()) {
            save_fss(*result_set, args.out);
            report.add("saved", args.out);
        } else {
            const std::string doc = opt.format == "csv" ? fss_to_csv(*result_set)
                                                        : fss_to_json(*result_set);
            for (const auto& line : split(doc, '\n'))
                if (!line.empty()) report.add_line(line);
        }
    }
    return emit(report, opt, started, 0);
}

// ---------------------------------------------------------------------------
// check: seeded law suites
// ---------------------------------------------------------------------------

int run_check(const std::string& law, int cases, bool inject_fault,
              const GlobalOptions& opt, std::chrono::steady_clock::time_point started) {
    LawReport law_report;
    if (law == "demorgan")
        law_report = law_demorgan(opt.seed, cases > 0 ? cases : 1000, inject_fault);
    else if (law == "maplaws")
        law_report = law_maplaws(opt.seed, cases > 0 ? cases : 500, inject_fault);
    else if (law == "identities")
        law_report = law_identities(opt.seed, cases > 0 ? cases : 200, inject_fault);
    else if (law == "normaxioms")
        law_report = law_normaxioms(opt.seed, cases > 0 ? cases : 500, inject_fault);
    else
        throw ParseError("unknown law \"" + law + "\"");

    RunReport report;
    report.add("command", "check");
    report.add("law", law_report.law);
    report.add("inputs", digest_hex(fnv1a(law + std::to_string(law_report.cases))));
    report.add("seed", std::to_string(law_report.seed));
    report.add("cases", std::to_string(law_report.cases));
    report.add("violations", std::to_string(law_report.violations));
    if (!law_report.first_witness.empty())
        report.add("first_witness", law_report.first_witness);
    return emit(report, opt, started, law_report.passed() ? 0 : 1);
}

// ---------------------------------------------------------------------------
// fixpoint: contraction iteration with bound columns
// ---------------------------------------------------------------------------

struct FixpointArgs {
    std::string map_expr;
    std::string affine_path;
    double k = 0.0;
    std::string start = "0";
    std::string lambda;
    std::string norm = "inf";
    int max_iter = 100;
};

BaseNorm parse_base_norm(const std::string& name) {
    if (name == "1") return BaseNorm::L1;
    if (name == "2") return BaseNorm::L2;
    if (name == "inf") return BaseNorm::LInf;
    throw ParseError("unknown norm \"" + name + "\" (expected 1, 2 or inf)");
}

int run_fixpoint(const FixpointArgs& args, const GlobalOptions& opt,
                 std::chrono::steady_clock::time_point started) {
    RunReport report;
    report.add("command", "fixpoint");

    const BaseNorm base = parse_base_norm(args.norm);
    const Vector start_coords = parse_number_list(args.start);

    std::string digest_input = args.map_expr + args.start + format_double(args.k);
    std::optional<ContractionSpec> spec;
    if (!args.affine_path.empty()) {
        const std::string text = read_text_file(args.affine_path);
        digest_input += text;
        const auto [a, b] = affine_from_json(text);
        spec = ContractionSpec::affine(a, b, args.k, base);
        report.add("map", "affine " + args.affine_path);
    } else {
        if (args.map_expr.empty()) throw ParseError("need --map or --affine");
        spec = ContractionSpec::scalar(parse_scalar_map(args.map_expr), args.k);
        report.add("map", args.map_expr);
    }
    report.add("inputs", digest_hex(fnv1a(digest_input)));
    report.add("seed", std::to_string(opt.seed));
    report.add("k", format_double(args.k));
    report.add("tol", format_double(opt.tol));

    const ParameterSet params({"e1", "e2"});
    std::vector<double> lambda(params.size(), 1.0);
    if (!args.lambda.empty()) {
        lambda = parse_number_list(args.lambda);
        if (lambda.size() != params.size())
            throw ParseError("--lambda needs one grade per parameter (2)");
    }
    const FSNorm norm(params, AlphaGrid::uniform(opt.grid), base,
                      std::vector<double>(params.size(), 1.0));
    const FSVectorPoint start_pt(start_coords, params, lambda);

    const auto result = fixpoint_solve(norm, *spec, start_pt, opt.tol, args.max_iter);

    int bound_violations = 0;
    report.add_line("n | x_n | step | apriori | aposteriori | dist_to_fix");
    for (std::size_t i = 0; i < result.iterates.size(); ++i) {
        const double dist = vec_norm(
            vec_sub(result.iterates[i].coords(), result.fixed_point.coords()), base);
        if (dist > result.apriori_bounds[i] + 1e-9) ++bound_violations;
        std::string coords;
        for (std::size_t c = 0; c < result.iterates[i].coords().size(); ++c)
            coords += (c ? "," : "") + format_double(result.iterates[i].coords()[c]);
        report.add_line(std::to_string(i + 1) + " | " + coords + " | " +
                        format_double(result.step_norms[i]) + " | " +
                        format_double(result.apriori_bounds[i]) + " | " +
                        format_double(result.aposteriori_bounds[i]) + " | " +
                        format_double(dist));
    }

    std::string fixed;
    for (std::size_t c = 0; c < result.fixed_point.coords().size(); ++c)
        fixed += (c ? "," : "") + format_double(result.fixed_point.coords()[c]);
    report.add("fixed_point", fixed);
    report.add("iterations", std::to_string(result.iterates.size()));
    report.add("status", result.status == FixpointResult::Status::converged
                             ? "converged"
                             : "max_iter_exceeded");
    report.add("bound_violations", std::to_string(bound_violations));

    const bool ok =
        result.status == FixpointResult::Status::converged && bound_violations == 0;
    return emit(report, opt, started, ok ? 0 : 1);
}

// ---------------------------------------------------------------------------
// topology: check / slice / lift / separation
// ---------------------------------------------------------------------------

struct TopologyArgs {
    std::string action;
    std::string in;
    std::string param;
    std::string params_csv;
    std::string points_path;
    std::string out;
};

int run_topology(const TopologyArgs& args, const GlobalOptions& opt,
                 std::chrono::steady_clock::time_point started) {
    RunReport report;
    report.add("command", "topology " + args.action);
    const std::string text = read_text_file(args.in);
    std::string digest_input = text;

    int exit_code = 0;
    if (args.action == "check") {
        const auto opens = fs_collection_from_json(text);
        const auto verdict = fst_check(opens, ClosurePolicy{12, 1000, opt.seed});
        report.add("inputs", digest_hex(fnv1a(digest_input)));
        report.add("seed", std::to_string(opt.seed));
        report.add("opens", std::to_string(opens.size()));
        report.add("verdict", verdict.describe());
        exit_code = verdict.ok() ? 0 : 1;
    } else if (args.action == "slice") {
        if (args.param.empty()) throw ParseError("slice needs --param");
        const FSTopology topo(fs_collection_from_json(text),
                              ClosurePolicy{12, 1000, opt.seed});
        const auto slice = fst_slice(topo, args.param);
        const auto verdict =
            fuzzy_check(topo.universe(), slice, ClosurePolicy{12, 1000, opt.seed});
        report.add("inputs", digest_hex(fnv1a(digest_input)));
        report.add("seed", std::to_string(opt.seed));
        report.add("param", args.param);
        report.add("slice_size", std::to_string(slice.size()));
        report.add("verdict", verdict.describe());
        for (const auto& row : slice) {
            std::string line;
            for (std::size_t x = 0; x < row.size(); ++x)
                line += (x ? "," : "") + format_double(row.grade(x));
            report.add_line(line);
        }
        exit_code = verdict.ok() ? 0 : 1;
    } else if (args.action == "lift") {
        if (args.params_csv.empty()) throw ParseError("lift needs --params");
        const auto crisp = crisp_topology_from_json(text);
        const ParameterSet params(split(args.params_csv, ','));
        const auto lifted = fst_lift_crisp(crisp, params);
        report.add("inputs", digest_hex(fnv1a(digest_input)));
        report.add("seed", std::to_string(opt.seed));
        report.add("opens", std::to_string(lifted.opens().size()));
        report.add("verdict", "ok");
        if (!args.out.empty()) {
            write_text_file(args.out, fs_collection_to_json(lifted.opens()));
            report.add("saved", args.out);
        }
    } else if (args.action == "separation") {
        if (args.points_path.empty()) throw ParseError("separation needs --points");
        const std::string points_text = read_text_file(args.points_path);
        digest_input += points_text;
        const FSTopology topo(fs_collection_from_json(text),
                              ClosurePolicy{12, 1000, opt.seed});
        const auto points = points_from_json(points_text);
        std::vector<std::pair<FuzzySoftPoint, FuzzySoftPoint>> pairs;
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (fsp_distinct(points[i], points[j]))
                    pairs.emplace_back(points[i], points[j]);
        const auto sep = fst_separation(topo, pairs);
        report.add("inputs", digest_hex(fnv1a(digest_input)));
        report.add("seed", std::to_string(opt.seed));
        report.add("pairs", std::to_string(sep.pairs_checked));
        auto describe = [](const SeparationReport::Axiom& axiom) {
            if (axiom.holds) return std::string("holds");
            return "fails at pair " + std::to_string(*axiom.failing_pair);
        };
        report.add("T0", describe(sep.t0));
        report.add("T1", describe(sep.t1));
        report.add("T2", describe(sep.t2));
    } else {
        throw ParseError("unknown topology action \"" + args.action + "\"");
    }
    return emit(report, opt, started, exit_code);
}

// ---------------------------------------------------------------------------
// decide: grade aggregation strategies
// ---------------------------------------------------------------------------

int run_decide(const std::string& in, const std::string& strategy,
               const std::string& weights_csv, const GlobalOptions& opt,
               std::chrono::steady_clock::time_point started) {
    const std::string text = read_text_file(in);
    const FuzzySoftSet fss = in.size() > 4 && in.substr(in.size() - 4) == ".csv"
                                 ? fss_from_csv(text)
                                 : fss_from_json(text);

    std::vector<double> weights(fss.params().size(), 1.0);
    if (!weights_csv.empty()) {
        weights = parse_number_list(weights_csv);
        if (weights.size() != fss.params().size())
            throw ValidationError("weight count does not match parameter count");
    }

    std::vector<std::pair<std::string, double>> scores;
    for (std::size_t x = 0; x < fss.universe().size(); ++x) {
        double score = 0.0;
        if (strategy == "max-min") {
            score = 1.0;
            for (std::size_t e = 0; e < fss.params().size(); ++e)
                score = std::min(score, fss.grade(e, x));
        } else if (strategy == "weighted-sum") {
            for (std::size_t e = 0; e < fss.params().size(); ++e)
                score += weights[e] * fss.grade(e, x);
        } else {
            throw ParseError("unknown strategy \"" + strategy + "\"");
        }
        scores.emplace_back(fss.universe().label(x), score);
    }
    std::stable_sort(scores.begin(), scores.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    RunReport report;
    report.add("command", "decide");
    report.add("strategy", strategy);
    report.add("inputs", digest_hex(fnv1a(text + strategy + weights_csv)));
    report.add("seed", std::to_string(opt.seed));
    report.add("winner", scores.front().first);
    for (std::size_t r = 0; r < scores.size(); ++r)
        report.add_line(std::to_string(r + 1) + " " + scores[r].first + " " +
                        format_double(scores[r].second));
    return emit(report, opt, started, 0);
}

// ---------------------------------------------------------------------------
// real: fuzzy-real arithmetic evaluator
// ---------------------------------------------------------------------------

struct RealArgs {
    std::string expr;
    std::string levels_csv;
    bool oracle = false;
    double step = 0.0;
};

int run_real(const RealArgs& args, const GlobalOptions& opt,
             std::chrono::steady_clock::time_point started) {
    const AlphaGrid grid = AlphaGrid::uniform(opt.grid);
    ArithmeticTrace trace;
    const FuzzyReal value = parse_fuzzy_real_expr(args.expr, grid, &trace);

    RunReport report;
    report.add("command", "real");
    report.add("expr", args.expr);
    report.add("inputs", digest_hex(fnv1a(args.expr)));
    report.add("seed", std::to_string(opt.seed));
    report.add("normalized", trace.normalized ? "true" : "false");

    std::vector<std::size_t> level_indices;
    if (args.levels_csv.empty()) {
        const std::size_t m = grid.size();
        for (std::size_t j : {std::size_t{0}, m / 4, m / 2, (3 * m) / 4, m - 1})
            if (level_indices.empty() || level_indices.back() != j) level_indices.push_back(j);
    } else {
        for (double alpha : parse_number_list(args.levels_csv)) {
            const auto idx = grid.index_of(alpha);
            if (!idx)
                throw ValidationError("alpha level not on grid: " + format_double(alpha));
            level_indices.push_back(*idx);
        }
    }
    for (std::size_t j : level_indices)
        report.add_line("alpha=" + format_double(grid.level(j)) + " [" +
                        format_double(value.lower(j)) + ", " +
                        format_double(value.upper(j)) + "]");

    if (args.oracle) {
        // Split the outermost op(lhs, rhs) and run the sup-min route on the
        // evaluated sides.
        const auto open = args.expr.find('(');
        if (open == std::string::npos) throw ParseError("--oracle needs op(lhs, rhs)");
        const std::string op = args.expr.substr(0, open);
        int depth = 0;
        std::size_t split_at = std::string::npos;
        for (std::size_t i = open + 1; i < args.expr.size(); ++i) {
            const char c = args.expr[i];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                split_at = i;
                break;
            }
        }
        const auto close = args.expr.rfind(')');
        if (split_at == std::string::npos || close == std::string::npos || close <= split_at)
            throw ParseError("--oracle needs op(lhs, rhs)");
        const FuzzyReal lhs =
            parse_fuzzy_real_expr(args.expr.substr(open + 1, split_at - open - 1), grid);
        const FuzzyReal rhs =
            parse_fuzzy_real_expr(args.expr.substr(split_at + 1, close - split_at - 1), grid);

        const double span = value.upper(0) - value.lower(0);
        const double step = args.step > 0.0 ? args.step : std::max(0.001 * span, 1e-4);
        MembershipCurve curve;
        if (op == "add")
            curve = fr_ext_add(lhs, rhs, step);
        else if (op == "sub")
            curve = fr_ext_sub(lhs, rhs, step);
        else if (op == "mul")
            curve = fr_ext_mul(lhs, rhs, step);
        else if (op == "div")
            curve = fr_ext_div(lhs, rhs, step);
        else
            throw ParseError("--oracle supports add/sub/mul/div only");
        report.add("oracle_step", format_double(step));
        report.add("oracle_max_cut_deviation",
                   format_double(fr_max_cut_deviation(value, curve)));
    }
    return emit(report, opt, started, 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy soft set calculus toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOptions opt;
    if (const char* env_seed = std::getenv("FSKIT_SEED")) {
        try {
            opt.seed = std::stoull(env_seed);
        } catch (...) {
            std::cerr << "warning: ignoring malformed FSKIT_SEED\n";
        }
    }
    app.add_option("--seed", opt.seed, "random seed (default: FSKIT_SEED or 7)");
    app.add_option("--grid", opt.grid, "alpha grid levels")->check(CLI::Range(2, 100000));
    app.add_option("--tol", opt.tol, "tolerance for iterative solves");
    app.add_option("--format", opt.format, "report/document format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    OpsArgs ops_args;
    auto* ops = app.add_subcommand("ops", "evaluate a set expression");
    ops->add_option("--load", ops_args.loads, "name=path bindings");
    ops->add_option("--expr", ops_args.expr, "expression")->required();
    ops->add_option("--out", ops_args.out, "output document path");

    std::string law;
    int cases = 0;
    bool inject_fault = false;
    auto* check = app.add_subcommand("check", "run a seeded law suite");
    check->add_option("--law", law, "demorgan|maplaws|identities|normaxioms")->required();
    check->add_option("--cases", cases, "case count (0 = per-law default)");
    check->add_flag("--inject-fault", inject_fault, "corrupt one case as a self-test");

    FixpointArgs fix_args;
    auto* fixpoint = app.add_subcommand("fixpoint", "iterate a contraction to its fixed point");
    fixpoint->add_option("--map", fix_args.map_expr, "scalar map over x, e.g. \"x/2+1\"");
    fixpoint->add_option("--affine", fix_args.affine_path, "affine map document path");
    fixpoint->add_option("--k", fix_args.k, "Lipschitz factor in (0,1)")->required();
    fixpoint->add_option("--start", fix_args.start, "start coordinates, comma-separated");
    fixpoint->add_option("--lambda", fix_args.lambda, "point grades, comma-separated");
    fixpoint->add_option("--norm", fix_args.norm, "base norm: 1|2|inf");
    fixpoint->add_option("--max-iter", fix_args.max_iter, "iteration cap");

    TopologyArgs topo_args;
    auto* topology = app.add_subcommand("topology", "finite topology checks");
    topology->add_option("action", topo_args.action, "check|slice|lift|separation")
        ->required();
    topology->add_option("--in", topo_args.in, "input document")->required();
    topology->add_option("--param", topo_args.param, "parameter for slice");
    topology->add_option("--params", topo_args.params_csv, "parameter labels for lift");
    topology->add_option("--points", topo_args.points_path, "points document for separation");
    topology->add_option("--out", topo_args.out, "output document path");

    std::string decide_in, strategy = "max-min", weights_csv;
    auto* decide = app.add_subcommand("decide", "rank objects by their grades");
    decide->add_option("--in", decide_in, "grade table document")->required();
    decide->add_option("--strategy", strategy, "max-min|weighted-sum");
    decide->add_option("--weights", weights_csv, "weights for weighted-sum");

    RealArgs real_args;
    auto* real = app.add_subcommand("real", "evaluate fuzzy-real arithmetic");
    real->add_option("--expr", real_args.expr, "e.g. \"add(tri(1,2,3), tri(2,3,4))\"")
        ->required();
    real->add_option("--levels", real_args.levels_csv, "alpha levels to print");
    real->add_flag("--oracle", real_args.oracle, "compare against the sup-min route");
    real->add_option("--step", real_args.step, "oracle support step");

    CLI11_PARSE(app, argc, argv);
    const auto started = std::chrono::steady_clock::now();

    try {
        if (app.got_subcommand(ops)) return run_ops(ops_args, opt, started);
        if (app.got_subcommand(check))
            return run_check(law, cases, inject_fault, opt, started);
        if (app.got_subcommand(fixpoint)) return run_fixpoint(fix_args, opt, started);
        if (app.got_subcommand(topology)) return run_topology(topo_args, opt, started);
        if (app.got_subcommand(decide))
            return run_decide(decide_in, strategy, weights_csv, opt, started);
        if (app.got_subcommand(real)) return run_real(real_args, opt, started);
    } catch (const Error& e) {
        RunReport report;
        report.add("command", "error");
        report.add("error", e.what());
        return emit(report, opt, started, 1);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
