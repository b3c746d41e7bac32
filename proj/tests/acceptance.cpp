// Acceptance suite: runs every gate criterion at its pinned tolerance and
// prints one pass/fail line per criterion. Exit code is the failure count.
//
// Usage: fskit_acceptance [--cli <path-to-fskit-binary>]
// The CLI path is needed only by the determinism/round-trip criterion.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fskit/format.hpp"
#include "fskit/io.hpp"
#include "fskit/laws.hpp"
#include "fskit/normed.hpp"
#include "fskit/rng.hpp"
#include "fskit/soft_real.hpp"
#include "fskit/topology.hpp"
#include "helpers.hpp"

using namespace fskit;
using namespace fskit::test;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

CmdResult run_cmd(const std::string& cmd) {
    CmdResult result;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) result.output += buf.data();
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string strip_timing(const std::string& report) {
    std::istringstream in(report);
    std::string line, out;
    while (std::getline(in, line))
        if (line.find("timing_ms") == std::string::npos) out += line + "\n";
    return out;
}

// --- criterion 1: De Morgan laws -------------------------------------------

Outcome criterion_demorgan() {
    const auto report = law_demorgan(101, 1000);
    return {report.passed(), "cases=1000 violations=" + std::to_string(report.violations) +
                                 (report.passed() ? "" : " witness=" + report.first_witness)};
}

// --- criterion 2: mapping laws ----------------------------------------------

Outcome criterion_maplaws() {
    const auto report = law_maplaws(102, 500);
    return {report.passed(), "cases=500 violations=" + std::to_string(report.violations) +
                                 (report.passed() ? "" : " witness=" + report.first_witness)};
}

// --- criterion 3: arithmetic identities -------------------------------------

Outcome criterion_identities() {
    const auto report = law_identities(103, 200);
    return {report.passed(), "cases=200 violations=" + std::to_string(report.violations) +
                                 (report.passed() ? "" : " witness=" + report.first_witness)};
}

// --- criterion 4: alpha-cut addition vs sup-min oracle ----------------------

Outcome criterion_supmin_oracle() {
    Rng rng(104);
    const auto grid = AlphaGrid::uniform(101);
    double worst_add = 0.0, worst_tol = 0.0, sub_discrepancy = 0.0;
    int failures = 0;

    for (int pair = 0; pair < 50; ++pair) {
        auto triangular = [&] {
            const double apex = rng.uniform(-2.0, 2.0);
            return fr_triangular(apex - rng.uniform(0.05, 1.0), apex,
                                 apex + rng.uniform(0.05, 1.0), grid);
        };
        const FuzzyReal a = triangular();
        const FuzzyReal b = triangular();

        const FuzzyReal sum = fr_add(a, b);
        const double span = sum.upper(0) - sum.lower(0);
        const double step = 0.001 * span;
        const double tol = std::max(0.001 * span, 2.0 / 101.0);
        const double dev = fr_max_cut_deviation(sum, fr_ext_add(a, b, step));
        if (dev > tol) ++failures;
        worst_add = std::max(worst_add, dev);
        worst_tol = tol;

        // Informational only: the two subtraction routes disagree by design.
        sub_discrepancy = std::max(
            sub_discrepancy, fr_max_cut_deviation(fr_sub(a, b), fr_ext_sub(a, b, step)));
    }

    std::ostringstream detail;
    detail << "pairs=50 worst_add_dev=" << format_double(worst_add)
           << " tol=" << format_double(worst_tol)
           << " sub_route_discrepancy=" << format_double(sub_discrepancy)
           << " (reported, no gate)";
    return {failures == 0, detail.str()};
}

// --- criterion 5: norm axioms ------------------------------------------------

Outcome criterion_norm_axioms() {
    const auto report = law_normaxioms(105, 500);
    return {report.passed(), "cases=500 violations=" + std::to_string(report.violations) +
                                 (report.passed() ? "" : " witness=" + report.first_witness)};
}

// --- criterion 6: slice theorem ----------------------------------------------

Outcome criterion_slice_theorem() {
    Rng rng(106);
    const Universe u({"x1", "x2"});
    const ParameterSet params({"e1", "e2"});
    const std::vector<double> lattice{0.0, 0.5, 1.0};
    int violations = 0;
    std::size_t largest = 0;

    for (int t = 0; t < 100; ++t) {
        const auto collection =
            random_topology_collection(rng, params, u, lattice, 1 + static_cast<int>(rng.below(3)));
        largest = std::max(largest, collection.size());
        const FSTopology topo(collection, ClosurePolicy{12, 1000, rng.next_u64()});
        for (const auto& e : params.labels())
            if (!fuzzy_check(u, fst_slice(topo, e)).ok()) ++violations;
    }
    return {violations == 0, "topologies=100 largest=" + std::to_string(largest) +
                                 " slice_violations=" + std::to_string(violations)};
}

// --- criterion 7: Hausdorff separation ---------------------------------------

Outcome criterion_hausdorff() {
    Rng rng(107);
    const ParameterSet params({"e1", "e2"});
    const FSNorm norm(params, AlphaGrid::uniform(101), BaseNorm::L2, {1.0, 1.0});
    int failures = 0;

    for (int i = 0; i < 200; ++i) {
        const FSVectorPoint x({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)}, params,
                              {rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0)});
        FSVectorPoint y = x;
        do {
            y = FSVectorPoint({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)}, params,
                              {rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0)});
        } while (!fsp_distinct(x, y));
        const auto sep = hausdorff_separate(norm, x, y, 0.1);
        if (!sep.centers_contained || !sep.disjoint_on_grid) ++failures;
    }
    return {failures == 0, "pairs=200 failures=" + std::to_string(failures)};
}

// --- criterion 8: scalar fixed point -----------------------------------------

Outcome criterion_fixpoint_scalar() {
    const ParameterSet params({"e1", "e2"});
    const FSNorm norm(params, AlphaGrid::uniform(101), BaseNorm::LInf, {1.0, 1.0});
    const auto spec = ContractionSpec::scalar([](double v) { return v / 2 + 1; }, 0.5);
    const FSVectorPoint start({0.0}, params, {0.3, 0.9});

    const auto result = fixpoint_solve(norm, spec, start, 1e-9, 100);
    bool ok = result.status == FixpointResult::Status::converged;
    std::string why;

    if (result.iterates.size() > 40) {
        ok = false;
        why = "took " + std::to_string(result.iterates.size()) + " iterations";
    }
    if (ok && std::fabs(result.fixed_point.coords()[0] - 2.0) > 1e-9 + 1e-12) {
        ok = false;
        why = "fixed point off target";
    }
    for (std::size_t i = 0; ok && i < result.iterates.size(); ++i) {
        const double n = static_cast<double>(i + 1);
        if (std::fabs(result.iterates[i].coords()[0] - 2.0) >
            2.0 * std::pow(0.5, n) + 1e-12) {
            ok = false;
            why = "geometric bound broken at step " + std::to_string(i + 1);
        }
        if (result.iterates[i].lambdas() != start.lambdas()) {
            ok = false;
            why = "grades drifted at step " + std::to_string(i + 1);
        }
    }
    return {ok, ok ? "iterations=" + std::to_string(result.iterates.size()) +
                         " final=" + format_double(result.fixed_point.coords()[0])
                   : why};
}

// --- criterion 9: affine fixed point ------------------------------------------

Vector gauss_solve(Matrix m, Vector rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    Vector x(n);
    for (std::size_t r = n; r-- > 0;) {
        double acc = rhs[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= m[r][c] * x[c];
        x[r] = acc / m[r][r];
    }
    return x;
}

Outcome criterion_fixpoint_affine() {
    const ParameterSet params({"e1", "e2"});
    const FSNorm norm(params, AlphaGrid::uniform(101), BaseNorm::LInf, {1.0, 1.0});
    const Matrix a{{0.2, 0.1}, {0.0, 0.3}};
    const Vector b{1.0, 1.0};
    const auto spec = ContractionSpec::affine(a, b, 0.3, BaseNorm::LInf);
    const Vector oracle = gauss_solve({{1.0 - 0.2, -0.1}, {0.0, 1.0 - 0.3}}, b);

    const std::vector<FSVectorPoint> starts{
        FSVectorPoint::crisp({0.0, 0.0}, params),
        FSVectorPoint::crisp({50.0, -50.0}, params),
        FSVectorPoint::crisp({-7.0, 9.0}, params),
    };

    bool ok = true;
    std::string why;
    double worst = 0.0;
    for (const auto& z : starts) {
        const auto result = fixpoint_solve(norm, spec, z, 1e-9, 200);
        const double err =
            vec_norm(vec_sub(result.fixed_point.coords(), oracle), BaseNorm::LInf);
        worst = std::max(worst, err);
        if (err > 1e-9) {
            ok = false;
            why = "support misses the elimination solution by " + format_double(err);
        }
        for (std::size_t i = 0; ok && i < result.iterates.size(); ++i) {
            const double dist =
                vec_norm(vec_sub(result.iterates[i].coords(), oracle), BaseNorm::LInf);
            if (dist > result.apriori_bounds[i] + 1e-9) {
                ok = false;
                why = "a-priori bound violated at step " + std::to_string(i + 1);
            }
        }
    }
    return {ok, ok ? "starts=3 worst_support_error=" + format_double(worst) : why};
}

// --- criterion 10: convergence machinery --------------------------------------

Outcome criterion_convergence() {
    const ParameterSet params({"e1", "e2"});
    const FSNorm norm(params, AlphaGrid::uniform(101), BaseNorm::LInf, {1.0, 1.0});
    const std::vector<double> grades{0.4, 0.8};
    const FSVectorPoint limit({2.0}, params, grades);

    std::vector<FSVectorPoint> pts;
    for (int n = 1; n <= 40; ++n)
        pts.push_back(FSVectorPoint({2.0 - std::pow(2.0, 1.0 - n)}, params, grades));
    const FSSequence seq(pts);

    const double delta = 1e-6;
    const auto conv = seq_converges(norm, seq, limit, 1e-9, delta);
    std::size_t predicted = 1;
    while (std::pow(2.0, 1.0 - static_cast<double>(predicted)) >= delta) ++predicted;

    if (!conv.accepted) return {false, "geometric sequence rejected"};
    if (conv.witness_n != predicted)
        return {false, "witness N=" + std::to_string(conv.witness_n) + " expected " +
                           std::to_string(predicted)};

    if (!seq_is_cauchy(norm, seq, 1e-4).accepted)
        return {false, "geometric sequence not Cauchy at eps=1e-4"};

    std::vector<std::size_t> evens;
    for (std::size_t i = 0; i < seq.size(); i += 2) evens.push_back(i);
    if (!seq_converges(norm, subsequence(seq, evens), limit, 1e-9, delta).accepted)
        return {false, "even-index subsequence lost the limit"};

    // Convergent implies Cauchy across random geometric sequences.
    Rng rng(110);
    int implication_failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const double ratio = rng.uniform(0.1, 0.9);
        const Vector target{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        const std::vector<double> l{rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0)};
        std::vector<FSVectorPoint> sample;
        for (int n = 1; n <= 40; ++n) {
            const double off = std::pow(ratio, n);
            sample.push_back(
                FSVectorPoint({target[0] + off, target[1] - off}, params, l));
        }
        const FSSequence s(sample);
        const auto c = seq_converges(norm, s, FSVectorPoint(target, params, l), 1e-9, 0.05);
        if (!c.accepted || !seq_is_cauchy(norm, s, 0.1).accepted) ++implication_failures;
    }
    if (implication_failures > 0)
        return {false,
                std::to_string(implication_failures) + " of 100 implication checks failed"};

    return {true, "witness_N=" + std::to_string(conv.witness_n) +
                      " implication_checks=100"};
}

// --- criterion 11: CLI determinism and round trip ------------------------------

Outcome criterion_cli(const std::string& cli) {
    if (cli.empty()) return {false, "no --cli path supplied"};

    const auto dir = std::filesystem::temp_directory_path() / "fskit_acceptance";
    std::filesystem::create_directories(dir);
    const auto forest_path = (dir / "forest.json").string();

    const std::string forest_doc = fss_to_json(forest_set());
    write_text_file(forest_path, forest_doc);

    // Byte-level round trip on the canonical document.
    if (fss_to_json(fss_from_json(forest_doc)) != forest_doc)
        return {false, "canonical document is not a fixed point of save(load(.))"};

    // Complement through the CLI.
    const auto comp_path = (dir / "comp.json").string();
    const auto comp = run_cmd(cli + " ops --load f=" + forest_path +
                              " --expr \"complement f\" --out " + comp_path + " --seed 5");
    if (comp.exit_code != 0) return {false, "ops complement exited " + std::to_string(comp.exit_code)};
    const FuzzySoftSet complemented = load_fss(comp_path);
    const double expect[3] = {0.2, 0.7, 0.5};
    for (int i = 0; i < 3; ++i)
        if (std::fabs(complemented.grade(0, static_cast<std::size_t>(i)) - expect[i]) > 1e-15)
            return {false, "complement grade row e1 is off"};

    // The complement document round-trips byte-for-byte.
    const std::string comp_doc = read_text_file(comp_path);
    if (fss_to_json(fss_from_json(comp_doc)) != comp_doc)
        return {false, "CLI output document does not round-trip"};

    // Both decision strategies rank C first.
    for (const std::string strategy : {"max-min", "weighted-sum"}) {
        const auto decide =
            run_cmd(cli + " decide --in " + forest_path + " --strategy " + strategy);
        if (decide.exit_code != 0) return {false, "decide exited nonzero"};
        if (decide.output.find("winner: C") == std::string::npos)
            return {false, strategy + " did not rank C first"};
    }

    // Identical seeds reproduce identical reports, timing aside.
    const std::string check_cmd = cli + " check --law demorgan --cases 100 --seed 11";
    const auto first = run_cmd(check_cmd);
    const auto second = run_cmd(check_cmd);
    if (strip_timing(first.output) != strip_timing(second.output))
        return {false, "identical seeds produced different reports"};
    const auto reseeded = run_cmd(cli + " check --law demorgan --cases 100 --seed 12");
    if (strip_timing(first.output) == strip_timing(reseeded.output))
        return {false, "different seeds produced identical case digests"};

    std::filesystem::remove_all(dir);
    return {true, "round-trip, rankings and seeded reports all reproduce"};
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> criteria{
        {1, "De Morgan laws, 1000 seeded pairs, exact", criterion_demorgan},
        {2, "mapping laws, 500 seeded instances", criterion_maplaws},
        {3, "arithmetic identities and crisp-lift laws, exact", criterion_identities},
        {4, "alpha-cut addition vs sup-min oracle, 50 pairs", criterion_supmin_oracle},
        {5, "norm axioms on R^3, 500 samples", criterion_norm_axioms},
        {6, "slice theorem over 100 random topologies", criterion_slice_theorem},
        {7, "Hausdorff separation, 200 point pairs", criterion_hausdorff},
        {8, "scalar contraction fixed point with geometric bound", criterion_fixpoint_scalar},
        {9, "affine contraction vs elimination oracle", criterion_fixpoint_affine},
        {10, "convergence, Cauchy and subsequence machinery", criterion_convergence},
        {11, "CLI determinism and byte round-trip", [&] { return criterion_cli(cli); }},
    };

    int failures = 0;
    for (const auto& entry : criteria) {
        Outcome outcome;
        try {
            outcome = entry.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.passed) ++failures;
        std::cout << (outcome.passed ? "[PASS]" : "[FAIL]") << " criterion " << entry.id
                  << ": " << entry.name << " — " << outcome.detail << "\n";
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " failed")
              << "\n";
    return failures;
}
