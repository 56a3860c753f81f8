#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pickbody/interpolator.hpp"
#include "pickbody/invariants.hpp"
#include "pickbody/io.hpp"
#include "pickbody/polydisc.hpp"
#include "pickbody/selftest.hpp"
#include "pickbody/slice.hpp"

namespace {

using namespace pickbody;

// Exit-code contract: 0 ok, 1 selftest failure, 2 input error,
// 3 unsolvable problem, 4 infeasible certificate.
constexpr int kOk = 0;
constexpr int kSelftestFail = 1;
constexpr int kInputError = 2;
constexpr int kUnsolvable = 3;
constexpr int kInfeasible = 4;

struct Options {
    std::string input;
    std::string output;
    double tol = 0.0;
    double band = kDefaultBoundaryBand;
    int grid = 0;
    std::uint64_t seed = 20240815;
};

void emit(const std::string& text, const Options& opt) {
    if (opt.output.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw std::runtime_error("cannot open output file " + opt.output);
    out << text << "\n";
}

void emit(const Report& report, const Options& opt) { emit(report.to_json().dump(2), opt); }

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
}

ProblemFile load_problem(const Options& opt, const std::string& want_domain) {
    if (opt.input.empty()) throw std::invalid_argument("--input is required");
    ProblemFile p = parse_problem(load_json(opt.input));
    if (p.domain != want_domain)
        throw std::invalid_argument("command expects a " + want_domain + " problem file");
    return p;
}

Json diagnostics_base(const Options& opt) {
    return Json{{"tol", opt.tol}, {"band", opt.band}, {"seed", opt.seed}};
}

int cmd_diagnose(const Options& opt) {
    const ProblemFile pf = load_problem(opt, "disc");
    if (!pf.targets) throw std::invalid_argument("field 'targets': missing");
    const InterpolationProblem p(NodeSet(pf.nodes), *pf.targets);
    const Diagnosis d = diagnose(p, opt.tol);

    Report rep;
    rep.command = "diagnose";
    rep.results = {{"solvable", d.solvable},
                   {"unique", d.unique},
                   {"numeric_rank", d.numeric_rank},
                   {"min_eigenvalue", d.min_eigenvalue}};
    rep.diagnostics = diagnostics_base(opt);
    rep.diagnostics["effective_tol"] = d.tolerance;
    rep.diagnostics["method"] = "pick-matrix eigenvalues";
    rep.exit_status = d.solvable ? kOk : kUnsolvable;
    emit(rep, opt);
    return rep.exit_status;
}

int cmd_mu(const Options& opt) {
    const ProblemFile pf = load_problem(opt, "disc");
    if (!pf.alpha) throw std::invalid_argument("field 'alpha': missing");
    const MinkowskiResult mr = minkowski_functional(Ray(NodeSet(pf.nodes), *pf.alpha));

    Report rep;
    rep.command = "mu";
    rep.results = {{"mu", mr.mu},
                   {"t", mr.t},
                   {"boundary_point", to_json(mr.boundary_point)}};
    rep.diagnostics = diagnostics_base(opt);
    rep.diagnostics["method"] = mr.method == MuMethod::bisection    ? "bisection"
                                : mr.method == MuMethod::det_roots ? "det_roots"
                                                                   : "closed_form";
    emit(rep, opt);
    return kOk;
}

int cmd_d(const Options& opt) {
    const ProblemFile pf = load_problem(opt, "disc");
    if (!pf.alpha) throw std::invalid_argument("field 'alpha': missing");
    if (!pf.pair) throw std::invalid_argument("field 'pair': missing");
    const InvariantQuery q(Ray(NodeSet(pf.nodes), *pf.alpha), pf.pair->first, pf.pair->second);
    const InvariantValue v = d_disc(q, true);

    Report rep;
    rep.command = "d";
    rep.results = {{"d", v.value}, {"t", v.t}};
    if (v.witness)
        rep.results["witness"] = interpolant_trace(v.witness->interpolant);
    rep.diagnostics = diagnostics_base(opt);
    rep.diagnostics["method"] = "t = 1/mu, d = m(t a_i, t a_j)";
    emit(rep, opt);
    return kOk;
}

int cmd_solve(const Options& opt) {
    const ProblemFile pf = load_problem(opt, "disc");
    if (!pf.targets) throw std::invalid_argument("field 'targets': missing");
    const InterpolationProblem p(NodeSet(pf.nodes), *pf.targets);
    if (!diagnose(p, opt.tol).solvable) {
        Report rep;
        rep.command = "solve";
        rep.results = {{"solvable", false}};
        rep.diagnostics = diagnostics_base(opt);
        rep.exit_status = kUnsolvable;
        emit(rep, opt);
        return kUnsolvable;
    }
    const SolveReport sr = central_solve(p);

    Report rep;
    rep.command = "solve";
    rep.results = {{"interpolant", interpolant_trace(sr.interpolant)},
                   {"degree_bound", sr.degree_bound},
                   {"residuals", sr.residuals},
                   {"classification",
                    sr.classification == SolutionKind::constant          ? "constant"
                    : sr.classification == SolutionKind::boundary_unique ? "boundary_unique"
                                                                          : "interior_central"}};
    Json samples = Json::array();
    for (int k = 0; k < 8; ++k) {
        const Cplx lam = 0.8 * std::polar(1.0, 2.0 * M_PI * k / 8.0);
        samples.push_back(Json{{"lambda", to_json(lam)}, {"value", to_json(sr.interpolant.eval(lam))}});
    }
    rep.results["samples"] = samples;
    rep.diagnostics = diagnostics_base(opt);
    rep.diagnostics["method"] = "boundary recursion, central base value";
    emit(rep, opt);
    return kOk;
}

int cmd_delta(const Options& opt) {
    const ProblemFile pf = load_problem(opt, "polydisc");
    if (!pf.alpha) throw std::invalid_argument("field 'alpha': missing");
    if (!pf.pair) throw std::invalid_argument("field 'pair': missing");
    if (pf.poly_points.size() != 3)
        throw std::invalid_argument("field 'points': delta needs exactly 3 points");
    const std::array<PolyPoint, 3> pts{PolyPoint(pf.poly_points[0]),
                                       PolyPoint(pf.poly_points[1]),
                                       PolyPoint(pf.poly_points[2])};
    const int i = pf.pair->first, j = pf.pair->second;

    Report rep;
    rep.command = "delta";
    rep.diagnostics = diagnostics_base(opt);

    std::vector<int> coords;
    if (pf.coordinate)
        coords.push_back(*pf.coordinate);
    else
        for (int c = 0; c < pf.m; ++c) coords.push_back(c);

    for (int c : coords) {
        const CertificateResult res = graph_disc_certificate(pts, *pf.alpha, i, j, c);
        if (res.status == CertificateStatus::certified) {
            const SandwichCertificate& cert = *res.certificate;
            rep.results = {{"certified", cert.certified},
                           {"lower", cert.lower},
                           {"upper", cert.upper},
                           {"gap", cert.gap},
                           {"construction", cert.construction}};
            rep.diagnostics["method"] = "graph-disc sandwich certificate";
            emit(rep, opt);
            return kOk;
        }
    }

    // no graph certificate applies; still report the optimizer upper bound
    DeltaOptions dopt;
    if (opt.grid > 0) dopt.grid = opt.grid;
    const DeltaBound db = delta_upper(pts, *pf.alpha, i, j, dopt);
    rep.results = {{"certified", false},
                   {"upper", db.value},
                   {"lambdas", to_json(db.config.lambdas)}};
    rep.diagnostics["method"] = "multi-start simplex upper bound (no certificate)";
    rep.exit_status = kInfeasible;
    emit(rep, opt);
    return kInfeasible;
}

int cmd_slice(const Options& opt) {
    const ProblemFile pf = load_problem(opt, "disc");
    if (!pf.slice) throw std::invalid_argument("field 'slice': missing");
    SliceSpec spec = *pf.slice;
    if (opt.grid > 0) spec.grid = opt.grid;
    const auto rows = run_slice(NodeSet(pf.nodes), spec);
    emit(slice_csv(rows), opt);
    return kOk;
}

int cmd_selftest(const Options& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = run_selftest(opt.seed, opt.tol);
    bool all_pass = true;
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) os << "  (" << r.detail << ")";
        os << "\n";
        all_pass = all_pass && r.pass;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    os << (all_pass ? "selftest: all properties pass" : "selftest: FAILURES present")
       << "  [" << results.size() << " properties, " << secs << " s, seed " << opt.seed << "]";
    emit(os.str(), opt);
    return all_pass ? kOk : kSelftestFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pick interpolation bodies, invariant functions and extremal interpolants"};
    app.require_subcommand(1);
    app.fallthrough();   // global flags may follow the subcommand

    Options opt;
    app.add_option("--input", opt.input, "problem file (JSON)");
    app.add_option("--output", opt.output, "output path (default stdout)");
    app.add_option("--tol", opt.tol, "tolerance override");
    app.add_option("--band", opt.band, "boundary band");
    app.add_option("--grid", opt.grid, "grid override");
    app.add_option("--seed", opt.seed, "random seed for the selftest battery");

    auto* c_diag = app.add_subcommand("diagnose", "solvability / uniqueness of a disc problem");
    auto* c_mu = app.add_subcommand("mu", "Minkowski functional of a ray");
    auto* c_d = app.add_subcommand("d", "invariant function d for a node pair");
    auto* c_solve = app.add_subcommand("solve", "construct an interpolant");
    auto* c_delta = app.add_subcommand("delta", "3-point polydisc d = delta certificate");
    auto* c_slice = app.add_subcommand("slice", "sample mu on a 2-D affine slice (CSV)");
    auto* c_self = app.add_subcommand("selftest", "run the property battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kInputError;
    }

    try {
        if (c_diag->parsed()) return cmd_diagnose(opt);
        if (c_mu->parsed()) return cmd_mu(opt);
        if (c_d->parsed()) return cmd_d(opt);
        if (c_solve->parsed()) return cmd_solve(opt);
        if (c_delta->parsed()) return cmd_delta(opt);
        if (c_slice->parsed()) return cmd_slice(opt);
        if (c_self->parsed()) return cmd_selftest(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
