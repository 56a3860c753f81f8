#include "pickbody/interpolator.hpp"

#include <cmath>

namespace pickbody {

namespace {

constexpr double kAllEqualTol = 1e-9;
constexpr double kLeafSnapTight = 1e-9;   // interior path: snap only genuine boundary leaves
constexpr double kLeafSnapBand = 1e-6;    // boundary path: refuse outside this band

bool all_equal(const CTuple& w) { return tuple_constant(w, kAllEqualTol); }

CTuple reduced_targets(const CTuple& z, const CTuple& w) {
    const int n = static_cast<int>(z.size());
    const Cplx zn = z.back();
    const Cplx wn = w.back();
    CTuple out;
    out.reserve(static_cast<std::size_t>(n - 1));
    const MoebiusMap phi_w(wn), phi_z(zn);
    for (int j = 0; j + 1 < n; ++j) {
        Cplx v = moebius_eval(phi_w, w[static_cast<std::size_t>(j)]) /
                 moebius_eval(phi_z, z[static_cast<std::size_t>(j)]);
        const double m = std::abs(v);
        if (m > 1.0) {
            if (m > 1.0 + 1e-7)
                throw std::runtime_error("reduce: target escaped the closed disc");
            v /= m;
        }
        out.push_back(v);
    }
    return out;
}

ComposedInterpolant make_leaf(Cplx w, bool boundary_mode) {
    double m = std::abs(w);
    if (boundary_mode) {
        if (std::fabs(m - 1.0) > kLeafSnapBand)
            throw std::domain_error("boundary_solve: base leaf drifted off the unit circle");
        return ComposedInterpolant::constant(w / m);
    }
    if (m > 1.0 - kLeafSnapTight && m > 0.0) return ComposedInterpolant::constant(w / m);
    return ComposedInterpolant::constant(w);
}

ComposedInterpolant solve_rec(CTuple z, CTuple w, bool boundary_mode) {
    if (all_equal(w) || z.size() == 1) return make_leaf(w.front(), boundary_mode);
    const Cplx zn = z.back();
    const Cplx wn = w.back();
    if (std::abs(wn) >= 1.0 - 1e-12)
        throw std::domain_error("reduce: last target unimodular with unequal targets");
    CTuple w2 = reduced_targets(z, w);
    z.pop_back();
    ComposedInterpolant inner = solve_rec(std::move(z), std::move(w2), boundary_mode);
    return ComposedInterpolant::node(wn, zn, std::move(inner));
}

std::vector<double> residuals_of(const ComposedInterpolant& f, const NodeSet& nodes,
                                 const CTuple& w) {
    std::vector<double> out;
    out.reserve(w.size());
    for (int j = 0; j < nodes.size(); ++j)
        out.push_back(std::abs(f.eval(nodes[j]) - w[static_cast<std::size_t>(j)]));
    return out;
}

}  // namespace

InterpolationProblem reduce(const InterpolationProblem& p) {
    if (p.size() < 2) throw std::domain_error("reduce: need at least two points");
    if (std::abs(p.targets.back()) >= 1.0 - 1e-12)
        throw std::domain_error("reduce: last target is unimodular");
    CTuple z = p.nodes.nodes();
    CTuple w2 = reduced_targets(z, p.targets);
    z.pop_back();
    return InterpolationProblem(NodeSet(std::move(z)), std::move(w2));
}

SolveReport central_solve(const InterpolationProblem& p) {
    if (!diagnose(p).solvable)
        throw std::domain_error("central_solve: problem is not solvable");

    ComposedInterpolant f = solve_rec(p.nodes.nodes(), p.targets, false);
    SolveReport report{std::move(f)};
    report.degree_bound = report.interpolant.depth();
    report.residuals = residuals_of(report.interpolant, p.nodes, p.targets);
    if (all_equal(p.targets))
        report.classification = SolutionKind::constant;
    else if (report.interpolant.leaf_unimodular(1e-12))
        report.classification = SolutionKind::boundary_unique;
    else
        report.classification = SolutionKind::interior_central;
    return report;
}

SolveReport boundary_solve(const NodeSet& nodes, const CTuple& w) {
    if (membership(nodes, w) != Membership::boundary)
        throw std::domain_error("boundary_solve: data is not on the body boundary");

    ComposedInterpolant f = solve_rec(nodes.nodes(), w, true);
    SolveReport report{std::move(f)};
    report.degree_bound = report.interpolant.depth();
    report.residuals = residuals_of(report.interpolant, nodes, w);
    report.classification = report.degree_bound == 0 ? SolutionKind::constant
                                                     : SolutionKind::boundary_unique;
    return report;
}

int minimal_degree(const NodeSet& nodes, const CTuple& w) {
    if (membership(nodes, w) != Membership::boundary)
        throw std::domain_error("minimal_degree: data is not on the body boundary");
    const int n = nodes.size();

    for (int k = 1; k <= n; ++k) {
        // lexicographic k-subsets; first hit wins
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            CTuple zs, ws;
            for (int i : idx) {
                zs.push_back(nodes[i]);
                ws.push_back(w[static_cast<std::size_t>(i)]);
            }
            if (membership(NodeSet(std::move(zs)), ws) == Membership::boundary)
                return k - 1;
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < k; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    throw std::runtime_error("minimal_degree: no boundary subset found");
}

}  // namespace pickbody
