#include "pickbody/pick_core.hpp"

#include <algorithm>
#include <cmath>

namespace pickbody {

namespace {
constexpr double kUnimodularTol = 1e-12;
constexpr double kTargetSlack = 1e-9;
}  // namespace

NodeSet::NodeSet(CTuple nodes, double separation_floor) : nodes_(std::move(nodes)) {
    const int n = static_cast<int>(nodes_.size());
    if (n < 1 || n > kMaxNodes)
        throw std::domain_error("NodeSet: size must be between 1 and 15");
    for (const auto& z : nodes_) {
        require_finite(z, "NodeSet node");
        if (std::abs(z) >= 1.0)
            throw std::domain_error("NodeSet: node modulus >= 1");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(nodes_[i] - nodes_[j]) <= separation_floor)
                throw std::domain_error("NodeSet: nodes " + std::to_string(i + 1) + " and " +
                                        std::to_string(j + 1) + " collide");
}

InterpolationProblem::InterpolationProblem(NodeSet ns, CTuple ws)
    : nodes(std::move(ns)), targets(std::move(ws)) {
    if (static_cast<int>(targets.size()) != nodes.size())
        throw std::domain_error("InterpolationProblem: node/target length mismatch");
    for (const auto& w : targets) {
        require_finite(w, "InterpolationProblem target");
        if (std::abs(w) > 1.0 + kTargetSlack)
            throw std::domain_error("InterpolationProblem: target modulus > 1");
    }
}

PickMatrix build_pick_matrix(const InterpolationProblem& p) {
    const int n = p.size();
    const CTuple& z = p.nodes.nodes();
    const CTuple& w = p.targets;
    PickMatrix pm{SquareMatrix(n)};
    for (int i = 0; i < n; ++i) {
        pm.entries.at(i, i) =
            Cplx((1.0 - std::norm(w[i])) / (1.0 - std::norm(z[i])), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Cplx e = (1.0 - w[i] * std::conj(w[j])) / (1.0 - z[i] * std::conj(z[j]));
            pm.entries.at(i, j) = e;
            pm.entries.at(j, i) = std::conj(e);
        }
    }
    const auto eig = hermitian_spectrum(pm.entries);
    pm.min_eigenvalue = eig.front();
    double det = 1.0;
    for (double l : eig) det *= l;
    pm.determinant = det;
    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, pm.entries.at(i, i).real());
    const double tol = 1e-10 * n * std::max(max_diag, 1.0);
    pm.numeric_rank = static_cast<int>(std::count_if(
        eig.begin(), eig.end(), [tol](double l) { return l > tol; }));
    return pm;
}

std::vector<double> hermitian_spectrum(const SquareMatrix& m) {
    const int n = m.n;
    const double scale = std::max(m.max_abs(), 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > 1e-12 * scale)
                throw std::domain_error("hermitian_spectrum: matrix is not Hermitian");

    SquareMatrix a = m;
    // Cyclic Jacobi sweeps with a unitary 2x2 rotation per off-diagonal pair.
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += std::norm(a.at(i, j));
        if (std::sqrt(off) <= 1e-14 * scale) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Cplx b = a.at(p, q);
                const double ab = std::abs(b);
                if (ab <= 1e-300) continue;
                const Cplx phase = b / ab;
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * ab, app - aqq);
                const double c = std::cos(theta);
                const double s = std::sin(theta);

                // A <- A U with U(p,p)=c, U(p,q)=-s*phase, U(q,p)=s*conj(phase), U(q,q)=c
                for (int k = 0; k < n; ++k) {
                    const Cplx akp = a.at(k, p);
                    const Cplx akq = a.at(k, q);
                    a.at(k, p) = c * akp + s * std::conj(phase) * akq;
                    a.at(k, q) = -s * phase * akp + c * akq;
                }
                // A <- U^H A
                for (int k = 0; k < n; ++k) {
                    const Cplx apk = a.at(p, k);
                    const Cplx aqk = a.at(q, k);
                    a.at(p, k) = c * apk + s * phase * aqk;
                    a.at(q, k) = -s * std::conj(phase) * apk + c * aqk;
                }
                a.at(p, q) = Cplx(0.0, 0.0);
                a.at(q, p) = Cplx(0.0, 0.0);
                a.at(p, p) = Cplx(a.at(p, p).real(), 0.0);
                a.at(q, q) = Cplx(a.at(q, q).real(), 0.0);
            }
        }
    }

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a.at(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

Diagnosis diagnose(const InterpolationProblem& p, double tol) {
    const int n = p.size();
    const CTuple& w = p.targets;

    bool any_unimodular = false;
    for (const auto& wi : w)
        if (std::abs(wi) >= 1.0 - kUnimodularTol) any_unimodular = true;

    if (any_unimodular) {
        // Maximum modulus: a unimodular value forces the solution constant.
        const bool all_equal = tuple_constant(w, kUnimodularTol);
        Diagnosis d;
        d.tolerance = tol;
        if (all_equal) {
            d.solvable = true;
            d.unique = true;
            d.min_eigenvalue = 0.0;
            d.numeric_rank = 0;
            return d;
        }
        const PickMatrix pm = build_pick_matrix(p);
        d.solvable = false;
        d.unique = false;
        d.min_eigenvalue = pm.min_eigenvalue;
        d.numeric_rank = pm.numeric_rank;
        return d;
    }

    const PickMatrix pm = build_pick_matrix(p);
    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, pm.entries.at(i, i).real());
    const double eff_tol = tol > 0.0 ? tol : 1e-10 * n * std::max(max_diag, 1.0);

    Diagnosis d;
    d.min_eigenvalue = pm.min_eigenvalue;
    d.numeric_rank = pm.numeric_rank;
    d.tolerance = eff_tol;
    d.solvable = pm.min_eigenvalue >= -eff_tol;
    d.unique = d.solvable && pm.numeric_rank <= n - 1;
    return d;
}

}  // namespace pickbody
