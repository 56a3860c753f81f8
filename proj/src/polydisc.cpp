#include "pickbody/polydisc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pickbody {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_dim(const PolyPoint& a, const PolyPoint& b) {
    if (a.dim() != b.dim())
        throw std::domain_error("polydisc: dimension mismatch");
}

bool disc_feasible(const CTuple& lambdas, const std::array<PolyPoint, 3>& points) {
    // A disc through the points exists iff every coordinate problem is
    // solvable (maps into D^m are coordinate-wise).
    const int m = points[0].dim();
    try {
        NodeSet ns(lambdas);
        for (int c = 0; c < m; ++c) {
            CTuple targets;
            for (const auto& p : points) targets.push_back(p.coords[static_cast<std::size_t>(c)]);
            if (!diagnose(InterpolationProblem(ns, std::move(targets))).solvable) return false;
        }
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

double d_value_at(const CTuple& lambdas, const CTuple& alpha, int i, int j) {
    return d_disc(InvariantQuery(Ray(NodeSet(lambdas), alpha), i, j)).value;
}

struct DeltaObjective {
    const std::array<PolyPoint, 3>& points;
    const CTuple& alpha;
    int i, j;

    double operator()(const std::array<double, 3>& x) const {
        const Cplx l2(x[0], 0.0);
        const Cplx l3(x[1], x[2]);
        if (x[0] <= 1e-6 || x[0] >= 0.999) return kInf;
        if (std::abs(l3) >= 0.999) return kInf;
        CTuple lambdas{Cplx(0.0, 0.0), l2, l3};
        if (std::abs(l3) <= 1e-6 || std::abs(l3 - l2) <= 1e-6) return kInf;
        if (!disc_feasible(lambdas, points)) return kInf;
        try {
            return d_value_at(lambdas, alpha, i, j);
        } catch (const std::exception&) {
            return kInf;
        }
    }
};

/// Small deterministic Nelder-Mead on R^3 with +inf for infeasible points.
std::pair<std::array<double, 3>, double> nelder_mead(const DeltaObjective& f,
                                                     std::array<double, 3> start,
                                                     double step, int max_iter, double tol) {
    constexpr int kDim = 3;
    std::array<std::array<double, 3>, 4> v;
    std::array<double, 4> fv;
    v[0] = start;
    for (int d = 0; d < kDim; ++d) {
        v[static_cast<std::size_t>(d + 1)] = start;
        v[static_cast<std::size_t>(d + 1)][static_cast<std::size_t>(d)] += step;
    }
    for (int k = 0; k < 4; ++k) fv[static_cast<std::size_t>(k)] = f(v[static_cast<std::size_t>(k)]);

    auto order = [&]() {
        std::array<int, 4> idx{0, 1, 2, 3};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return fv[static_cast<std::size_t>(a)] < fv[static_cast<std::size_t>(b)];
        });
        std::array<std::array<double, 3>, 4> v2;
        std::array<double, 4> f2;
        for (int k = 0; k < 4; ++k) {
            v2[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
            f2[static_cast<std::size_t>(k)] = fv[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
        }
        v = v2;
        fv = f2;
    };

    for (int iter = 0; iter < max_iter; ++iter) {
        order();
        if (std::isfinite(fv[3]) && fv[3] - fv[0] < tol) break;

        std::array<double, 3> centroid{0, 0, 0};
        for (int k = 0; k < 3; ++k)
            for (int d = 0; d < kDim; ++d)
                centroid[static_cast<std::size_t>(d)] +=
                    v[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)] / 3.0;

        auto combine = [&](double coef) {
            std::array<double, 3> p;
            for (int d = 0; d < kDim; ++d)
                p[static_cast<std::size_t>(d)] =
                    centroid[static_cast<std::size_t>(d)] +
                    coef * (v[3][static_cast<std::size_t>(d)] - centroid[static_cast<std::size_t>(d)]);
            return p;
        };

        const auto refl = combine(-1.0);
        const double f_refl = f(refl);
        if (f_refl < fv[0]) {
            const auto exp_pt = combine(-2.0);
            const double f_exp = f(exp_pt);
            if (f_exp < f_refl) { v[3] = exp_pt; fv[3] = f_exp; }
            else               { v[3] = refl;   fv[3] = f_refl; }
        } else if (f_refl < fv[2]) {
            v[3] = refl;
            fv[3] = f_refl;
        } else {
            const auto contr = combine(0.5);
            const double f_contr = f(contr);
            if (f_contr < fv[3]) { v[3] = contr; fv[3] = f_contr; }
            else {
                for (int k = 1; k < 4; ++k) {
                    for (int d = 0; d < kDim; ++d)
                        v[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)] =
                            0.5 * (v[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)] +
                                   v[0][static_cast<std::size_t>(d)]);
                    fv[static_cast<std::size_t>(k)] = f(v[static_cast<std::size_t>(k)]);
                }
            }
        }
    }
    order();
    return {v[0], fv[0]};
}

}  // namespace

PolyPoint::PolyPoint(CTuple c) : coords(std::move(c)) {
    if (coords.size() != 2 && coords.size() != 3)
        throw std::domain_error("PolyPoint: dimension must be 2 or 3");
    for (const auto& z : coords) {
        require_finite(z, "PolyPoint coordinate");
        if (std::abs(z) >= 1.0)
            throw std::domain_error("PolyPoint: coordinate modulus >= 1");
    }
}

double c_star_polydisc(const PolyPoint& a, const PolyPoint& b) {
    require_same_dim(a, b);
    double best = 0.0;
    for (int c = 0; c < a.dim(); ++c)
        best = std::max(best, pseudo_distance(a.coords[static_cast<std::size_t>(c)],
                                              b.coords[static_cast<std::size_t>(c)]));
    return best;
}

Membership two_point_body_membership(const PolyPoint& z1, const PolyPoint& z2,
                                     const Cplx& w1, const Cplx& w2, double band) {
    const double r = c_star_polydisc(z1, z2);
    const double m = pseudo_distance(w1, w2);
    if (std::fabs(m - r) <= band) return Membership::boundary;
    return m < r ? Membership::interior : Membership::exterior;
}

DeltaBound delta_upper(const std::array<PolyPoint, 3>& points, const CTuple& alpha,
                       int i, int j, const DeltaOptions& opts) {
    require_same_dim(points[0], points[1]);
    require_same_dim(points[0], points[2]);
    if (alpha.size() != 3) throw std::domain_error("delta_upper: alpha must have length 3");
    if (tuple_constant(alpha)) throw std::domain_error("delta_upper: alpha must be non-constant");

    const DeltaObjective obj{points, alpha, i, j};

    double best = kInf;
    std::array<double, 3> best_x{0.5, 0.25, 0.25};

    // Graph-disc candidates first: lambda_j = z_{jk}, normalized so that
    // lambda_1 = 0 and lambda_2 is positive real (d is automorphism-invariant).
    for (int k = 0; k < points[0].dim(); ++k) {
        const Cplx l1 = points[0].coords[static_cast<std::size_t>(k)];
        try {
            const MoebiusMap psi(l1);
            Cplx a2 = moebius_eval(psi, points[1].coords[static_cast<std::size_t>(k)]);
            Cplx a3 = moebius_eval(psi, points[2].coords[static_cast<std::size_t>(k)]);
            if (std::abs(a2) < 1e-9) continue;
            const Cplx rot = std::conj(a2) / std::abs(a2);
            a2 *= rot;
            a3 *= rot;
            const std::array<double, 3> x{a2.real(), a3.real(), a3.imag()};
            const double val = obj(x);
            if (val < best) {
                best = val;
                best_x = x;
            }
        } catch (const std::exception&) {
            continue;
        }
    }

    const int g = opts.grid;
    for (int a = 0; a < g; ++a) {
        const double x = (a + 1.0) / (g + 1.0);
        for (int b = 0; b < g; ++b) {
            const double u = -1.0 + 2.0 * (b + 0.5) / g;
            for (int c = 0; c < g; ++c) {
                const double vv = -1.0 + 2.0 * (c + 0.5) / g;
                const double val = obj({x, u, vv});
                if (val < best) {   // strict: ties keep the lowest grid index
                    best = val;
                    best_x = {x, u, vv};
                }
            }
        }
    }
    if (!std::isfinite(best))
        throw std::runtime_error("delta_upper: no feasible analytic disc found");

    const auto [xopt, fopt] =
        nelder_mead(obj, best_x, 0.5 / g, opts.simplex_iterations, opts.tol);
    const bool refined = fopt < best;

    DeltaBound out;
    out.value = refined ? fopt : best;
    const auto& x = refined ? xopt : best_x;
    out.config.lambdas = {Cplx(0.0, 0.0), Cplx(x[0], 0.0), Cplx(x[1], x[2])};
    out.config.feasible = true;
    return out;
}

CertificateResult graph_disc_certificate(const std::array<PolyPoint, 3>& points,
                                         const CTuple& alpha, int i, int j, int k) {
    const int m = points[0].dim();
    if (k < 0 || k >= m) throw std::domain_error("graph_disc_certificate: bad coordinate");
    if (alpha.size() != 3) throw std::domain_error("graph_disc_certificate: alpha length != 3");

    CTuple lambdas;
    for (const auto& p : points) lambdas.push_back(p.coords[static_cast<std::size_t>(k)]);

    CertificateResult out;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (std::abs(lambdas[static_cast<std::size_t>(a)] -
                         lambdas[static_cast<std::size_t>(b)]) <= kDefaultSeparationFloor) {
                out.status = CertificateStatus::infeasible_precondition;
                return out;
            }
    if (!disc_feasible(lambdas, points)) {
        out.status = CertificateStatus::infeasible_disc;
        return out;
    }

    // Upper route: delta <= d^D at the graph nodes (bisection).
    // Lower route: the same value realized by (disc extremal) o (projection),
    // recomputed through the determinant / closed-form oracle.
    const Ray ray(NodeSet(lambdas), alpha);
    const Cplx ai = alpha[static_cast<std::size_t>(i)];
    const Cplx aj = alpha[static_cast<std::size_t>(j)];
    auto d_from_t = [&](double t) {
        if (std::abs(ai - aj) <= 1e-14 * std::max({std::abs(ai), std::abs(aj), 1.0})) return 0.0;
        return pseudo_distance(t * ai, t * aj);
    };
    double v1, v2;
    if (ray.constant_alpha()) {
        v1 = v2 = 0.0;
    } else {
        v1 = d_from_t(mu_bisection(ray).t);
        const auto cf = mu_closed_form(ray);
        v2 = d_from_t(cf ? cf->t : mu_det_roots(ray).t);
    }

    SandwichCertificate cert;
    cert.lower = std::min(v1, v2);
    cert.upper = std::max(v1, v2);
    cert.gap = cert.upper - cert.lower;
    cert.certified = cert.gap <= 1e-8 * (1.0 + cert.upper);
    cert.construction = "graph disc in coordinate " + std::to_string(k + 1) +
                        "; interpolant = disc extremal composed with the coordinate projection";
    out.status = CertificateStatus::certified;
    out.certificate = cert;
    return out;
}

bool geodesic_body_check(const std::vector<PolyPoint>& points, const CTuple& lambdas,
                         const std::vector<ComposedInterpolant>& coordinate_maps) {
    const std::size_t n = points.size();
    if (lambdas.size() != n)
        throw std::domain_error("geodesic_body_check: lambda/point count mismatch");
    if (n == 0) return true;
    const int m = points[0].dim();
    if (static_cast<int>(coordinate_maps.size()) != m)
        throw std::domain_error("geodesic_body_check: need one map per coordinate");

    for (std::size_t jj = 0; jj < n; ++jj)
        for (int c = 0; c < m; ++c)
            if (std::abs(coordinate_maps[static_cast<std::size_t>(c)].eval(lambdas[jj]) -
                         points[jj].coords[static_cast<std::size_t>(c)]) > 1e-9)
                throw std::domain_error("geodesic_body_check: candidate misses a point");
    if (n <= 1) return true;

    // Look for a graph coordinate: phi_k equal to the identity.
    static const CTuple probes{Cplx(0.1, 0.0), Cplx(-0.3, 0.2), Cplx(0.0, 0.5),
                               Cplx(-0.7, 0.0), Cplx(0.33, 0.41)};
    int graph_k = -1;
    for (int c = 0; c < m && graph_k < 0; ++c) {
        bool identity = true;
        for (const auto& s : probes)
            if (std::abs(coordinate_maps[static_cast<std::size_t>(c)].eval(s) - s) > 1e-9)
                identity = false;
        for (std::size_t jj = 0; jj < n && identity; ++jj)
            if (std::abs(coordinate_maps[static_cast<std::size_t>(c)].eval(lambdas[jj]) -
                         lambdas[jj]) > 1e-9)
                identity = false;
        if (identity) graph_k = c;
    }
    if (graph_k < 0) return false;

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (std::fabs(c_star_polydisc(points[a], points[b]) -
                          pseudo_distance(lambdas[a], lambdas[b])) > 1e-8)
                return false;
    return true;
}

}  // namespace pickbody
