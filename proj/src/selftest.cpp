#include "pickbody/selftest.hpp"

#include <cmath>
#include <sstream>

#include "pickbody/interpolator.hpp"
#include "pickbody/invariants.hpp"
#include "pickbody/polydisc.hpp"
#include "pickbody/sampling.hpp"
#include "pickbody/slice.hpp"

namespace pickbody {

namespace {

using sampling::Rng;

struct Battery {
    std::vector<PropertyResult> results;
    std::uint64_t seed;
    double tol_override;

    double tol(double def) const { return std::max(def, tol_override); }

    template <typename Fn>
    void property(const std::string& name, Fn&& body) {
        PropertyResult r{name, false, ""};
        try {
            std::ostringstream detail;
            r.pass = body(detail);
            r.detail = detail.str();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

int random_size(Rng& rng, int lo, int hi) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)) + lo;
}

/// Random solvable problem: a boundary tuple pulled strictly inside by s.
InterpolationProblem random_solvable(Rng& rng, int n, double& mu_out) {
    const NodeSet ns = sampling::nodes(rng, n);
    CTuple w = sampling::boundary_tuple(rng, ns);
    std::uniform_real_distribution<double> unit(0.05, 0.98);
    const double s = unit(rng);
    for (auto& v : w) v *= s;
    mu_out = s;
    return InterpolationProblem(ns, std::move(w));
}

void moebius_properties(Battery& b) {
    b.property("moebius/metric-invariance", [&](std::ostream& out) {
        Rng rng(b.seed + 1);
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const Cplx x = sampling::disc_point(rng), y = sampling::disc_point(rng);
            const MoebiusMap phi = sampling::automorphism(rng);
            worst = std::max(worst, std::fabs(pseudo_distance(moebius_eval(phi, x),
                                                              moebius_eval(phi, y)) -
                                              pseudo_distance(x, y)));
        }
        out << "max deviation " << worst;
        return worst <= b.tol(1e-12);
    });

    b.property("moebius/involution", [&](std::ostream& out) {
        Rng rng(b.seed + 2);
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const MoebiusMap phi(sampling::disc_point(rng, 0.9));
            const Cplx v = sampling::disc_point(rng);
            worst = std::max(worst, std::abs(moebius_eval(phi, moebius_eval(phi, v)) - v));
        }
        out << "max deviation " << worst;
        return worst <= b.tol(1e-12);
    });

    b.property("moebius/eval-bounded", [&](std::ostream& out) {
        Rng rng(b.seed + 3);
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
            ComposedInterpolant f = ComposedInterpolant::constant(sampling::disc_point(rng, 1.0));
            const int depth = random_size(rng, 1, 4);
            for (int d = 0; d < depth; ++d)
                f = ComposedInterpolant::node(sampling::disc_point(rng, 0.9),
                                              sampling::disc_point(rng, 0.9), std::move(f));
            for (int s = 0; s < 20; ++s) {
                std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
                const Cplx lam = s % 2 == 0 ? sampling::disc_point(rng, 1.0)
                                            : std::polar(1.0, ang(rng));
                worst = std::max(worst, std::abs(f.eval(lam)) - 1.0);
            }
        }
        out << "max excess " << worst;
        return worst <= b.tol(1e-12);
    });
}

void pick_properties(Battery& b) {
    b.property("pick/two-point-schwarz-pick", [&](std::ostream& out) {
        Rng rng(b.seed + 4);
        int checked = 0;
        for (int k = 0; k < 1000; ++k) {
            const NodeSet ns = sampling::nodes(rng, 2);
            const CTuple w = sampling::targets(rng, 2);
            const double mw = pseudo_distance(w[0], w[1]);
            const double mz = pseudo_distance(ns[0], ns[1]);
            if (std::fabs(mw - mz) <= 1e-10) continue;   // undecidable band
            ++checked;
            if (diagnose(InterpolationProblem(ns, w)).solvable != (mw <= mz)) {
                out << "disagreement at trial " << k;
                return false;
            }
        }
        out << checked << " decisive trials agree";
        return true;
    });

    b.property("pick/automorphism-invariance", [&](std::ostream& out) {
        Rng rng(b.seed + 5);
        for (int k = 0; k < 500; ++k) {
            const int n = random_size(rng, 2, 5);
            const NodeSet ns = sampling::nodes(rng, n);
            const CTuple w = sampling::targets(rng, n, 0.9);
            const MoebiusMap phi = sampling::automorphism(rng);
            const MoebiusMap psi = sampling::automorphism(rng);
            const Diagnosis d1 = diagnose(InterpolationProblem(ns, w));
            if (std::fabs(d1.min_eigenvalue) <= 1e-8) continue;   // skip near-boundary
            const Diagnosis d2 = diagnose(InterpolationProblem(
                NodeSet(apply_automorphism_to_tuple(psi, ns.nodes())),
                apply_automorphism_to_tuple(phi, w)));
            if (d1.solvable != d2.solvable || d1.unique != d2.unique ||
                (d1.solvable && d1.numeric_rank != d2.numeric_rank)) {
                out << "flag mismatch at trial " << k;
                return false;
            }
        }
        out << "500 trials";
        return true;
    });

    b.property("pick/ray-monotonicity", [&](std::ostream& out) {
        Rng rng(b.seed + 6);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        int used = 0;
        for (int k = 0; k < 200; ++k) {
            const int n = random_size(rng, 2, 5);
            const NodeSet ns = sampling::nodes(rng, n);
            const CTuple w = sampling::targets(rng, n, 0.9);
            const Diagnosis top = diagnose(InterpolationProblem(ns, w));
            if (!top.solvable || std::fabs(top.min_eigenvalue) <= 1e-8) continue;
            ++used;
            for (int s = 0; s < 5; ++s) {
                const double t = unit(rng);
                CTuple tw = w;
                for (auto& v : tw) v *= t;
                if (!diagnose(InterpolationProblem(ns, tw)).solvable) {
                    out << "ray not balanced at trial " << k;
                    return false;
                }
            }
        }
        out << used << " solvable rays";
        return true;
    });
}

void minkowski_properties(Battery& b) {
    b.property("minkowski/norm-axioms", [&](std::ostream& out) {
        Rng rng(b.seed + 7);
        std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
        std::uniform_real_distribution<double> mag(0.1, 3.0);
        double worst_h = 0.0, worst_tri = 0.0, worst_lb = 0.0;
        for (int k = 0; k < 100; ++k) {
            const int n = random_size(rng, 2, 5);
            const NodeSet ns = sampling::nodes(rng, n);
            const CTuple a = sampling::alpha(rng, n);
            const Cplx c = std::polar(mag(rng), ang(rng));
            const double mu_a = mu_bisection(Ray(ns, a)).mu;
            CTuple ca = a;
            for (auto& v : ca) v *= c;
            worst_h = std::max(worst_h,
                               std::fabs(mu_bisection(Ray(ns, ca)).mu - std::abs(c) * mu_a) /
                                   (1.0 + std::abs(c) * mu_a));
            double maxabs = 0.0;
            for (const auto& v : a) maxabs = std::max(maxabs, std::abs(v));
            worst_lb = std::max(worst_lb, maxabs - mu_a);

            const CTuple bb = sampling::alpha(rng, n);
            CTuple sum = a;
            for (int idx = 0; idx < n; ++idx)
                sum[static_cast<std::size_t>(idx)] += bb[static_cast<std::size_t>(idx)];
            double maxsum = 0.0;
            for (const auto& v : sum) maxsum = std::max(maxsum, std::abs(v));
            if (maxsum > 1e-9) {
                const double lhs = mu_bisection(Ray(ns, sum)).mu;
                worst_tri = std::max(lhs - mu_a - mu_bisection(Ray(ns, bb)).mu, worst_tri);
            }
        }
        out << "homogeneity " << worst_h << ", triangle excess " << worst_tri
            << ", lower-bound excess " << worst_lb;
        return worst_h <= b.tol(1e-10) && worst_tri <= b.tol(1e-8) && worst_lb <= b.tol(1e-10);
    });

    b.property("minkowski/submultiplicative", [&](std::ostream& out) {
        Rng rng(b.seed + 8);
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
            const int n = random_size(rng, 2, 5);
            const NodeSet ns = sampling::nodes(rng, n);
            const CTuple a = sampling::alpha(rng, n);
            const CTuple c = sampling::alpha(rng, n);
            CTuple prod(static_cast<std::size_t>(n));
            for (int idx = 0; idx < n; ++idx)
                prod[static_cast<std::size_t>(idx)] =
                    a[static_cast<std::size_t>(idx)] * c[static_cast<std::size_t>(idx)];
            double maxabs = 0.0;
            for (const auto& v : prod) maxabs = std::max(maxabs, std::abs(v));
            if (maxabs < 1e-9) continue;
            worst = std::max(worst, mu_bisection(Ray(ns, prod)).mu -
                                        mu_bisection(Ray(ns, a)).mu *
                                            mu_bisection(Ray(ns, c)).mu);
        }
        out << "max excess " << worst;
        return worst <= b.tol(1e-8);
    });

    b.property("minkowski/oracle-agreement", [&](std::ostream& out) {
        Rng rng(b.seed + 9);
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
            const int n = random_size(rng, 2, 6);
            const NodeSet ns = sampling::nodes(rng, n);
            CTuple a = sampling::alpha(rng, n);
            if (k % 4 == 0)       // exercise the closed forms too
                for (int idx = 0; idx + (k % 2 == 0 ? 1 : 2) < n; ++idx)
                    a[static_cast<std::size_t>(idx)] = Cplx(0.0, 0.0);
            const Ray ray(ns, a);
            const double mu1 = mu_bisection(ray).mu;
            const double mu2 = mu_det_roots(ray).mu;
            worst = std::max(worst, std::fabs(mu1 - mu2) / mu1);
            if (const auto cf = mu_closed_form(ray))
                worst = std::max(worst, std::fabs(mu1 - cf->mu) / mu1);
        }
        out << "max relative spread " << worst;
        return worst <= b.tol(1e-8);
    });

    b.property("minkowski/boundary-recursion", [&](std::ostream& out) {
        Rng rng(b.seed + 10);
        double drift = 0.0;
        for (int k = 0; k < 200; ++k) {
            const int n = random_size(rng, 3, 5);
            const NodeSet ns = sampling::nodes(rng, n);
            const CTuple w = sampling::boundary_tuple(rng, ns);
            if (membership(ns, w) != Membership::boundary) {
                out << "scaled tuple not on boundary at trial " << k;
                return false;
            }
            const InterpolationProblem red = reduce(InterpolationProblem(ns, w));
            const double mu_red = gauge(red.nodes, red.targets);
            drift = std::max(drift, std::fabs(mu_red - 1.0));
        }
        out << "max |mu - 1| after reduction " << drift;
        return drift <= b.tol(1e-7);
    });

    b.property("minkowski/boundary-automorphism-invariance", [&](std::ostream& out) {
        Rng rng(b.seed + 11);
        for (int k = 0; k < 200; ++k) {
            const int n = random_size(rng, 2, 5);
            const NodeSet ns = sampling::nodes(rng, n);
            CTuple w = sampling::boundary_tuple(rng, ns);
            if (k % 2 == 1)
                for (auto& v : w) v *= 0.7;   // interior case
            const Membership before = membership(ns, w);
            const Membership after =
                membership(ns, apply_automorphism_to_tuple(sampling::automorphism(rng), w));
            if (before != after) {
                out << "membership changed at trial " << k;
                return false;
            }
        }
        out << "200 trials";
        return true;
    });
}

void invariant_properties(Battery& b) {
    b.property("invariants/bounds-scaling-collapse", [&](std::ostream& out) {
        Rng rng(b.seed + 12);
        std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
        std::uniform_real_distribution<double> mag(0.2, 4.0);
        double worst_bound = 0.0, worst_scale = 0.0, worst_collapse = 0.0, worst_self = 0.0;
        for (int k = 0; k < 200; ++k) {
            const int n = random_size(rng, 2, 5);
            const NodeSet ns = sampling::nodes(rng, n);
            const CTuple a = sampling::alpha(rng, n);
            const int i = 0, j = n - 1;
            const Ray ray(ns, a);
            const double d = d_disc(InvariantQuery(ray, i, j)).value;
            worst_bound = std::max(worst_bound, d - c_star_disc(ns[i], ns[j]));

            CTuple ca = a;
            const Cplx c = std::polar(mag(rng), ang(rng));
            for (auto& v : ca) v *= c;
            worst_scale = std::max(
                worst_scale, std::fabs(d_disc(InvariantQuery(Ray(ns, ca), i, j)).value - d));

            if (n == 2 && std::abs(a[0] - a[1]) > 1e-6)
                worst_collapse = std::max(worst_collapse,
                                          std::fabs(d - pseudo_distance(ns[0], ns[1])));

            const double d_self =
                d_disc(InvariantQuery(Ray(ns, ns.nodes()), i, j)).value;
            worst_self = std::max(worst_self, std::fabs(d_self - pseudo_distance(ns[i], ns[j])));
        }
        out << "bound excess " << worst_bound << ", scaling " << worst_scale
            << ", n=2 collapse " << worst_collapse << ", alpha=z " << worst_self;
        return worst_bound <= b.tol(1e-10) && worst_scale <= b.tol(1e-10) &&
               worst_collapse <= b.tol(1e-10) && worst_self <= b.tol(1e-10);
    });

    b.property("invariants/automorphism-contraction", [&](std::ostream& out) {
        Rng rng(b.seed + 13);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const int n = random_size(rng, 2, 5);
            const NodeSet ns = sampling::nodes(rng, n);
            const CTuple a = sampling::alpha(rng, n);
            const MoebiusMap phi = sampling::automorphism(rng);
            const double d1 = d_disc(InvariantQuery(Ray(ns, a), 0, n - 1)).value;
            const double d2 = d_disc(InvariantQuery(
                Ray(NodeSet(apply_automorphism_to_tuple(phi, ns.nodes())), a), 0, n - 1)).value;
            worst = std::max(worst, std::fabs(d1 - d2));
        }
        out << "max deviation " << worst;
        return worst <= b.tol(1e-10);
    });

    b.property("invariants/criterion-equivalence", [&](std::ostream& out) {
        Rng rng(b.seed + 14);
        int decisive = 0;
        for (int k = 0; k < 1000; ++k) {
            const int n = random_size(rng, 2, 5);
            const NodeSet ns = sampling::nodes(rng, n);
            CTuple w;
            if (k % 5 == 0) {
                w = sampling::boundary_tuple(rng, ns);   // near-boundary stress
                std::uniform_real_distribution<double> s(0.99, 1.01);
                const double scale = s(rng);
                for (auto& v : w) v *= scale;
                bool inside = true;
                for (const auto& v : w) inside = inside && std::abs(v) < 1.0;
                if (!inside) continue;
            } else {
                w = sampling::targets(rng, n, 0.9);
            }
            const double mu = gauge(ns, w);
            if (std::fabs(mu - 1.0) <= 1e-8) continue;   // membership band
            ++decisive;
            const bool via_pick = diagnose(InterpolationProblem(ns, w)).solvable;
            const bool via_d = solvable_via_d(InterpolationProblem(ns, w)).solvable;
            if (via_pick != via_d) {
                out << "criteria disagree at trial " << k << " (mu = " << mu << ")";
                return false;
            }
        }
        out << decisive << " decisive trials agree";
        return true;
    });
}

void interpolator_properties(Battery& b) {
    b.property("interpolator/residuals-and-contractivity", [&](std::ostream& out) {
        Rng rng(b.seed + 15);
        double worst_res = 0.0;
        for (int k = 0; k < 500; ++k) {
            double mu = 0.0;
            const InterpolationProblem p = random_solvable(rng, random_size(rng, 2, 6), mu);
            const SolveReport rep = central_solve(p);
            for (double r : rep.residuals) worst_res = std::max(worst_res, r);
            if (mu <= 0.99) {
                if (rep.classification != SolutionKind::interior_central &&
                    rep.classification != SolutionKind::constant) {
                    out << "interior problem misclassified at trial " << k;
                    return false;
                }
                if (boundary_sup_probe(rep.interpolant, 256) >= 1.0 - 1e-6) {
                    out << "interior solution not contractive at trial " << k;
                    return false;
                }
            }
        }
        out << "max residual " << worst_res;
        return worst_res <= b.tol(1e-9);
    });

    b.property("interpolator/degree-law", [&](std::ostream& out) {
        Rng rng(b.seed + 16);
        for (int k = 0; k < 100; ++k) {
            const int n = random_size(rng, 2, 5);
            const NodeSet ns = sampling::nodes(rng, n);
            CTuple w;
            if (k % 2 == 0) {
                w = sampling::boundary_tuple(rng, ns);   // generic: degree n-1
            } else {
                // data from a Blaschke product of lower degree
                const int deg = random_size(rng, 1, std::max(1, n - 2));
                CTuple zeros;
                for (int d = 0; d < deg; ++d) zeros.push_back(sampling::disc_point(rng, 0.8));
                const BlaschkeProduct bp(Cplx(1.0, 0.0), zeros);
                for (int idx = 0; idx < n; ++idx) w.push_back(bp.eval(ns[idx]));
            }
            const SolveReport rep = boundary_solve(ns, w);
            const int md = minimal_degree(ns, w);
            if (rep.degree_bound != md) {
                out << "degree " << rep.degree_bound << " != minimal " << md << " at trial " << k;
                return false;
            }
        }
        out << "100 boundary instances";
        return true;
    });

    b.property("interpolator/boundary-equality-clause", [&](std::ostream& out) {
        Rng rng(b.seed + 17);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const int n = random_size(rng, 2, 5);
            const NodeSet ns = sampling::nodes(rng, n);
            const CTuple w = sampling::boundary_tuple(rng, ns);
            const Ray ray(ns, w);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (std::abs(w[static_cast<std::size_t>(i)] -
                                 w[static_cast<std::size_t>(j)]) <= 1e-6)
                        continue;
                    const double m = pseudo_distance(w[static_cast<std::size_t>(i)],
                                                     w[static_cast<std::size_t>(j)]);
                    worst = std::max(
                        worst, std::fabs(m - d_disc(InvariantQuery(ray, i, j)).value));
                }
        }
        out << "max |m - d| " << worst;
        return worst <= b.tol(1e-8);
    });
}

void polydisc_properties(Battery& b) {
    b.property("polydisc/cstar-pseudodistance", [&](std::ostream& out) {
        Rng rng(b.seed + 18);
        double worst = 0.0;
        for (int k = 0; k < 500; ++k) {
            const int m = k % 2 == 0 ? 2 : 3;
            CTuple ca, cb, cc;
            for (int c = 0; c < m; ++c) {
                ca.push_back(sampling::disc_point(rng));
                cb.push_back(sampling::disc_point(rng));
                cc.push_back(sampling::disc_point(rng));
            }
            const PolyPoint a(ca), b2(cb), c3(cc);
            if (std::fabs(c_star_polydisc(a, b2) - c_star_polydisc(b2, a)) != 0.0) {
                out << "asymmetric at trial " << k;
                return false;
            }
            worst = std::max(worst, c_star_polydisc(a, c3) - c_star_polydisc(a, b2) -
                                        c_star_polydisc(b2, c3));
        }
        out << "max triangle excess " << worst;
        return worst <= b.tol(1e-12);
    });

    b.property("polydisc/sandwich-coverage", [&](std::ostream& out) {
        Rng rng(b.seed + 19);
        int certified = 0, total = 0, inapplicable = 0;
        double worst_gap = 0.0;
        for (int m = 2; m <= 3; ++m) {
            for (int k = 0; k < 50; ++k) {
                const auto inst = sampling::polydisc_instance(rng, m);
                ++total;
                bool got = false;
                for (int c = 0; c < m && !got; ++c) {
                    const auto res = graph_disc_certificate(inst.points, inst.alpha, 0, 2, c);
                    if (res.status == CertificateStatus::certified &&
                        res.certificate->gap <= 1e-6) {
                        got = true;
                        worst_gap = std::max(worst_gap, res.certificate->gap);
                    }
                }
                if (got)
                    ++certified;
                else
                    ++inapplicable;
            }
        }
        const double coverage = static_cast<double>(certified) / total;
        out << certified << "/" << total << " certified (coverage " << coverage
            << "), " << inapplicable << " not applicable, max gap " << worst_gap;
        return coverage >= 0.6;
    });

    b.property("polydisc/diagonal-geodesic-delta", [&](std::ostream& out) {
        Rng rng(b.seed + 20);
        double worst = 0.0;
        for (int k = 0; k < 5; ++k) {
            const NodeSet lam = sampling::nodes(rng, 3, 0.6, 0.2);
            CTuple c1, c2, c3;
            for (int j = 0; j < 3; ++j) {
                c1.push_back(lam[j]);   // diagonal embedding
            }
            const std::array<PolyPoint, 3> pts{PolyPoint({c1[0], c1[0]}),
                                               PolyPoint({c1[1], c1[1]}),
                                               PolyPoint({c1[2], c1[2]})};
            const CTuple a = sampling::boundary_tuple(rng, lam);
            const double disc_d = d_disc(InvariantQuery(Ray(lam, a), 0, 2)).value;
            const DeltaBound db = delta_upper(pts, a, 0, 2, DeltaOptions{10, 200, 1e-10});
            worst = std::max(worst, std::fabs(db.value - disc_d));
        }
        out << "max |delta_upper - d| " << worst;
        return worst <= b.tol(1e-6);
    });
}

}  // namespace

std::vector<PropertyResult> run_selftest(std::uint64_t seed, double tol_override) {
    Battery b{{}, seed, tol_override};
    moebius_properties(b);
    pick_properties(b);
    minkowski_properties(b);
    invariant_properties(b);
    interpolator_properties(b);
    polydisc_properties(b);
    return b.results;
}

}  // namespace pickbody
