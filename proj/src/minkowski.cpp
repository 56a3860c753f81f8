#include "pickbody/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pickbody {

namespace {

Ray permuted(const Ray& r, const std::vector<int>& order) {
    CTuple z, a;
    for (int idx : order) {
        z.push_back(r.nodes[idx]);
        a.push_back(r.alpha[static_cast<std::size_t>(idx)]);
    }
    return Ray(NodeSet(std::move(z)), std::move(a));
}

double max_abs_alpha(const CTuple& a) {
    double m = 0.0;
    for (const auto& v : a) m = std::max(m, std::abs(v));
    return m;
}

/// P(x)_{ij} = (1 - x^2 a_i conj(a_j)) / (1 - z_i conj(z_j)), Hermitian.
SquareMatrix scaled_pick_matrix(const Ray& r, double x) {
    const int n = r.size();
    const double s = x * x;
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = (1.0 - s * r.alpha[static_cast<std::size_t>(i)] *
                                    std::conj(r.alpha[static_cast<std::size_t>(j)])) /
                         (1.0 - r.nodes[i] * std::conj(r.nodes[j]));
    return m;
}

// tol_scale 0 is fine for the bisection: converged Jacobi eigenvalues carry
// only rounding-level error, and the exact sign does not matter at the
// crossing itself.
bool psd(const SquareMatrix& m, double tol_scale = 0.0) {
    double max_diag = 0.0;
    for (int i = 0; i < m.n; ++i) max_diag = std::max(max_diag, m.at(i, i).real());
    const double tol = tol_scale * m.n * std::max(max_diag, 1.0);
    return hermitian_spectrum(m).front() >= -tol;
}

MinkowskiResult make_result(const Ray& r, double t, MuMethod method) {
    MinkowskiResult res;
    res.t = t;
    res.mu = 1.0 / t;
    res.method = method;
    res.boundary_point.reserve(r.alpha.size());
    for (const auto& a : r.alpha) res.boundary_point.push_back(t * a);
    return res;
}

MinkowskiResult constant_result(const Ray& r, MuMethod method) {
    const double mu = std::abs(r.alpha[0]);
    MinkowskiResult res;
    res.mu = mu;
    res.t = mu > 0.0 ? 1.0 / mu : std::numeric_limits<double>::infinity();
    res.method = method;
    res.boundary_point.reserve(r.alpha.size());
    for (const auto& a : r.alpha) res.boundary_point.push_back(res.t * a);
    return res;
}

// --- real polynomial helpers for the determinant route ------------------

std::vector<double> fit_polynomial(const std::vector<double>& s,
                                   const std::vector<double>& q) {
    const int m = static_cast<int>(s.size());
    // Vandermonde solve, partial pivoting.
    std::vector<double> a(static_cast<std::size_t>(m) * m);
    std::vector<double> rhs = q;
    for (int i = 0; i < m; ++i) {
        double pw = 1.0;
        for (int j = 0; j < m; ++j) {
            a[static_cast<std::size_t>(i) * m + j] = pw;
            pw *= s[static_cast<std::size_t>(i)];
        }
    }
    for (int col = 0; col < m; ++col) {
        int pivot = col;
        for (int r2 = col + 1; r2 < m; ++r2)
            if (std::fabs(a[static_cast<std::size_t>(r2) * m + col]) >
                std::fabs(a[static_cast<std::size_t>(pivot) * m + col]))
                pivot = r2;
        if (pivot != col) {
            for (int c = 0; c < m; ++c)
                std::swap(a[static_cast<std::size_t>(pivot) * m + c],
                          a[static_cast<std::size_t>(col) * m + c]);
            std::swap(rhs[static_cast<std::size_t>(pivot)], rhs[static_cast<std::size_t>(col)]);
        }
        const double d = a[static_cast<std::size_t>(col) * m + col];
        if (d == 0.0) throw std::runtime_error("fit_polynomial: singular system");
        for (int r2 = col + 1; r2 < m; ++r2) {
            const double f = a[static_cast<std::size_t>(r2) * m + col] / d;
            for (int c = col; c < m; ++c)
                a[static_cast<std::size_t>(r2) * m + c] -=
                    f * a[static_cast<std::size_t>(col) * m + c];
            rhs[static_cast<std::size_t>(r2)] -= f * rhs[static_cast<std::size_t>(col)];
        }
    }
    std::vector<double> coeff(static_cast<std::size_t>(m));
    for (int i = m - 1; i >= 0; --i) {
        double acc = rhs[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            acc -= a[static_cast<std::size_t>(i) * m + j] * coeff[static_cast<std::size_t>(j)];
        coeff[static_cast<std::size_t>(i)] = acc / a[static_cast<std::size_t>(i) * m + i];
    }
    return coeff;
}

Cplx poly_eval(const std::vector<double>& c, const Cplx& x) {
    Cplx acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double poly_eval(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double poly_deriv_eval(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i)
        acc = acc * x + i * c[static_cast<std::size_t>(i)];
    return acc;
}

/// Durand-Kerner simultaneous iteration; deterministic start.
std::vector<Cplx> all_roots(std::vector<double> coeff) {
    double maxc = 0.0;
    for (double c : coeff) maxc = std::max(maxc, std::fabs(c));
    if (maxc == 0.0) throw std::runtime_error("mu_det_roots: degenerate determinant polynomial");
    while (coeff.size() > 1 && std::fabs(coeff.back()) <= 1e-12 * maxc) coeff.pop_back();
    const int deg = static_cast<int>(coeff.size()) - 1;
    if (deg < 1) throw std::runtime_error("mu_det_roots: degenerate determinant polynomial");

    const double lead = coeff.back();
    std::vector<Cplx> roots(static_cast<std::size_t>(deg));
    const Cplx seed(0.4, 0.9);
    Cplx pw(1.0, 0.0);
    for (auto& root : roots) {
        pw *= seed;
        root = pw;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double move = 0.0;
        for (int k = 0; k < deg; ++k) {
            Cplx denom(lead, 0.0);
            for (int j = 0; j < deg; ++j)
                if (j != k)
                    denom *= roots[static_cast<std::size_t>(k)] - roots[static_cast<std::size_t>(j)];
            if (std::abs(denom) < 1e-300) continue;
            const Cplx delta = poly_eval(coeff, roots[static_cast<std::size_t>(k)]) / denom;
            roots[static_cast<std::size_t>(k)] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-14) break;
    }
    return roots;
}

}  // namespace

Ray::Ray(NodeSet ns, CTuple a) : nodes(std::move(ns)), alpha(std::move(a)) {
    if (static_cast<int>(alpha.size()) != nodes.size())
        throw std::domain_error("Ray: node/alpha length mismatch");
    for (const auto& v : alpha) require_finite(v, "Ray alpha");
    if (max_abs_alpha(alpha) == 0.0)
        throw std::domain_error("Ray: alpha must be nonzero");
}

MinkowskiResult mu_bisection(const Ray& r, double tol) {
    if (r.constant_alpha()) return constant_result(r, MuMethod::bisection);

    double lo = 0.0;
    double hi = 1.0 / max_abs_alpha(r.alpha);
    if (psd(scaled_pick_matrix(r, hi)))
        return make_result(r, hi, MuMethod::bisection);
    for (int iter = 0; iter < 200 && hi - lo > tol * std::max(1.0, hi); ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (psd(scaled_pick_matrix(r, mid)))
            lo = mid;
        else
            hi = mid;
    }
    return make_result(r, 0.5 * (lo + hi), MuMethod::bisection);
}

MinkowskiResult mu_det_roots(const Ray& r) {
    if (r.constant_alpha())
        throw std::domain_error("mu_det_roots: alpha must be non-constant");
    const int n = r.size();
    const double xmax = 1.0 / max_abs_alpha(r.alpha);
    const double smax = xmax * xmax;

    // q(s) = det P(sqrt(s)) is a real polynomial of degree <= n in s;
    // fit it at Chebyshev samples of [0, smax].
    std::vector<double> s_pts, q_pts;
    for (int i = 0; i <= n; ++i) {
        const double th = M_PI * (i + 0.5) / (n + 1);
        const double s = 0.5 * smax * (1.0 + std::cos(th));
        s_pts.push_back(s);
        q_pts.push_back(determinant(scaled_pick_matrix(r, std::sqrt(s))).real());
    }
    const std::vector<double> coeff = fit_polynomial(s_pts, q_pts);

    double best_x = -1.0;
    for (const Cplx& root : all_roots(coeff)) {
        if (std::fabs(root.imag()) > 1e-7 * (1.0 + std::abs(root))) continue;
        double s = root.real();
        if (s < -1e-10 || s > smax * (1.0 + 1e-9)) continue;
        // sharpen with a few Newton steps on the fitted polynomial
        for (int k = 0; k < 8; ++k) {
            const double d = poly_deriv_eval(coeff, s);
            if (std::fabs(d) < 1e-300) break;
            s -= poly_eval(coeff, s) / d;
        }
        s = std::clamp(s, 0.0, smax);
        // polish against the true determinant (secant), not the fitted model
        {
            auto q = [&](double sv) {
                return determinant(scaled_pick_matrix(r, std::sqrt(std::max(sv, 0.0)))).real();
            };
            double s0 = s, s1 = s * (1.0 + 1e-7) + 1e-12;
            double q0 = q(s0), q1 = q(s1);
            for (int k = 0; k < 60 && std::fabs(q1) > 0.0; ++k) {
                if (std::fabs(q1 - q0) < 1e-300) break;
                const double s2 = s1 - q1 * (s1 - s0) / (q1 - q0);
                if (!std::isfinite(s2) || std::fabs(s2 - s1) > 0.1 * (1.0 + smax)) break;
                s0 = s1; q0 = q1;
                s1 = s2; q1 = q(s1);
                if (std::fabs(s1 - s0) <= 1e-15 * (1.0 + std::fabs(s1))) break;
            }
            if (std::isfinite(s1) && s1 >= -1e-12 && s1 <= smax * (1.0 + 1e-9))
                s = std::clamp(s1, 0.0, smax);
        }
        const double x = std::sqrt(s);
        if (!psd(scaled_pick_matrix(r, x), 1e-7)) continue;
        best_x = std::max(best_x, x);
    }
    if (best_x < 0.0)
        throw std::runtime_error("mu_det_roots: no PSD root found");
    return make_result(r, best_x, MuMethod::det_roots);
}

std::optional<MinkowskiResult> mu_closed_form(const Ray& r) {
    const int n = r.size();
    std::vector<int> zeros, nonzeros;
    for (int i = 0; i < n; ++i) {
        if (std::abs(r.alpha[static_cast<std::size_t>(i)]) == 0.0)
            zeros.push_back(i);
        else
            nonzeros.push_back(i);
    }
    if (nonzeros.size() != 1 && nonzeros.size() != 2) return std::nullopt;

    std::vector<int> order = zeros;
    order.insert(order.end(), nonzeros.begin(), nonzeros.end());
    const Ray p = permuted(r, order);
    const CTuple& z = p.nodes.nodes();

    if (nonzeros.size() == 1) {
        // alpha = c * e_n: t = prod_{l<n} m(z_l, z_n) / |c|
        double t = 1.0;
        for (int l = 0; l + 1 < n; ++l) t *= pseudo_distance(z[static_cast<std::size_t>(l)], z.back());
        t /= std::abs(p.alpha.back());
        return make_result(r, t, MuMethod::closed_form);
    }

    // two nonzero entries: divide out the common Blaschke factor f0
    auto f0 = [&](const Cplx& v) {
        Cplx acc(1.0, 0.0);
        for (int l = 0; l + 2 < n; ++l)
            acc *= (z[static_cast<std::size_t>(l)] - v) /
                   (1.0 - std::conj(z[static_cast<std::size_t>(l)]) * v);
        return acc;
    };
    const Cplx zn1 = z[static_cast<std::size_t>(n - 2)];
    const Cplx zn = z.back();
    const Cplx a = p.alpha[static_cast<std::size_t>(n - 2)] / f0(zn1);
    const Cplx b = p.alpha.back() / f0(zn);

    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    if (std::abs(a - b) <= 1e-12 * scale) {
        // alpha is proportional to the f0 tuple: f0 itself is extremal
        return make_result(r, 1.0 / std::abs(a), MuMethod::closed_form);
    }

    // solve m(t a, t b) = m(z_{n-1}, z_n) = rho for t > 0 (quadratic in s = t^2)
    const double rho = pseudo_distance(zn1, zn);
    const Cplx c = std::conj(a) * b;
    const double A = rho * rho * std::norm(c);
    const double B = 2.0 * rho * rho * c.real() + std::norm(a - b);
    const double C = rho * rho;

    std::vector<double> candidates;
    if (A < 1e-30) {
        if (B > 0.0) candidates.push_back(C / B);
    } else {
        const double disc = B * B - 4.0 * A * C;
        if (disc < -1e-12 * B * B)
            throw std::runtime_error("mu_closed_form: no real scale");
        const double sq = std::sqrt(std::max(disc, 0.0));
        candidates.push_back((B - sq) / (2.0 * A));
        candidates.push_back((B + sq) / (2.0 * A));
    }
    std::sort(candidates.begin(), candidates.end());
    for (double s : candidates) {
        if (s <= 0.0) continue;
        const double t = std::sqrt(s);
        if (std::abs(t * a) >= 1.0 || std::abs(t * b) >= 1.0) continue;
        if (std::fabs(pseudo_distance(t * a, t * b) - rho) > 1e-8) continue;
        return make_result(r, t, MuMethod::closed_form);
    }
    throw std::runtime_error("mu_closed_form: no admissible scale");
}

MinkowskiResult minkowski_functional(const Ray& r) {
    if (r.constant_alpha()) return constant_result(r, MuMethod::closed_form);
    if (auto cf = mu_closed_form(r)) return *cf;
    return mu_bisection(r);
}

Membership membership(const NodeSet& nodes, const CTuple& w, double band) {
    if (static_cast<int>(w.size()) != nodes.size())
        throw std::domain_error("membership: tuple length mismatch");
    if (max_abs_alpha(w) == 0.0) return Membership::interior;  // mu(0) = 0
    const double mu = minkowski_functional(Ray(nodes, w)).mu;
    if (std::fabs(mu - 1.0) <= band) return Membership::boundary;
    return mu < 1.0 ? Membership::interior : Membership::exterior;
}

}  // namespace pickbody
