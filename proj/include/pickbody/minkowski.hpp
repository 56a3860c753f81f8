#pragma once

#include <optional>

#include "pickbody/moebius.hpp"
#include "pickbody/pick_core.hpp"

namespace pickbody {

/// A complex line C * alpha through the origin at fixed nodes.
struct Ray {
    NodeSet nodes;
    CTuple alpha;

    Ray(NodeSet ns, CTuple a);
    int size() const { return nodes.size(); }
    bool constant_alpha(double tol = kEqTol) const { return tuple_constant(alpha, tol); }
};

enum class MuMethod { bisection, det_roots, closed_form };

struct MinkowskiResult {
    double mu = 0.0;                 // Minkowski functional value
    double t = 0.0;                  // extremal scale 1/mu (inf when mu == 0)
    CTuple boundary_point;           // t * alpha
    MuMethod method = MuMethod::bisection;
};

enum class Membership { interior, boundary, exterior };

inline constexpr double kDefaultBoundaryBand = 1e-8;

/// Reference method: bisection on the minimal eigenvalue of
/// P(x)_{ij} = (1 - x^2 a_i conj(a_j)) / (1 - z_i conj(z_j)).
MinkowskiResult mu_bisection(const Ray& r, double tol = 1e-12);

/// Independent oracle: largest PSD root of det P(x) = 0, through the real
/// polynomial q(s) = det P(sqrt(s)) fitted at Chebyshev samples.
MinkowskiResult mu_det_roots(const Ray& r);

/// Closed forms for alpha with exactly one or two nonzero entries.
/// Returns nullopt for other patterns.
std::optional<MinkowskiResult> mu_closed_form(const Ray& r);

/// Dispatch: constant-alpha short circuit, then closed form, then bisection.
MinkowskiResult minkowski_functional(const Ray& r);

Membership membership(const NodeSet& nodes, const CTuple& w,
                      double band = kDefaultBoundaryBand);

}  // namespace pickbody
