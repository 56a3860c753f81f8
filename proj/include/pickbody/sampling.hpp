#pragma once

#include <array>
#include <random>

#include "pickbody/minkowski.hpp"
#include "pickbody/polydisc.hpp"

namespace pickbody::sampling {

using Rng = std::mt19937_64;

inline Cplx disc_point(Rng& rng, double rmax = 0.95) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = rmax * std::sqrt(unit(rng));
    const double th = 2.0 * M_PI * unit(rng);
    return std::polar(r, th);
}

inline NodeSet nodes(Rng& rng, int n, double rmax = 0.9, double min_sep = 5e-3) {
    CTuple z;
    while (static_cast<int>(z.size()) < n) {
        const Cplx cand = disc_point(rng, rmax);
        bool ok = true;
        for (const auto& existing : z)
            if (std::abs(existing - cand) < min_sep) ok = false;
        if (ok) z.push_back(cand);
    }
    return NodeSet(std::move(z));
}

inline CTuple targets(Rng& rng, int n, double rmax = 0.95) {
    CTuple w;
    for (int i = 0; i < n; ++i) w.push_back(disc_point(rng, rmax));
    return w;
}

/// Nonzero alpha with entries of modulus up to ~2.
inline CTuple alpha(Rng& rng, int n) {
    CTuple a;
    for (int i = 0; i < n; ++i) a.push_back(2.0 * disc_point(rng, 1.0));
    if (tuple_constant(a)) a[0] += Cplx(0.5, 0.0);
    return a;
}

inline MoebiusMap automorphism(Rng& rng, double rmax = 0.9) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    return MoebiusMap(disc_point(rng, rmax), ang(rng));
}

/// Scale a random ray onto the body boundary: returns t * alpha.
inline CTuple boundary_tuple(Rng& rng, const NodeSet& ns) {
    CTuple a = alpha(rng, ns.size());
    return mu_bisection(Ray(ns, a)).boundary_point;
}

struct PolyInstance {
    std::array<PolyPoint, 3> points;
    CTuple alpha;                 // scaled to the disc-body boundary of coordinate 1
};

/// Default sampler for the three-point polydisc suite: the first coordinates
/// are spread out, the remaining ones are contractions of them plus noise, so
/// the coordinate-1 graph disc is frequently (not always) feasible.
inline PolyInstance polydisc_instance(Rng& rng, int m, double noise = 0.12) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const NodeSet base = nodes(rng, 3, 0.75, 0.2);
    CTuple coord1 = base.nodes();

    std::array<CTuple, 3> pts;
    for (int j = 0; j < 3; ++j) pts[static_cast<std::size_t>(j)].push_back(coord1[static_cast<std::size_t>(j)]);
    for (int c = 1; c < m; ++c) {
        const double contraction = 0.3 + 0.6 * unit(rng);
        const double eta = noise * unit(rng);
        for (int j = 0; j < 3; ++j) {
            Cplx v = contraction * coord1[static_cast<std::size_t>(j)] + eta * disc_point(rng, 1.0);
            const double mod = std::abs(v);
            if (mod > 0.95) v *= 0.95 / mod;
            pts[static_cast<std::size_t>(j)].push_back(v);
        }
    }

    PolyInstance inst{{PolyPoint(pts[0]), PolyPoint(pts[1]), PolyPoint(pts[2])},
                      boundary_tuple(rng, base)};
    return inst;
}

}  // namespace pickbody::sampling
