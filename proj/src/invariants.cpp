#include "pickbody/invariants.hpp"

#include <cmath>

namespace pickbody {

InvariantQuery::InvariantQuery(Ray r, int ii, int jj) : ray(std::move(r)), i(ii), j(jj) {
    if (i == j || i < 0 || j < 0 || i >= ray.size() || j >= ray.size())
        throw std::domain_error("InvariantQuery: invalid index pair");
}

double c_star_disc(const Cplx& zi, const Cplx& zj) { return pseudo_distance(zi, zj); }

InvariantValue d_disc(const InvariantQuery& q, bool with_witness) {
    const Cplx ai = q.ray.alpha[static_cast<std::size_t>(q.i)];
    const Cplx aj = q.ray.alpha[static_cast<std::size_t>(q.j)];
    const MinkowskiResult mr = minkowski_functional(q.ray);

    InvariantValue out;
    out.t = mr.t;
    const double scale = std::max({std::abs(ai), std::abs(aj), 1.0});
    if (std::abs(ai - aj) <= 1e-14 * scale)
        out.value = 0.0;
    else
        out.value = pseudo_distance(mr.t * ai, mr.t * aj);

    if (with_witness && !q.ray.constant_alpha()) {
        try {
            out.witness = boundary_solve(q.ray.nodes, mr.boundary_point);
        } catch (const std::exception&) {
            out.witness.reset();   // witness is best-effort
        }
    }
    return out;
}

SolvabilityByInvariant solvable_via_d(const InterpolationProblem& p, double band) {
    const CTuple& w = p.targets;
    SolvabilityByInvariant out;

    if (tuple_constant(w, 1e-12)) {    // condition (1)
        out.solvable = true;
        return out;
    }
    for (const auto& wi : w)
        if (std::abs(wi) >= 1.0 - 1e-12) {
            // unimodular value with unequal targets: maximum modulus rules it out
            out.solvable = false;
            return out;
        }

    const Ray ray(p.nodes, w);
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(j)]) <= 1e-12)
                continue;
            const double dij = d_disc(InvariantQuery(ray, i, j)).value;
            const double mij = pseudo_distance(w[static_cast<std::size_t>(i)],
                                               w[static_cast<std::size_t>(j)]);
            if (mij <= dij) out.solvable = true;
            if (!out.equality_pair && std::fabs(mij - dij) <= band)
                out.equality_pair = std::make_pair(i, j);
        }
    }
    if (out.equality_pair) out.solvable = true;
    return out;
}

}  // namespace pickbody
