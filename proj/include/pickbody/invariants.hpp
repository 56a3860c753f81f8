#pragma once

#include <optional>
#include <utility>

#include "pickbody/interpolator.hpp"
#include "pickbody/minkowski.hpp"

namespace pickbody {

struct InvariantQuery {
    Ray ray;
    int i = 0;
    int j = 1;

    InvariantQuery(Ray r, int ii, int jj);
};

struct InvariantValue {
    double value = 0.0;                   // m(t a_i, t a_j)
    double t = 0.0;                       // extremal scale 1/mu
    std::optional<SolveReport> witness;   // extremal interpolant, when non-constant
};

/// Carathéodory pseudodistance of the disc: just the pseudohyperbolic metric.
double c_star_disc(const Cplx& zi, const Cplx& zj);

/// The invariant function d on the disc, computed through t = 1/mu.
InvariantValue d_disc(const InvariantQuery& q, bool with_witness = false);

struct SolvabilityByInvariant {
    bool solvable = false;
    std::optional<std::pair<int, int>> equality_pair;   // boundary pair, when present
};

/// Multi-point Schwarz-Pick solvability test: all targets equal, or some pair
/// with w_i != w_j and m(w_i, w_j) <= d_{(z,w)}(z_i, z_j).
SolvabilityByInvariant solvable_via_d(const InterpolationProblem& p,
                                      double band = kDefaultBoundaryBand);

}  // namespace pickbody
