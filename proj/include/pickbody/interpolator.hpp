#pragma once

#include "pickbody/minkowski.hpp"
#include "pickbody/moebius.hpp"

namespace pickbody {

enum class SolutionKind { interior_central, boundary_unique, constant };

struct SolveReport {
    ComposedInterpolant interpolant;
    int degree_bound = 0;            // Blaschke degree read from the structure
    std::vector<double> residuals;   // |f(z_j) - w_j|
    SolutionKind classification = SolutionKind::interior_central;
};

/// Drop the last node; new targets phi_{w_n}(w_j) / phi_{z_n}(z_j).
/// Requires n >= 2 and |w_n| < 1.
InterpolationProblem reduce(const InterpolationProblem& p);

/// Deterministic interpolant via the boundary recursion with the reduced
/// target as the free base value.  Requires a solvable problem.
SolveReport central_solve(const InterpolationProblem& p);

/// Unique Blaschke-product solution for data on the body boundary.
SolveReport boundary_solve(const NodeSet& nodes, const CTuple& w);

/// Blaschke degree of the boundary solution: smallest k with a k-subset on
/// its own boundary, minus one.
int minimal_degree(const NodeSet& nodes, const CTuple& w);

}  // namespace pickbody
