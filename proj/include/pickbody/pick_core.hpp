#pragma once

#include <vector>

#include "pickbody/complex.hpp"

namespace pickbody {

inline constexpr int kMaxNodes = 15;
inline constexpr double kDefaultSeparationFloor = 1e-10;

/// Ordered, pairwise distinct interpolation nodes in the open disc.
class NodeSet {
public:
    explicit NodeSet(CTuple nodes, double separation_floor = kDefaultSeparationFloor);

    const CTuple& nodes() const { return nodes_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    const Cplx& operator[](int i) const { return nodes_[static_cast<std::size_t>(i)]; }

private:
    CTuple nodes_;
};

struct InterpolationProblem {
    NodeSet nodes;
    CTuple targets;   // each |w_j| <= 1

    InterpolationProblem(NodeSet ns, CTuple ws);
    int size() const { return nodes.size(); }
};

struct PickMatrix {
    SquareMatrix entries;
    double min_eigenvalue = 0.0;
    double determinant = 0.0;
    int numeric_rank = 0;
};

struct Diagnosis {
    bool solvable = false;
    bool unique = false;
    double min_eigenvalue = 0.0;
    int numeric_rank = 0;
    double tolerance = 0.0;   // effective PSD tolerance used for the decision
};

/// Entry (i,j) = (1 - w_i conj(w_j)) / (1 - z_i conj(z_j)), with eigenvalue
/// diagnostics attached.
PickMatrix build_pick_matrix(const InterpolationProblem& p);

/// Ascending eigenvalues of a Hermitian matrix, computed by cyclic two-sided
/// Jacobi rotations.  Throws if the input is not Hermitian within tolerance.
std::vector<double> hermitian_spectrum(const SquareMatrix& m);

/// Solvability / uniqueness decision.  tol <= 0 selects the default relative
/// tolerance 1e-10 * n * max diagonal entry.
Diagnosis diagnose(const InterpolationProblem& p, double tol = 0.0);

}  // namespace pickbody
