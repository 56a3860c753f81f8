#pragma once

#include <memory>
#include <vector>

#include "pickbody/complex.hpp"

namespace pickbody {

/// Disc automorphism v -> e^{i theta} (u - v) / (1 - conj(u) v).
/// With theta = 0 this is the involution phi_u.
struct MoebiusMap {
    Cplx center;   // u, |u| < 1
    double theta = 0.0;

    MoebiusMap() : center(0.0, 0.0) {}
    MoebiusMap(Cplx u, double rot = 0.0);
};

/// Finite Blaschke product c * prod_l (z_l - v) / (1 - conj(z_l) v), |c| = 1.
struct BlaschkeProduct {
    Cplx unimodular;     // |c| = 1
    CTuple zeros;        // each |z_l| < 1

    BlaschkeProduct(Cplx c, CTuple zs);
    int degree() const { return static_cast<int>(zeros.size()); }
    Cplx eval(const Cplx& v) const;
};

/// Lazy composition tree for the boundary recursion: either a constant leaf
/// or lambda -> phi_u(phi_z(lambda) * inner(lambda)).  Kept as a chain so the
/// Blaschke degree can be read off the structure.
class ComposedInterpolant {
public:
    static ComposedInterpolant constant(Cplx value);
    static ComposedInterpolant node(Cplx target_u, Cplx node_z, ComposedInterpolant inner);

    Cplx eval(const Cplx& lambda) const;
    int depth() const;
    bool is_leaf() const { return leaf_; }
    const Cplx& leaf_value() const;
    bool leaf_unimodular(double tol = 1e-9) const;
    const Cplx& target() const { return u_; }
    const Cplx& node_point() const { return z_; }
    const ComposedInterpolant& inner() const { return *inner_; }

private:
    ComposedInterpolant() = default;
    bool leaf_ = true;
    Cplx value_{0.0, 0.0};
    Cplx u_{0.0, 0.0};
    Cplx z_{0.0, 0.0};
    std::shared_ptr<const ComposedInterpolant> inner_;
};

/// m(a, b) = |(a - b) / (1 - conj(a) b)|.  Both points must be in the open disc.
double pseudo_distance(const Cplx& a, const Cplx& b);

Cplx moebius_eval(const MoebiusMap& map, const Cplx& v);

CTuple apply_automorphism_to_tuple(const MoebiusMap& map, const CTuple& w);

double boundary_sup_probe(const BlaschkeProduct& f, int grid_size = 256);
double boundary_sup_probe(const ComposedInterpolant& f, int grid_size = 256);

}  // namespace pickbody
