#pragma once

#include <array>
#include <optional>
#include <string>

#include "pickbody/invariants.hpp"

namespace pickbody {

/// Point of the polydisc D^m, m in {2, 3}.
struct PolyPoint {
    CTuple coords;

    explicit PolyPoint(CTuple c);
    int dim() const { return static_cast<int>(coords.size()); }
};

/// Normalized disc nodes of a candidate analytic disc through three points.
struct DiscConfiguration {
    CTuple lambdas;      // lambda_1 = 0, lambda_2 real >= 0
    bool feasible = false;
};

struct SandwichCertificate {
    double lower = 0.0;          // realized d value
    double upper = 0.0;          // realized delta value
    double gap = 0.0;
    bool certified = false;
    std::string construction;
};

enum class CertificateStatus { certified, infeasible_precondition, infeasible_disc };

struct CertificateResult {
    CertificateStatus status = CertificateStatus::infeasible_disc;
    std::optional<SandwichCertificate> certificate;
};

struct DeltaOptions {
    int grid = 12;               // per-axis coarse grid
    int simplex_iterations = 200;
    double tol = 1e-10;
};

struct DeltaBound {
    double value = 0.0;
    DiscConfiguration config;
};

/// max over coordinates of the disc pseudodistance.
double c_star_polydisc(const PolyPoint& a, const PolyPoint& b);

/// D_2 = D^2_{c*}: interior iff m(w1, w2) < c*(z1, z2).
Membership two_point_body_membership(const PolyPoint& z1, const PolyPoint& z2,
                                     const Cplx& w1, const Cplx& w2,
                                     double band = kDefaultBoundaryBand);

/// Upper bound for the generalized Lempert function delta: minimize the disc
/// invariant d over feasible analytic-disc configurations through the points.
DeltaBound delta_upper(const std::array<PolyPoint, 3>& points, const CTuple& alpha,
                       int i, int j, const DeltaOptions& opts = {});

/// Sandwich certificate from the graph disc of coordinate k (0-based):
/// lambda_j = z_{jk}.  Certifies d = delta when feasible.
CertificateResult graph_disc_certificate(const std::array<PolyPoint, 3>& points,
                                         const CTuple& alpha, int i, int j, int k);

/// True iff the candidate disc admits a coordinate left inverse (a graph
/// coordinate) and the Carathéodory distances match the disc metric.
bool geodesic_body_check(const std::vector<PolyPoint>& points, const CTuple& lambdas,
                         const std::vector<ComposedInterpolant>& coordinate_maps);

}  // namespace pickbody
