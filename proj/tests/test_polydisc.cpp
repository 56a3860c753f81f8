#include <doctest.h>

#include "pickbody/polydisc.hpp"
#include "pickbody/sampling.hpp"

using namespace pickbody;

namespace {
const double kDiagT = 0.5 * std::abs(Cplx{0.5, -0.5}) / std::abs(Cplx{1, -0.25});

std::array<PolyPoint, 3> diagonal_points() {
    return {PolyPoint(CTuple{{0, 0}, {0, 0}}), PolyPoint(CTuple{{0.5, 0}, {0.5, 0}}),
            PolyPoint(CTuple{{0, 0.5}, {0, 0.5}})};
}
}  // namespace

TEST_CASE("PolyPoint validation") {
    CHECK_THROWS_AS(PolyPoint(CTuple{{0.5, 0}}), std::domain_error);
    CHECK_THROWS_AS(PolyPoint(CTuple{{0.5, 0}, {1.0, 0}}), std::domain_error);
    CHECK(PolyPoint(CTuple{{0.5, 0}, {0, 0.2}, {0.1, 0}}).dim() == 3);
}

TEST_CASE("c_star_polydisc coordinate maximum") {
    CHECK(c_star_polydisc(PolyPoint(CTuple{{0, 0}, {0, 0}}),
                          PolyPoint(CTuple{{0.5, 0}, {0.3, 0}})) == doctest::Approx(0.5));
    CHECK(c_star_polydisc(PolyPoint(CTuple{{0.2, 0.1}, {0.3, 0}}),
                          PolyPoint(CTuple{{0.2, 0.1}, {0.3, 0}})) == doctest::Approx(0.0));
    CHECK(c_star_polydisc(PolyPoint(CTuple{{0, 0}, {0, 0}}),
                          PolyPoint(CTuple{{0.4, 0}, {0.4, 0}})) == doctest::Approx(0.4));
    CHECK_THROWS_AS(c_star_polydisc(PolyPoint(CTuple{{0, 0}, {0, 0}}),
                                    PolyPoint(CTuple{{0, 0}, {0, 0}, {0, 0}})),
                    std::domain_error);
}

TEST_CASE("c_star_polydisc is symmetric and satisfies the triangle inequality") {
    sampling::Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + trial % 2;
        CTuple a, b, c;
        for (int k = 0; k < m; ++k) {
            a.push_back(sampling::disc_point(rng));
            b.push_back(sampling::disc_point(rng));
            c.push_back(sampling::disc_point(rng));
        }
        const PolyPoint pa(a), pb(b), pc(c);
        CHECK(c_star_polydisc(pa, pb) == doctest::Approx(c_star_polydisc(pb, pa)));
        CHECK(c_star_polydisc(pa, pc) <=
              c_star_polydisc(pa, pb) + c_star_polydisc(pb, pc) + 1e-12);
    }
}

TEST_CASE("two-point body membership") {
    const PolyPoint z1(CTuple{{0, 0}, {0, 0}}), z2(CTuple{{0.5, 0}, {0.3, 0}});
    CHECK(two_point_body_membership(z1, z2, {0.3, 0}, {0.6, 0}) == Membership::interior);
    CHECK(two_point_body_membership(z1, z2, {0.2, 0.1}, {0.2, 0.1}) == Membership::interior);
    CHECK(two_point_body_membership(z1, z2, {0, 0}, {0.5, 0}) == Membership::boundary);
    CHECK(two_point_body_membership(z1, z2, {0, 0}, {0.9, 0}) == Membership::exterior);
}

TEST_CASE("delta_upper on the diagonal matches the disc value") {
    const CTuple alpha{{0, 0}, {0, 0}, {1, 0}};
    const auto bound = delta_upper(diagonal_points(), alpha, 0, 2);
    CHECK(bound.value <= kDiagT + 1e-5);
    CHECK(bound.value >= kDiagT - 1e-9);   // the diagonal config is the minimizer
    CHECK(bound.config.feasible);
}

TEST_CASE("delta_upper improves (weakly) with a finer grid") {
    sampling::Rng rng(73);
    const auto inst = sampling::polydisc_instance(rng, 2);
    DeltaOptions coarse, fine;
    coarse.grid = 8;
    fine.grid = 14;
    const double vc = delta_upper(inst.points, inst.alpha, 0, 2, coarse).value;
    const double vf = delta_upper(inst.points, inst.alpha, 0, 2, fine).value;
    CHECK(vf <= vc + 1e-9);
}

TEST_CASE("delta_upper validation") {
    CHECK_THROWS_AS(delta_upper(diagonal_points(), CTuple{{1, 0}, {1, 0}, {1, 0}}, 0, 2),
                    std::domain_error);
    CHECK_THROWS_AS(delta_upper(diagonal_points(), CTuple{{0, 0}, {1, 0}}, 0, 1),
                    std::domain_error);
}

TEST_CASE("graph certificate on the diagonal") {
    const CTuple alpha{{0, 0}, {0, 0}, {1, 0}};
    const auto res = graph_disc_certificate(diagonal_points(), alpha, 0, 2, 0);
    REQUIRE(res.status == CertificateStatus::certified);
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->certified);
    CHECK(res.certificate->gap <= 1e-8);
    CHECK(res.certificate->upper == doctest::Approx(kDiagT).epsilon(1e-6));
}

TEST_CASE("graph certificate with alpha equal to the graph coordinates") {
    const std::array<PolyPoint, 3> pts{PolyPoint(CTuple{{0, 0}, {0.1, 0}}),
                                       PolyPoint(CTuple{{0.5, 0}, {0.2, 0}}),
                                       PolyPoint(CTuple{{0, 0.5}, {0.15, 0.1}})};
    const CTuple alpha{{0, 0}, {0.5, 0}, {0, 0.5}};   // the first coordinates
    const auto res = graph_disc_certificate(pts, alpha, 0, 1, 0);
    REQUIRE(res.status == CertificateStatus::certified);
    CHECK(res.certificate->upper ==
          doctest::Approx(pseudo_distance({0, 0}, {0.5, 0})).epsilon(1e-7));
}

TEST_CASE("graph certificate precondition failure on repeated coordinates") {
    const std::array<PolyPoint, 3> pts{PolyPoint(CTuple{{0.2, 0}, {0, 0}}),
                                       PolyPoint(CTuple{{0.2, 0}, {0.5, 0}}),
                                       PolyPoint(CTuple{{0.2, 0}, {0, 0.5}})};
    const auto res = graph_disc_certificate(pts, CTuple{{0, 0}, {0, 0}, {1, 0}}, 0, 2, 0);
    CHECK(res.status == CertificateStatus::infeasible_precondition);
    CHECK_FALSE(res.certificate.has_value());
}

TEST_CASE("graph certificate detects an infeasible disc") {
    // Second coordinate moves faster than the first: no disc with graph
    // coordinate 1 can pass through these points.
    const std::array<PolyPoint, 3> pts{PolyPoint(CTuple{{0, 0}, {0, 0}}),
                                       PolyPoint(CTuple{{0.1, 0}, {0.8, 0}}),
                                       PolyPoint(CTuple{{-0.1, 0}, {-0.8, 0}})};
    const auto res = graph_disc_certificate(pts, CTuple{{0, 0}, {0, 0}, {1, 0}}, 0, 2, 0);
    CHECK(res.status == CertificateStatus::infeasible_disc);
}

TEST_CASE("geodesic body check on the diagonal disc") {
    const auto identity =
        ComposedInterpolant::node({0, 0}, {0, 0}, ComposedInterpolant::constant({1, 0}));
    CHECK(std::abs(identity.eval({0.3, 0.2}) - Cplx{0.3, 0.2}) < 1e-14);

    std::vector<PolyPoint> pts;
    for (const auto& p : diagonal_points()) pts.push_back(p);
    const CTuple lambdas{{0, 0}, {0.5, 0}, {0, 0.5}};
    CHECK(geodesic_body_check(pts, lambdas, {identity, identity}));
}

TEST_CASE("geodesic body check fails without a graph coordinate") {
    // phi(l) = (l/2, 0.2): no coordinate is the identity.
    const auto half =
        ComposedInterpolant::node({0, 0}, {0, 0}, ComposedInterpolant::constant({0.5, 0}));
    const auto fixed = ComposedInterpolant::constant({0.2, 0});
    const std::vector<PolyPoint> pts{PolyPoint(CTuple{{0, 0}, {0.2, 0}}),
                                     PolyPoint(CTuple{{0.25, 0}, {0.2, 0}})};
    const CTuple lambdas{{0, 0}, {0.5, 0}};
    CHECK_FALSE(geodesic_body_check(pts, lambdas, {half, fixed}));
}

TEST_CASE("geodesic body check rejects a candidate missing a point") {
    const auto identity =
        ComposedInterpolant::node({0, 0}, {0, 0}, ComposedInterpolant::constant({1, 0}));
    const std::vector<PolyPoint> pts{PolyPoint(CTuple{{0.4, 0}, {0.4, 0}})};
    CHECK_THROWS_AS(geodesic_body_check(pts, CTuple{{0.1, 0}}, {identity, identity}),
                    std::domain_error);
}
