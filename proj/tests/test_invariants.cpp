#include <doctest.h>

#include "pickbody/invariants.hpp"
#include "pickbody/sampling.hpp"

using namespace pickbody;

TEST_CASE("c_star_disc is the pseudohyperbolic metric") {
    CHECK(c_star_disc({0, 0}, {0.5, 0}) == doctest::Approx(0.5));
    CHECK(c_star_disc({0.5, 0}, {-0.5, 0}) == doctest::Approx(0.8));
}

TEST_CASE("InvariantQuery validation") {
    const Ray r(NodeSet(CTuple{{0, 0}, {0.5, 0}}), CTuple{{0, 0}, {1, 0}});
    CHECK_THROWS_AS(InvariantQuery(r, 0, 0), std::domain_error);
    CHECK_THROWS_AS(InvariantQuery(r, 0, 2), std::domain_error);
}

TEST_CASE("d with alpha equal to the nodes is the metric itself") {
    const NodeSet z(CTuple{{0, 0}, {0.5, 0}, {0, 0.5}});
    const Ray r(z, z.nodes());
    CHECK(d_disc(InvariantQuery(r, 0, 1)).value == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(d_disc(InvariantQuery(r, 0, 2)).value ==
          doctest::Approx(c_star_disc(z[0], z[2])).epsilon(1e-9));
    CHECK(d_disc(InvariantQuery(r, 1, 2)).value ==
          doctest::Approx(c_star_disc(z[1], z[2])).epsilon(1e-9));
}

TEST_CASE("d three-node closed-form values") {
    const NodeSet z(CTuple{{0, 0}, {0.5, 0}, {0, 0.5}});
    const Ray r(z, CTuple{{0, 0}, {0, 0}, {1, 0}});
    const double t = 0.5 * std::abs(Cplx{0.5, -0.5}) / std::abs(Cplx{1, -0.25});
    CHECK(d_disc(InvariantQuery(r, 0, 2)).value == doctest::Approx(t).epsilon(1e-8));
    CHECK(d_disc(InvariantQuery(r, 0, 1)).value == doctest::Approx(0.0));
}

TEST_CASE("d vanishes for constant alpha") {
    const Ray r(NodeSet(CTuple{{0, 0}, {0.5, 0}, {0, 0.5}}),
                CTuple{{0.4, 0.1}, {0.4, 0.1}, {0.4, 0.1}});
    CHECK(d_disc(InvariantQuery(r, 0, 1)).value == doctest::Approx(0.0));
    CHECK(d_disc(InvariantQuery(r, 1, 2)).value == doctest::Approx(0.0));
}

TEST_CASE("d is bounded by c_star") {
    sampling::Rng rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(trial % 4);
        const NodeSet z = sampling::nodes(rng, n);
        const Ray r(z, sampling::alpha(rng, n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                CHECK(d_disc(InvariantQuery(r, i, j)).value <=
                      c_star_disc(z[i], z[j]) + 1e-10);
    }
}

TEST_CASE("d is invariant under scaling of alpha") {
    sampling::Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const NodeSet z = sampling::nodes(rng, 4);
        const CTuple a = sampling::alpha(rng, 4);
        const Cplx c = 1.3 * std::polar(1.0, 0.41 * trial + 0.2);
        CTuple scaled;
        for (const auto& v : a) scaled.push_back(c * v);
        const double base = d_disc(InvariantQuery(Ray(z, a), 0, 2)).value;
        CHECK(d_disc(InvariantQuery(Ray(z, scaled), 0, 2)).value ==
              doctest::Approx(base).epsilon(1e-8));
    }
}

TEST_CASE("d witness interpolates the boundary tuple") {
    const NodeSet z(CTuple{{0, 0}, {0.5, 0}, {0, 0.5}});
    const Ray r(z, CTuple{{0, 0}, {0, 0}, {1, 0}});
    const auto v = d_disc(InvariantQuery(r, 0, 2), true);
    REQUIRE(v.witness.has_value());
    for (double res : v.witness->residuals) CHECK(res < 1e-8);
    CHECK(v.witness->degree_bound <= 2);
}

TEST_CASE("solvable_via_d fixed cases") {
    const auto constant = solvable_via_d(
        {NodeSet(CTuple{{0, 0}, {0.5, 0}, {0, 0.5}}), CTuple{{0.3, 0}, {0.3, 0}, {0.3, 0}}});
    CHECK(constant.solvable);
    CHECK_FALSE(constant.equality_pair.has_value());

    const auto identity =
        solvable_via_d({NodeSet(CTuple{{0, 0}, {0.5, 0}}), CTuple{{0, 0}, {0.5, 0}}});
    CHECK(identity.solvable);
    REQUIRE(identity.equality_pair.has_value());
    CHECK(identity.equality_pair->first == 0);
    CHECK(identity.equality_pair->second == 1);

    const auto no =
        solvable_via_d({NodeSet(CTuple{{0, 0}, {0.5, 0}}), CTuple{{0, 0}, {0.9, 0}}});
    CHECK_FALSE(no.solvable);
}

TEST_CASE("solvable_via_d agrees with the Pick-matrix diagnosis") {
    sampling::Rng rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(trial % 4);
        const NodeSet z = sampling::nodes(rng, n);
        const InterpolationProblem p(z, sampling::targets(rng, n, 0.9));
        const double mu = minkowski_functional(Ray(z, p.targets)).mu;
        if (std::fabs(mu - 1.0) <= 1e-8) continue;   // membership band: both answers legal
        CHECK(diagnose(p).solvable == solvable_via_d(p).solvable);
    }
}
