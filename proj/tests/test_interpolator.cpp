#include <doctest.h>

#include <algorithm>

#include "pickbody/interpolator.hpp"
#include "pickbody/sampling.hpp"

using namespace pickbody;

namespace {
InterpolationProblem problem(CTuple z, CTuple w) {
    return {NodeSet(std::move(z)), std::move(w)};
}
}  // namespace

TEST_CASE("reduce fixed examples") {
    const auto interior = reduce(problem({{0, 0}, {0.5, 0}}, {{0, 0}, {0.2, 0}}));
    CHECK(interior.size() == 1);
    CHECK(std::abs(interior.targets[0] - Cplx{0.4, 0}) < 1e-14);

    const auto boundary = reduce(problem({{0, 0}, {0.5, 0}}, {{0, 0}, {0.5, 0}}));
    CHECK(std::abs(boundary.targets[0] - Cplx{1, 0}) < 1e-12);
}

TEST_CASE("reduce validation") {
    CHECK_THROWS_AS(reduce(problem({{0.3, 0}}, {{0.2, 0}})), std::domain_error);
    CHECK_THROWS_AS(reduce(problem({{0, 0}, {0.5, 0}}, {{0.2, 0}, {1, 0}})),
                    std::domain_error);
}

TEST_CASE("reduce preserves membership status") {
    sampling::Rng rng(47);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(trial % 3);
        const NodeSet z = sampling::nodes(rng, n);
        const CTuple bd = sampling::boundary_tuple(rng, z);
        std::uniform_real_distribution<double> unit(0.1, 0.95);
        const double s = unit(rng);
        CTuple w;
        for (const auto& v : bd) w.push_back(s * v);
        const InterpolationProblem p = problem(z.nodes(), w);
        if (std::abs(p.targets.back()) >= 1.0 - 1e-9) continue;
        const auto before = membership(p.nodes, p.targets);
        const auto reduced = reduce(p);
        CHECK(membership(reduced.nodes, reduced.targets) == before);
        ++checked;
    }
    CHECK(checked >= 50);
}

TEST_CASE("central_solve two-node interior example") {
    const auto rep = central_solve(problem({{0, 0}, {0.5, 0}}, {{0, 0}, {0.2, 0}}));
    CHECK(rep.degree_bound == 1);
    CHECK_FALSE(rep.interpolant.is_leaf());
    CHECK(std::abs(rep.interpolant.target() - Cplx{0.2, 0}) < 1e-14);
    CHECK(std::abs(rep.interpolant.node_point() - Cplx{0.5, 0}) < 1e-14);
    CHECK(std::abs(rep.interpolant.leaf_value() - Cplx{0.4, 0}) < 1e-14);
    CHECK(std::abs(rep.interpolant.eval({0, 0})) < 1e-12);
    CHECK(std::abs(rep.interpolant.eval({0.5, 0}) - Cplx{0.2, 0}) < 1e-12);
    CHECK(rep.classification == SolutionKind::interior_central);
    CHECK(*std::max_element(rep.residuals.begin(), rep.residuals.end()) < 1e-12);
}

TEST_CASE("central_solve constant and boundary targets") {
    const auto c = central_solve(problem({{0, 0}, {0.5, 0}}, {{0.3, 0}, {0.3, 0}}));
    CHECK(c.classification == SolutionKind::constant);
    CHECK(c.degree_bound == 0);
    CHECK(std::abs(c.interpolant.leaf_value() - Cplx{0.3, 0}) < 1e-14);

    const auto b = central_solve(problem({{0, 0}, {0.5, 0}}, {{0, 0}, {0.5, 0}}));
    CHECK(b.classification == SolutionKind::boundary_unique);
    CHECK(b.degree_bound == 1);
    CHECK(b.interpolant.leaf_unimodular(1e-12));
}

TEST_CASE("central_solve rejects unsolvable data") {
    CHECK_THROWS_AS(central_solve(problem({{0, 0}, {0.5, 0}}, {{0, 0}, {0.9, 0}})),
                    std::domain_error);
}

TEST_CASE("boundary_solve three-node extremal product") {
    // w = t*(0,0,1) on the boundary; solution is phi_0 * phi_{0.5} up to rotation,
    // i.e. g(l) = l * (0.5 - l) / (1 - 0.5 l) times a unimodular constant.
    const NodeSet z(CTuple{{0, 0}, {0.5, 0}, {0, 0.5}});
    const double t = 0.5 * std::abs(Cplx{0.5, -0.5}) / std::abs(Cplx{1, -0.25});
    const CTuple w{{0, 0}, {0, 0}, {t, 0}};
    const auto rep = boundary_solve(z, w);
    CHECK(rep.degree_bound == 2);
    CHECK(*std::max_element(rep.residuals.begin(), rep.residuals.end()) < 1e-8);

    auto g = [](const Cplx& l) { return l * (0.5 - l) / (1.0 - 0.5 * l); };
    const Cplx probe{0.3, 0.2};
    const Cplx rot = rep.interpolant.eval(probe) / g(probe);
    CHECK(std::abs(std::abs(rot) - 1.0) < 1e-7);
    for (int k = 0; k < 20; ++k) {
        const Cplx l = std::polar(0.7, 0.31 * k);
        CHECK(std::abs(rep.interpolant.eval(l) - rot * g(l)) < 1e-7);
    }
}

TEST_CASE("boundary_solve rejects interior data") {
    CHECK_THROWS_AS(boundary_solve(NodeSet(CTuple{{0, 0}, {0.5, 0}}), {{0, 0}, {0.2, 0}}),
                    std::domain_error);
}

TEST_CASE("boundary solution is independent of node order") {
    sampling::Rng rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        const NodeSet z = sampling::nodes(rng, 4, 0.8, 0.3);
        const CTuple w = sampling::boundary_tuple(rng, z);

        CTuple zp{z[2], z[0], z[3], z[1]};
        CTuple wp{w[2], w[0], w[3], w[1]};
        const auto a = boundary_solve(z, w);
        const auto b = boundary_solve(NodeSet(zp), wp);
        for (int k = 0; k < 100; ++k) {
            const Cplx l = std::polar(0.85 * (k % 10) / 10.0, 0.17 * k);
            CHECK(std::abs(a.interpolant.eval(l) - b.interpolant.eval(l)) < 1e-7);
        }
    }
}

TEST_CASE("minimal_degree fixed cases") {
    CHECK(minimal_degree(NodeSet(CTuple{{0, 0}, {0.5, 0}}), {{0, 0}, {0.5, 0}}) == 1);
    CHECK(minimal_degree(NodeSet(CTuple{{0, 0}, {0.5, 0}}), {{0.6, 0.8}, {0.6, 0.8}}) == 0);

    const double t = 0.5 * std::abs(Cplx{0.5, -0.5}) / std::abs(Cplx{1, -0.25});
    CHECK(minimal_degree(NodeSet(CTuple{{0, 0}, {0.5, 0}, {0, 0.5}}),
                         {{0, 0}, {0, 0}, {t, 0}}) == 2);
}

TEST_CASE("minimal_degree rejects interior data") {
    CHECK_THROWS_AS(minimal_degree(NodeSet(CTuple{{0, 0}, {0.5, 0}}), {{0, 0}, {0.2, 0}}),
                    std::domain_error);
}
