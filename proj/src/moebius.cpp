#include "pickbody/moebius.hpp"

#include <cmath>

namespace pickbody {

namespace {
constexpr double kBoundarySlack = 1e-9;

void require_in_open_disc(const Cplx& z, const char* what) {
    require_finite(z, what);
    if (std::abs(z) >= 1.0)
        throw std::domain_error(std::string(what) + ": modulus >= 1");
}
}  // namespace

MoebiusMap::MoebiusMap(Cplx u, double rot) : center(u), theta(rot) {
    require_in_open_disc(u, "MoebiusMap center");
    if (!std::isfinite(rot)) throw std::domain_error("MoebiusMap rotation: non-finite");
}

BlaschkeProduct::BlaschkeProduct(Cplx c, CTuple zs) : unimodular(c), zeros(std::move(zs)) {
    require_finite(c, "BlaschkeProduct constant");
    if (std::abs(std::abs(c) - 1.0) > 1e-9)
        throw std::domain_error("BlaschkeProduct constant: modulus != 1");
    unimodular = c / std::abs(c);
    for (const auto& z : zeros) require_in_open_disc(z, "BlaschkeProduct zero");
}

Cplx BlaschkeProduct::eval(const Cplx& v) const {
    Cplx out = unimodular;
    for (const auto& z : zeros)
        out *= (z - v) / (1.0 - std::conj(z) * v);
    return out;
}

double pseudo_distance(const Cplx& a, const Cplx& b) {
    require_in_open_disc(a, "pseudo_distance");
    require_in_open_disc(b, "pseudo_distance");
    // quotient of moduli rather than modulus of the quotient: exact symmetry
    return std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
}

Cplx moebius_eval(const MoebiusMap& map, const Cplx& v) {
    require_finite(v, "moebius_eval argument");
    if (std::abs(v) > 1.0 + kBoundarySlack)
        throw std::domain_error("moebius_eval: argument outside closed disc");
    const Cplx denom = 1.0 - std::conj(map.center) * v;
    if (std::abs(denom) < 1e-15)
        throw std::domain_error("moebius_eval: pole on the boundary");
    return std::polar(1.0, map.theta) * (map.center - v) / denom;
}

CTuple apply_automorphism_to_tuple(const MoebiusMap& map, const CTuple& w) {
    CTuple out;
    out.reserve(w.size());
    for (const auto& v : w) {
        require_in_open_disc(v, "apply_automorphism_to_tuple");
        out.push_back(moebius_eval(map, v));
    }
    return out;
}

ComposedInterpolant ComposedInterpolant::constant(Cplx value) {
    require_finite(value, "ComposedInterpolant constant");
    if (std::abs(value) > 1.0 + kBoundarySlack)
        throw std::domain_error("ComposedInterpolant constant: modulus > 1");
    ComposedInterpolant c;
    c.leaf_ = true;
    c.value_ = value;
    return c;
}

ComposedInterpolant ComposedInterpolant::node(Cplx target_u, Cplx node_z,
                                              ComposedInterpolant inner) {
    require_in_open_disc(target_u, "ComposedInterpolant target");
    require_in_open_disc(node_z, "ComposedInterpolant node");
    ComposedInterpolant c;
    c.leaf_ = false;
    c.u_ = target_u;
    c.z_ = node_z;
    c.inner_ = std::make_shared<const ComposedInterpolant>(std::move(inner));
    return c;
}

Cplx ComposedInterpolant::eval(const Cplx& lambda) const {
    if (leaf_) return value_;
    const Cplx g = inner_->eval(lambda);
    const Cplx arg = moebius_eval(MoebiusMap(z_), lambda) * g;
    return moebius_eval(MoebiusMap(u_), arg);
}

int ComposedInterpolant::depth() const {
    return leaf_ ? 0 : 1 + inner_->depth();
}

const Cplx& ComposedInterpolant::leaf_value() const {
    const ComposedInterpolant* p = this;
    while (!p->leaf_) p = p->inner_.get();
    return p->value_;
}

bool ComposedInterpolant::leaf_unimodular(double tol) const {
    return std::abs(std::abs(leaf_value()) - 1.0) <= tol;
}

namespace {
template <typename F>
double sup_on_grid(const F& f, int grid_size) {
    if (grid_size < 8) throw std::domain_error("boundary_sup_probe: grid_size < 8");
    double sup = 0.0;
    for (int k = 0; k < grid_size; ++k) {
        const double th = 2.0 * M_PI * k / grid_size;
        sup = std::max(sup, std::abs(f(std::polar(1.0, th))));
    }
    return sup;
}
}  // namespace

double boundary_sup_probe(const BlaschkeProduct& f, int grid_size) {
    return sup_on_grid([&](const Cplx& v) { return f.eval(v); }, grid_size);
}

double boundary_sup_probe(const ComposedInterpolant& f, int grid_size) {
    return sup_on_grid([&](const Cplx& v) { return f.eval(v); }, grid_size);
}

}  // namespace pickbody
