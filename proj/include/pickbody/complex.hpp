#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pickbody {

using Cplx = std::complex<double>;
using CTuple = std::vector<Cplx>;

inline constexpr double kEqTol = 1e-12;

inline bool is_finite(const Cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(const Cplx& z, const char* what) {
    if (!is_finite(z))
        throw std::domain_error(std::string(what) + ": non-finite complex value");
}

inline bool approx_equal(const Cplx& a, const Cplx& b, double tol = kEqTol) {
    return std::abs(a - b) <= tol;
}

inline bool tuple_constant(const CTuple& v, double tol = kEqTol) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i] - v[0]) > tol) return false;
    return true;
}

/// Dense square complex matrix, row-major.  Sized for n <= 15.
struct SquareMatrix {
    int n = 0;
    std::vector<Cplx> data;

    explicit SquareMatrix(int dim) : n(dim), data(static_cast<std::size_t>(dim) * dim) {}

    Cplx& at(int i, int j) { return data[static_cast<std::size_t>(i) * n + j]; }
    const Cplx& at(int i, int j) const { return data[static_cast<std::size_t>(i) * n + j]; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : data) m = std::max(m, std::abs(z));
        return m;
    }
};

/// Determinant by Gaussian elimination with partial pivoting.
Cplx determinant(SquareMatrix m);

}  // namespace pickbody
