#include "pickbody/complex.hpp"

#include <cmath>

namespace pickbody {

Cplx determinant(SquareMatrix m) {
    const int n = m.n;
    Cplx det(1.0, 0.0);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(m.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(m.at(r, col));
            if (v > best) { best = v; pivot = r; }
        }
        if (best == 0.0) return Cplx(0.0, 0.0);
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        det *= m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            const Cplx factor = m.at(r, col) / m.at(col, col);
            for (int c = col; c < n; ++c) m.at(r, c) -= factor * m.at(col, c);
        }
    }
    return det;
}

}  // namespace pickbody
