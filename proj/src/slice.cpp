#include "pickbody/slice.hpp"

#include <cmath>
#include <sstream>

namespace pickbody {

double gauge(const NodeSet& nodes, const CTuple& w) {
    if (static_cast<int>(w.size()) != nodes.size())
        throw std::domain_error("gauge: tuple length mismatch");
    double maxabs = 0.0;
    for (const auto& v : w) maxabs = std::max(maxabs, std::abs(v));
    if (maxabs == 0.0) return 0.0;
    return minkowski_functional(Ray(nodes, w)).mu;
}

std::vector<SliceRow> run_slice(const NodeSet& nodes, const SliceSpec& spec) {
    const auto n = static_cast<std::size_t>(nodes.size());
    if (spec.base.size() != n || spec.dir1.size() != n || spec.dir2.size() != n)
        throw std::invalid_argument("slice: base/direction length must match node count");
    auto norm_of = [](const CTuple& v) {
        double s = 0.0;
        for (const auto& z : v) s += std::norm(z);
        return std::sqrt(s);
    };
    if (norm_of(spec.dir1) == 0.0 || norm_of(spec.dir2) == 0.0)
        throw std::invalid_argument("slice: degenerate (zero) direction");
    if (spec.grid < 2) throw std::invalid_argument("slice: grid must be >= 2");

    std::vector<SliceRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.grid) * spec.grid);
    for (int gy = 0; gy < spec.grid; ++gy) {
        const double y = spec.ymin + (spec.ymax - spec.ymin) * gy / (spec.grid - 1);
        for (int gx = 0; gx < spec.grid; ++gx) {
            const double x = spec.xmin + (spec.xmax - spec.xmin) * gx / (spec.grid - 1);
            CTuple w(n);
            for (std::size_t k = 0; k < n; ++k)
                w[k] = spec.base[k] + x * spec.dir1[k] + y * spec.dir2[k];
            rows.push_back({x, y, gauge(nodes, w)});
        }
    }
    return rows;
}

std::string slice_csv(const std::vector<SliceRow>& rows) {
    std::ostringstream os;
    os.precision(12);
    os << "x,y,mu\n";
    for (const auto& r : rows) os << r.x << "," << r.y << "," << r.mu << "\n";
    return os.str();
}

}  // namespace pickbody
