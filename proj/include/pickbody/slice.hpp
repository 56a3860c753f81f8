#pragma once

#include <string>
#include <vector>

#include "pickbody/minkowski.hpp"

namespace pickbody {

/// 2-D affine slice of the Pick body: w(x, y) = base + x dir1 + y dir2.
struct SliceSpec {
    CTuple base;
    CTuple dir1;
    CTuple dir2;
    double xmin = -0.95, xmax = 0.95;
    double ymin = -0.95, ymax = 0.95;
    int grid = 64;
};

struct SliceRow {
    double x = 0.0;
    double y = 0.0;
    double mu = 0.0;
};

/// Gauge of an arbitrary tuple (0 for the zero tuple).
double gauge(const NodeSet& nodes, const CTuple& w);

std::vector<SliceRow> run_slice(const NodeSet& nodes, const SliceSpec& spec);

std::string slice_csv(const std::vector<SliceRow>& rows);

}  // namespace pickbody
