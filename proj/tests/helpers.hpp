// Shared region builders for the test binaries.
#pragma once

#include <limits>
#include <vector>

#include "symcap/products.hpp"
#include "symcap/region.hpp"

namespace testutil {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline symcap::Region ball(int dim, double p, double radius) {
    symcap::Flags f;
    f.balanced = true;
    f.symmetric = true;
    f.convex = true;
    return symcap::Region(dim, symcap::LpBall{p, radius}, f);
}

inline symcap::Region box(std::vector<double> half_widths) {
    symcap::Flags f;
    f.balanced = true;
    f.convex = true;
    bool equal = true;
    for (double a : half_widths) equal = equal && a == half_widths.front();
    f.symmetric = equal;
    const int dim = static_cast<int>(half_widths.size());
    return symcap::Region(dim, symcap::Box{std::move(half_widths)}, f);
}

inline symcap::Region omega0(double scale = 1.0) { return symcap::bidisk_region(scale); }

inline symcap::Region gauge_table(std::vector<double> fractions, std::vector<double> values,
                                  symcap::Flags f) {
    return symcap::Region(2, symcap::GaugeTable{std::move(fractions), std::move(values)}, f);
}

}  // namespace testutil
