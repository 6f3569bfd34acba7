#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace bjq {

// Lagrange weights for evaluating at fractional index x from `order` consecutive integer nodes,
// with the stencil clipped to [lo, hi]. Returns the first node; weights are written to `w`.
inline int lagrange_stencil(double x, int lo, int hi, int order, std::vector<double>& w) {
    const int n = std::min(order, hi - lo + 1);
    int start = static_cast<int>(std::floor(x)) - (n / 2 - 1);
    start = std::max(lo, std::min(start, hi - n + 1));
    w.assign(static_cast<std::size_t>(n), 1.0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (k != j) w[static_cast<std::size_t>(j)] *= (x - (start + k)) / static_cast<double>(j - k);
    return start;
}

}  // namespace bjq
