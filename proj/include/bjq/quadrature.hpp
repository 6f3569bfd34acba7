#pragma once

#include "bjq/errors.hpp"

#include <cmath>
#include <vector>

namespace bjq {

// Node on [0, 1]; tau and one_minus_tau are stored separately so mirrored nodes swap them exactly.
struct GaussNode {
    double tau;
    double one_minus_tau;
    double weight;
};

// Gauss–Legendre rule on [0, 1], exact for polynomials of degree < 2·order.
inline std::vector<GaussNode> gauss_legendre(int order) {
    if (order < 2) throw ValidationError("quadrature order must be at least 2");
    const double pi = std::acos(-1.0);
    std::vector<GaussNode> nodes(static_cast<std::size_t>(order));
    const int half = (order + 1) / 2;
    for (int k = 0; k < half; ++k) {
        // Newton iteration for the k-th positive root of P_order on [-1, 1].
        double x = std::cos(pi * (k + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= order; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-16) break;
        }
        if (2 * k + 1 == order) x = 0.0;
        {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= order; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 1.0 / ((1.0 - x * x) * dp * dp);  // half of the [-1,1] weight
        const double lo = (1.0 - x) / 2.0;
        const double hi = (1.0 + x) / 2.0;
        nodes[static_cast<std::size_t>(k)] = {lo, hi, w};
        nodes[static_cast<std::size_t>(order - 1 - k)] = {hi, lo, w};
    }
    return nodes;
}

}  // namespace bjq
