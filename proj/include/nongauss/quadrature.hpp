#pragma once

#include <vector>

namespace nongauss {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes and weights for an n-point Gauss-Legendre rule, by Newton iteration
/// on the Legendre recurrence.
GaussLegendreRule gauss_legendre(int n);

}  // namespace nongauss
