#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hlab {

/// Numerically stable sum: splits recursively and adds halves.
double pairwise_sum(std::span<const double> xs);

/// Gauss-Legendre nodes/weights on [-1, 1]. Computed once per order and
/// cached; orders up to 64 are supported.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

/// Tolerances and budget for adaptive quadrature.
struct QuadSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int nodes_per_panel = 16;
    int max_depth = 30;
};

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
    int panels = 0;
};

/// Adaptive Gauss-Legendre integration of f over [a, b].
/// Throws ConvergenceError (carrying the partial value) if max_depth is
/// reached before the tolerance.
QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                        const QuadSpec& spec = {});

} // namespace hlab
