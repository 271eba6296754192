#include "hlab/quad.hpp"

#include "hlab/error.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace hlab {

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    size_t h = xs.size() / 2;
    return pairwise_sum(xs.first(h)) + pairwise_sum(xs.subspan(h));
}

namespace {

GaussRule compute_rule(int n) {
    // Newton iteration from the Chebyshev initial guess; standard
    // Golub-Welsch is overkill for fixed small orders.
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre P_n(x) and derivative by recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = -p1 / pp;
            x += dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

} // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 2 || n > 64) throw DomainError("gauss_legendre: order must be in [2, 64]");
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

namespace {

double panel(const std::function<double(double)>& f, double a, double b, const GaussRule& g) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::vector<double> terms(g.nodes.size());
    for (size_t i = 0; i < g.nodes.size(); ++i)
        terms[i] = g.weights[i] * f(mid + half * g.nodes[i]);
    return half * pairwise_sum(terms);
}

struct Adaptive {
    const std::function<double(double)>& f;
    const GaussRule& g;
    const QuadSpec& spec;
    double global_scale;
    int panels = 0;
    bool depth_exhausted = false;

    // Returns {value, err}. `whole` is the single-panel estimate for [a,b].
    std::pair<double, double> refine(double a, double b, double whole, int depth) {
        double m = 0.5 * (a + b);
        double left = panel(f, a, m, g);
        double right = panel(f, m, b, g);
        panels += 2;
        double err = std::abs(left + right - whole);
        double tol = std::max(spec.abs_tol, spec.rel_tol * std::max(global_scale, std::abs(left + right)));
        if (err <= tol) return {left + right, err};
        if (depth >= spec.max_depth) {
            depth_exhausted = true;
            return {left + right, err};
        }
        auto [lv, le] = refine(a, m, left, depth + 1);
        auto [rv, re] = refine(m, b, right, depth + 1);
        return {lv + rv, le + re};
    }
};

} // namespace

QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                        const QuadSpec& spec) {
    if (!(a <= b)) throw DomainError("integrate_1d: interval endpoints out of order");
    if (a == b) return {0.0, 0.0, 0};
    const GaussRule& g = gauss_legendre(spec.nodes_per_panel);
    Adaptive ad{f, g, spec, 0.0, 0};
    double whole = panel(f, a, b, g);
    ad.panels = 1;
    ad.global_scale = std::abs(whole);
    auto [v, e] = ad.refine(a, b, whole, 0);
    if (ad.depth_exhausted)
        throw ConvergenceError("integrate_1d: max_depth reached before tolerance", v, e);
    return {v, e, ad.panels};
}

} // namespace hlab
