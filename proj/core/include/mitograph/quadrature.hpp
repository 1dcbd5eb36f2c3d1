#pragma once

#include <cstddef>
#include <vector>

namespace mitograph {

// Gauss-Legendre rule on [-1, 1]. Nodes/weights are computed once per order
// by Newton iteration on the Legendre polynomial and cached.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    static const GaussLegendre& rule(std::size_t n);
};

// Integrate f over [a, b] with an n-point rule.
template <class F>
double gauss_legendre(F&& f, double a, double b, std::size_t n = 32) {
    const auto& r = GaussLegendre::rule(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * f(mid + half * r.nodes[i]);
    return half * acc;
}

// Composite rule: `panels` equal subintervals, n points each.
template <class F>
double gauss_legendre_composite(F&& f, double a, double b, std::size_t panels,
                                std::size_t n = 16) {
    double acc = 0.0;
    const double h = (b - a) / static_cast<double>(panels);
    for (std::size_t k = 0; k < panels; ++k)
        acc += gauss_legendre(f, a + h * static_cast<double>(k),
                              a + h * static_cast<double>(k + 1), n);
    return acc;
}

}  // namespace mitograph
