#include "mitograph/split_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "mitograph/errors.hpp"
#include "mitograph/quadrature.hpp"

namespace mitograph {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kNormTol = 1e-10;

double beta_raw_moment(double shape, int j) {
    // E X^j for X ~ Beta(shape, shape).
    double m = 1.0;
    for (int i = 0; i < j; ++i) m *= (shape + i) / (2.0 * shape + i);
    return m;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

SplitKernel SplitKernel::atomic_half() { return SplitKernel(Kind::AtomicHalf, 0.5); }

SplitKernel SplitKernel::uniform(double a) {
    if (a < 0.0 || a >= 0.5)
        throw std::invalid_argument("uniform kernel requires 0 <= a < 1/2");
    return SplitKernel(Kind::Uniform, a);
}

SplitKernel SplitKernel::beta_symmetric(double shape, double a) {
    if (shape < 1.0)
        throw std::invalid_argument("beta kernel requires shape >= 1");
    if (a < 0.0 || a >= 0.5)
        throw std::invalid_argument("beta kernel requires 0 <= a < 1/2");
    SplitKernel k(Kind::BetaSymmetric, a);
    k.shape_ = shape;
    return k;
}

SplitKernel SplitKernel::tabulated(std::vector<double> density_on_unit_grid) {
    const std::size_t n = density_on_unit_grid.size();
    if (n < 3) throw std::invalid_argument("tabulated kernel needs >= 3 grid values");
    for (double q : density_on_unit_grid)
        if (!(q >= 0.0)) throw std::invalid_argument("tabulated density must be >= 0");
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(density_on_unit_grid[i] - density_on_unit_grid[n - 1 - i]) > kSymmetryTol)
            throw std::invalid_argument("tabulated density is not symmetric about 1/2");

    // Piecewise-linear normalization (trapezoid is exact here).
    const double h = 1.0 / static_cast<double>(n - 1);
    double mass = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        mass += 0.5 * h * (density_on_unit_grid[i] + density_on_unit_grid[i + 1]);
    if (std::abs(mass - 1.0) > kNormTol)
        throw std::invalid_argument("tabulated density does not integrate to 1");

    // Support gap from the zero margins.
    std::size_t first = 0;
    while (first + 1 < n && density_on_unit_grid[first] == 0.0 &&
           density_on_unit_grid[first + 1] == 0.0)
        ++first;
    const double a = static_cast<double>(first) * h;

    SplitKernel k(Kind::Tabulated, a);
    k.table_ = std::move(density_on_unit_grid);
    // Per-cell cumulative masses for inverse-CDF sampling.
    k.cell_mass_cdf_.resize(n, 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        acc += 0.5 * h * (k.table_[i] + k.table_[i + 1]);
        k.cell_mass_cdf_[i + 1] = acc;
    }
    k.cell_mass_cdf_.back() = acc;  // guard against rounding drift
    return k;
}

double SplitKernel::density(double theta) const {
    switch (kind_) {
        case Kind::AtomicHalf:
            throw std::logic_error("atomic kernel has no density");
        case Kind::Uniform:
            return (theta >= a_ && theta <= 1.0 - a_) ? 1.0 / (1.0 - 2.0 * a_) : 0.0;
        case Kind::BetaSymmetric: {
            if (theta <= a_ || theta >= 1.0 - a_) return 0.0;
            const double x = (theta - a_) / (1.0 - 2.0 * a_);
            // Beta(s,s) density via lgamma, rescaled to the support.
            const double logb = std::lgamma(2.0 * shape_) - 2.0 * std::lgamma(shape_);
            return std::exp(logb + (shape_ - 1.0) * (std::log(x) + std::log1p(-x))) /
                   (1.0 - 2.0 * a_);
        }
        case Kind::Tabulated: {
            if (theta < 0.0 || theta > 1.0) return 0.0;
            const std::size_t n = table_.size();
            const double h = 1.0 / static_cast<double>(n - 1);
            const double pos = theta / h;
            std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(pos), n - 2);
            const double s = pos - static_cast<double>(i);
            return table_[i] * (1.0 - s) + table_[i + 1] * s;
        }
    }
    return 0.0;
}

double SplitKernel::expect(const std::function<double(double)>& f) const {
    switch (kind_) {
        case Kind::AtomicHalf:
            return f(0.5);
        case Kind::Uniform:
            return gauss_legendre_composite(
                [&](double t) { return f(t) / (1.0 - 2.0 * a_); }, a_, 1.0 - a_, 8, 16);
        case Kind::BetaSymmetric:
            return gauss_legendre_composite(
                [&](double t) { return f(t) * density(t); }, a_, 1.0 - a_, 32, 16);
        case Kind::Tabulated: {
            // Per-cell quadrature; the integrand is f times a linear density.
            const std::size_t n = table_.size();
            const double h = 1.0 / static_cast<double>(n - 1);
            double acc = 0.0;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                if (table_[i] == 0.0 && table_[i + 1] == 0.0) continue;
                acc += gauss_legendre(
                    [&](double t) { return f(t) * density(t); },
                    static_cast<double>(i) * h, static_cast<double>(i + 1) * h, 8);
            }
            return acc;
        }
    }
    return 0.0;
}

double SplitKernel::moment(int k) const {
    if (k < 0) throw std::invalid_argument("moment order must be >= 0");
    if (k == 0) return 1.0;
    switch (kind_) {
        case Kind::AtomicHalf:
            return std::pow(0.5, k);
        case Kind::Uniform: {
            const double lo = a_, hi = 1.0 - a_;
            return (std::pow(hi, k + 1) - std::pow(lo, k + 1)) /
                   (static_cast<double>(k + 1) * (hi - lo));
        }
        case Kind::BetaSymmetric: {
            // theta = a + (1-2a) X with X ~ Beta(s, s); expand the binomial.
            const double w = 1.0 - 2.0 * a_;
            double acc = 0.0;
            for (int j = 0; j <= k; ++j)
                acc += binomial(k, j) * std::pow(a_, k - j) * std::pow(w, j) *
                       beta_raw_moment(shape_, j);
            return acc;
        }
        case Kind::Tabulated:
            return expect([k](double t) { return std::pow(t, k); });
    }
    return 0.0;
}

double SplitKernel::log_inv_mean() const {
    if (kind_ == Kind::AtomicHalf) return std::log(2.0);
    if (kind_ == Kind::Uniform) {
        // Closed form of -int log(t) dt over the support.
        const double lo = a_, hi = 1.0 - a_;
        auto antider = [](double t) { return t - t * std::log(t); };
        return (antider(hi) - antider(lo)) / (hi - lo);
    }
    return expect([](double t) { return -std::log(t); });
}

double SplitKernel::theta_one_minus() const { return moment(1) - moment(2); }

double SplitKernel::sample(Rng& rng) const {
    switch (kind_) {
        case Kind::AtomicHalf:
            return 0.5;
        case Kind::Uniform:
            return rng.uniform(a_, 1.0 - a_);
        case Kind::BetaSymmetric: {
            const double g1 = rng.gamma(shape_);
            const double g2 = rng.gamma(shape_);
            return a_ + (1.0 - 2.0 * a_) * g1 / (g1 + g2);
        }
        case Kind::Tabulated: {
            const std::size_t n = table_.size();
            const double h = 1.0 / static_cast<double>(n - 1);
            const double total = cell_mass_cdf_.back();
            const double u = rng.uniform() * total;
            auto it = std::upper_bound(cell_mass_cdf_.begin(), cell_mass_cdf_.end(), u);
            std::size_t i = static_cast<std::size_t>(
                std::min<std::ptrdiff_t>(std::max<std::ptrdiff_t>(it - cell_mass_cdf_.begin() - 1, 0),
                                         static_cast<std::ptrdiff_t>(n - 2)));
            const double rem = u - cell_mass_cdf_[i];
            const double q0 = table_[i], q1 = table_[i + 1];
            // Solve q0*s + (q1-q0)*s^2/2 = rem/h for s in [0, 1].
            const double target = rem / h;
            double s;
            const double slope = q1 - q0;
            if (std::abs(slope) < 1e-14 * (q0 + q1 + 1e-300)) {
                s = q0 > 0.0 ? target / q0 : 0.0;
            } else {
                const double disc = q0 * q0 + 2.0 * slope * target;
                s = (std::sqrt(std::max(disc, 0.0)) - q0) / slope;
            }
            s = std::clamp(s, 0.0, 1.0);
            return (static_cast<double>(i) + s) * h;
        }
    }
    return 0.5;
}

std::string SplitKernel::describe() const {
    char buf[96];
    switch (kind_) {
        case Kind::AtomicHalf:
            return "atomic-half";
        case Kind::Uniform:
            std::snprintf(buf, sizeof(buf), "uniform[%g,%g]", a_, 1.0 - a_);
            return buf;
        case Kind::BetaSymmetric:
            std::snprintf(buf, sizeof(buf), "beta(shape=%g)[%g,%g]", shape_, a_, 1.0 - a_);
            return buf;
        case Kind::Tabulated:
            std::snprintf(buf, sizeof(buf), "tabulated(%zu nodes, a=%g)", table_.size(), a_);
            return buf;
    }
    return "?";
}

KernelMoments compute_kernel_moments(const SplitKernel& q, int max_order) {
    KernelMoments m;
    m.raw.reserve(static_cast<std::size_t>(max_order));
    for (int k = 1; k <= max_order; ++k) m.raw.push_back(q.moment(k));
    m.log_inv_mean = q.log_inv_mean();
    m.theta_one_minus = q.theta_one_minus();
    return m;
}

}  // namespace mitograph
