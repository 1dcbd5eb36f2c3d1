#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mitograph/rng.hpp"

namespace mitograph {

// Symmetric mass-splitting law on [0, 1]: the fraction of a parent's mass
// inherited by one daughter. Symmetry q(x) = q(1-x) reflects exchangeable
// daughters; the support is contained in [a, 1-a].
class SplitKernel {
public:
    enum class Kind { AtomicHalf, Uniform, BetaSymmetric, Tabulated };

    // Deterministic halving (theta == 1/2).
    static SplitKernel atomic_half();
    // Uniform density on [a, 1-a], 0 <= a < 1/2.
    static SplitKernel uniform(double a);
    // Beta(shape, shape) rescaled to [a, 1-a]; shape >= 1.
    static SplitKernel beta_symmetric(double shape, double a = 0.0);
    // Density sampled on a uniform grid over [0, 1] (linear interpolation
    // between nodes). Must be symmetric, normalized, and supported on
    // [a, 1-a] with a inferred from the leading/trailing zeros.
    static SplitKernel tabulated(std::vector<double> density_on_unit_grid);

    Kind kind() const { return kind_; }
    // Support half-gap: support is [a, 1-a].
    double support_gap() const { return a_; }
    bool is_atomic() const { return kind_ == Kind::AtomicHalf; }

    // Density at theta. Not defined for the atomic kind.
    double density(double theta) const;

    // E[f(theta)]; exact for the atomic kind, quadrature otherwise.
    double expect(const std::function<double(double)>& f) const;

    // Raw moment E[theta^k], relative error <= 1e-10.
    double moment(int k) const;

    // E[ln(1/theta)].
    double log_inv_mean() const;

    // E[theta (1 - theta)].
    double theta_one_minus() const;

    double sample(Rng& rng) const;

    std::string describe() const;

private:
    SplitKernel(Kind kind, double a) : kind_(kind), a_(a) {}

    Kind kind_;
    double a_;
    double shape_ = 1.0;                 // BetaSymmetric only
    std::vector<double> table_;          // Tabulated density values
    std::vector<double> cell_mass_cdf_;  // Tabulated sampling tables
};

// Raw moments E[theta^k] for k = 1..max_order plus the two derived
// expectations used by the analytic formulas.
struct KernelMoments {
    std::vector<double> raw;  // raw[k-1] = E theta^k
    double log_inv_mean;
    double theta_one_minus;
};

KernelMoments compute_kernel_moments(const SplitKernel& q, int max_order);

}  // namespace mitograph
