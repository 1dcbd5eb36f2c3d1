#pragma once

#include "mitograph/errors.hpp"

namespace mitograph {

// Model rates. beta: splitting rate, mu: death rate, v: mass growth speed,
// kappa: diffusion coefficient (spatial module only), dim: space dimension.
struct ModelParams {
    double beta = 1.0;
    double mu = 0.0;
    double v = 1.0;
    double kappa = 0.0;
    int dim = 1;
};

struct DerivedParams {
    double delta;  // beta - mu, exponential growth rate of the mean count
    double gamma;  // mu / beta, extinction parameter in [0, 1)
};

// Rejects anything outside the strictly supercritical regime beta > mu >= 0.
inline DerivedParams validate_params(const ModelParams& p) {
    if (p.beta <= 0.0) throw NonpositiveRate("splitting rate beta must be > 0");
    if (p.v <= 0.0) throw NonpositiveRate("mass growth speed v must be > 0");
    if (p.mu < 0.0) throw NonpositiveRate("death rate mu must be >= 0");
    if (p.beta <= p.mu)
        throw SubcriticalOrCritical("model requires beta > mu (supercritical regime)");
    if (p.kappa < 0.0) throw NegativeDiffusion("diffusion coefficient kappa must be >= 0");
    if (p.dim < 1) throw NonpositiveRate("spatial dimension must be >= 1");
    return DerivedParams{p.beta - p.mu, p.mu / p.beta};
}

}  // namespace mitograph
