#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace mitograph {

namespace detail {

// splitmix64 finalizer (Steele, Lea, Flood 2014). Used to turn (seed, stream
// index) pairs into well-separated engine seeds.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace detail

// Deterministic random stream. All sampling goes through explicit inverse
// transforms so that a (seed, stream) pair reproduces the same draw sequence
// regardless of standard-library distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(detail::splitmix64(seed)) {}

    // Stream `index` of a family keyed by `seed`. Streams are independent in
    // practice: engine seeds pass through two rounds of splitmix64 mixing.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(detail::splitmix64(seed ^ detail::splitmix64(index + 1)));
    }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // Exponential with the given rate (mean 1/rate).
    double exponential(double rate) {
        double u;
        do { u = uniform(); } while (u <= 0.0);
        return -std::log1p(-u) / rate;
    }

    // Standard normal via Box-Muller; the second value of each pair is cached.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1;
        do { u1 = uniform(); } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    // Gamma(shape, 1) for shape >= 1, Marsaglia-Tsang squeeze method.
    double gamma(double shape) {
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, vcube;
            do {
                x = normal();
                vcube = 1.0 + c * x;
            } while (vcube <= 0.0);
            vcube = vcube * vcube * vcube;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * vcube;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - vcube + std::log(vcube)))
                return d * vcube;
        }
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace mitograph
