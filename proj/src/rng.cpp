#include "nerfuse/rng.hpp"

#include <cmath>

namespace nerfuse {

std::uint64_t rng::below(std::uint64_t n) {
    if (n <= 1) return 0;
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
        std::uint64_t threshold = (0 - n) % n;
        while (lo < threshold) {
            m = static_cast<unsigned __int128>(next_u64()) * n;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

double rng::uniform01_positive() {
    double u;
    do {
        u = uniform01();
    } while (u <= 0.0);
    return u;
}

double rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    // Box-Muller.
    double u1 = uniform01_positive();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_normal_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

// Marsaglia-Tsang squeeze; shape < 1 boosted via Gamma(shape+1) * U^(1/shape).
double rng::gamma(double shape) {
    if (shape < 1.0) {
        double u = uniform01_positive();
        return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = uniform01_positive();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double rng::beta(double a, double b) {
    double x = gamma(a);
    double y = gamma(b);
    double s = x + y;
    return s > 0.0 ? x / s : 0.5;
}

}  // namespace nerfuse
