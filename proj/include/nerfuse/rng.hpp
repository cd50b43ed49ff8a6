// Seeded random source with self-contained distribution transforms.
// std::mt19937_64 output is pinned by the standard; the std:: distributions
// are not, so sampling here stays bit-reproducible across toolchains.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace nerfuse {

class rng {
public:
    explicit rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased integer in [0, n). Lemire's multiply-and-shift rejection.
    std::uint64_t below(std::uint64_t n);

    // [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double normal();
    double gamma(double shape);
    double beta(double a, double b);

    // In-place Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    double uniform01_positive();

    std::mt19937_64 engine_;
    double spare_normal_ = 0;
    bool has_spare_ = false;
};

}  // namespace nerfuse
