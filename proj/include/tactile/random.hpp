#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tactile {

// Deterministic RNG used everywhere randomness is needed.
//
// std::mt19937_64 has a fully specified output sequence, but the standard
// distributions do not, so the gaussian and bounded-int draws are spelled
// out here to make seeded runs reproducible bit-for-bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53 bits of mantissa.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; one fresh pair of uniforms per draw.
    double gaussian(double sigma = 1.0) {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return sigma * r * std::cos(2.0 * M_PI * u2);
    }

    // Uniform integer in [0, n), n >= 1.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[bounded(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace tactile
