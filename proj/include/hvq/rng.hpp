#ifndef HVQ_RNG_HPP
#define HVQ_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

namespace hvq {

// Deterministic random stream. mt19937_64 is bit-exact across platforms;
// the distributions are hand-rolled because the std:: ones are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller; one value per call, no caching,
    // so the stream layout stays obvious.
    double normal() {
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    // Uniform point on the sphere of given radius (Gaussian-normalize method).
    std::array<double, 3> sphere(double radius) {
        for (;;) {
            std::array<double, 3> v{normal(), normal(), normal()};
            const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
            if (r > 1e-12) {
                for (auto& x : v) x *= radius / r;
                return v;
            }
        }
    }

    // Independent per-index substream (trajectory workers, MC replicas).
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        // splitmix64 scramble of (seed, index)
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace hvq

#endif
