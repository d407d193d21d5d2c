#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cat0 {

/// Seeded PRNG with platform-independent draws.
///
/// std::mt19937_64 has a fully specified output sequence, but the standard
/// distributions do not, so reports built from std distributions would not be
/// byte-identical across standard libraries. The uniform/normal draws here
/// are pinned down to the bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform in {0, ..., n-1}. Modulo bias is ~n/2^64, irrelevant here;
    // what matters is that the draw is identical everywhere.
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(engine_() % static_cast<std::uint64_t>(n));
    }

    bool coin() { return (engine_() & 1u) != 0; }

    // Box-Muller, consumes two uniforms per pair.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace cat0
