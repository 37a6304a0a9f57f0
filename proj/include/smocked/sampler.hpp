#pragma once

#include "smocked/geom.hpp"

#include <cstdint>
#include <random>

namespace smocked {

// Seeded sampler with a fixed bit-to-double mapping, so sweeps reproduce
// byte-identically across platforms.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    long uniform_int(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Point2 in_square(double half_side) {
        const double x = uniform(-half_side, half_side);
        const double y = uniform(-half_side, half_side);
        return {x, y};
    }

    Point2 in_disk(double radius) {
        for (;;) {
            const Point2 p = in_square(radius);
            if (p.x * p.x + p.y * p.y <= radius * radius) return p;
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace smocked
