#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "ffm/vec.hpp"

namespace ffm {

// Deterministic random stream: mt19937_64 is bit-specified by the standard,
// and the normal variate is a hand-rolled Box-Muller so the sequence does not
// depend on the standard library's unspecified distribution algorithms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() {  // in [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * M_PI * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    Vec3 normal_vec3() {
        const double a = normal(), b = normal(), c = normal();
        return {a, b, c};
    }

    // Uniform in the ball of the given radius (rejection from the cube).
    Vec3 in_ball(double radius) {
        for (;;) {
            Vec3 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            if (norm2(v) <= 1.0) return radius * v;
        }
    }

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ffm
