#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace zhawkes {

/// Seeded, reproducible random source used by both simulators.
///
/// All variates are derived from std::mt19937_64 (bit-exact across
/// platforms by the standard) through fixed, documented mappings:
///   uniform():     ((x >> 11) + 1) * 2^-53, one generator call, in (0, 1]
///   exponential(): -log(uniform()) / rate, one call
///   sign():        +1 if uniform() < 0.5 else -1, one call
///   normal():      Box-Muller pair from two uniforms; the second variate
///                  is cached, so calls alternate between two and zero
///                  generator invocations.
/// Changing any of these mappings breaks replay of recorded seeds.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() {
        return static_cast<double>((gen_() >> 11) + 1) * 0x1p-53;
    }

    double exponential(double rate) { return -std::log(uniform()) / rate; }

    int sign() { return uniform() < 0.5 ? +1 : -1; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double theta = 2.0 * pi * uniform();
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    static constexpr double pi = 3.14159265358979323846;
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace zhawkes
