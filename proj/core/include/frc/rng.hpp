#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace frc {

/// Seedable random source with a fixed, portable draw algorithm.
///
/// std::mt19937_64 is fully specified by the standard, but the distribution
/// adaptors are not, so uniform and normal draws are derived here explicitly:
/// uniforms take the top 53 bits of the raw stream, normals use Box-Muller
/// with the spare value cached. The same seed therefore yields the same
/// stream on every platform. Output metadata records kRngAlgorithm.
class Rng {
public:
    static constexpr const char* kAlgorithm = "mt19937_64/box-muller";

    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Unbiased uniform integer in [0, bound); bound must be positive.
    std::uint64_t uniform_int(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = gen_();
            if (r >= threshold) return r % bound;
        }
    }

    /// Normal deviate with mean 0 and the given standard deviation.
    double normal(double stddev) {
        if (has_spare_) {
            has_spare_ = false;
            return spare_ * stddev;
        }
        // u1 in (0, 1] so the log is finite.
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta) * stddev;
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace frc
