#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace thinsim {

// Seeded random stream. All draws are implemented on top of the raw
// mt19937_64 output so results are identical across standard libraries;
// std::uniform_* distributions are not portable and are never used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_tag_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi] (inclusive), unbiased via rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(engine_());  // full range
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % span);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Box-Muller; one cached draw.
    double normal(double mean = 0.0, double sigma = 1.0) {
        if (have_cached_) {
            have_cached_ = false;
            return mean + sigma * cached_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return mean + sigma * r * std::cos(a);
    }

    // Fisher-Yates, pinned here rather than std::shuffle so permutations do
    // not depend on the standard library implementation.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(items[i - 1], items[j]);
        }
    }

    // Independent child stream; used to give scene generation, IK draws and
    // outcome draws their own streams so adding draws in one stage does not
    // shift another.
    Rng substream(std::uint64_t stream_id) {
        const std::uint64_t mixed = mix(seed_tag_ ^ (0x9E3779B97F4A7C15ULL * (stream_id + 1)));
        return Rng(mixed, /*tag=*/mixed);
    }

private:
    Rng(std::uint64_t seed, std::uint64_t tag) : engine_(seed), seed_tag_(tag) {}

    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 33;
        x *= 0xFF51AFD7ED558CCDULL;
        x ^= x >> 33;
        x *= 0xC4CEB9FE1A85EC53ULL;
        x ^= x >> 33;
        return x;
    }

    std::mt19937_64 engine_;
    std::uint64_t seed_tag_ = 0;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace thinsim
