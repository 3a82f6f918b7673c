#pragma once

#include <cstdint>
#include <random>

namespace rab {

/// Generator identifier recorded in simulation output. The raw mt19937_64
/// stream is bit-specified by the C++ standard and every variate transform
/// below is implemented locally, so sequences reproduce across standard
/// libraries and platforms.
inline constexpr const char* kRngAlgorithm = "splitmix64+mt19937_64";

/// One step of the splitmix64 sequence; used to expand user seeds and to
/// derive independent streams.
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic, seedable, splittable random source. Distinct `stream`
/// values give statistically independent sequences for the same seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    /// Uniform in [0,1), 53-bit resolution.
    double next_unit();

    bool bernoulli(double p);

    /// Unbiased uniform integer in [0, bound); bound >= 1.
    std::uint64_t uniform_below(std::uint64_t bound);

    /// Poisson variate via Knuth's product method; means above 30 are split
    /// into independent halves so the method never underflows.
    std::uint64_t poisson(double mean);

    /// Binomial variate via CDF inversion; expected cost O(trials*p).
    std::uint64_t binomial(std::uint64_t trials, double p);

private:
    std::mt19937_64 engine_;
};

}  // namespace rab
