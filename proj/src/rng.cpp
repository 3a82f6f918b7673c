#include "rab/rng.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace rab {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed ^ (0xA3EC647659359ACDULL * (stream + 1));
    engine_.seed(splitmix64(state));
}

std::uint64_t Rng::next_u64() {
    return engine_();
}

double Rng::next_unit() {
    return (next_u64() >> 11) * 0x1.0p-53;
}

bool Rng::bernoulli(double p) {
    if (!(p >= 0.0) || !(p <= 1.0)) throw std::domain_error("bernoulli: p must lie in [0,1]");
    return next_unit() < p;
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
    assert(bound >= 1);
    // rejection keeps the draw unbiased
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

std::uint64_t Rng::poisson(double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) throw std::domain_error("poisson: mean must be non-negative and finite");
    if (mean == 0.0) return 0;
    if (mean > 30.0) {
        const double half = 0.5 * mean;
        return poisson(half) + poisson(mean - half);
    }
    const double limit = std::exp(-mean);
    std::uint64_t count = 0;
    double product = next_unit();
    while (product > limit) {
        ++count;
        product *= next_unit();
    }
    return count;
}

std::uint64_t Rng::binomial(std::uint64_t trials, double p) {
    if (!(p >= 0.0) || !(p <= 1.0)) throw std::domain_error("binomial: p must lie in [0,1]");
    if (trials == 0 || p == 0.0) return 0;
    if (p == 1.0) return trials;
    const double u = next_unit();
    const double ratio = p / (1.0 - p);
    double pmf = std::pow(1.0 - p, static_cast<double>(trials));
    double cdf = pmf;
    std::uint64_t k = 0;
    while (u >= cdf && k < trials) {
        ++k;
        pmf *= ratio * (static_cast<double>(trials - k + 1) / static_cast<double>(k));
        cdf += pmf;
    }
    return k;
}

}  // namespace rab
