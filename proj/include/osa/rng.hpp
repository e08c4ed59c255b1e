#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace osa {

// splitmix64; used to derive independent stream seeds from a base seed.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seedable, splittable random stream. Each user and each channel in a
// simulation gets its own stream so replications are reproducible and
// event reordering cannot perturb draws.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed) {
        uint64_t s = seed;
        engine_.seed(splitmix64(s));
    }

    // Derive an independent stream keyed by (this stream's seed, id).
    Rng split(uint64_t id) const {
        uint64_t s = seed_;
        uint64_t h = splitmix64(s) ^ (0xa0761d6478bd642fULL * (id + 1));
        return Rng(h);
    }

    double uniform() { return unit_(engine_); }

    double exponential(double mean) { return -mean * std::log1p(-unit_(engine_)); }

    // Uniform integer in [0, n)
    uint64_t below(uint64_t n) {
        std::uniform_int_distribution<uint64_t> d(0, n - 1);
        return d(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    uint64_t seed_ = 0;
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

} // namespace osa
