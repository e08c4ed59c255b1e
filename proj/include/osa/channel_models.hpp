#pragma once

#include <cstddef>
#include <vector>

#include "osa/rng.hpp"

namespace osa {

// Finite-support reward distribution for one channel (IID model).
// Support is strictly increasing, all rewards positive, probs sum to 1.
struct DiscreteDistribution {
    std::vector<double> support; // ascending reward values, bytes per time unit
    std::vector<double> probs;

    DiscreteDistribution() = default;
    DiscreteDistribution(std::vector<double> support, std::vector<double> probs);

    double max_value() const { return support.back(); }
    double mean() const;

    // P(X <= c)
    double cdf(double c) const;
    // P(X >= lam)
    double tail_prob(double lam) const;
    // sum_{x >= lam} x f(x)
    double upper_partial_mean(double lam) const;
    // E[max(X, floor)]
    double expect_max(double floor) const;

    double sample(Rng& rng) const;

private:
    std::vector<double> cdf_; // cumulative, for sampling
};

// Finite irreducible Markov chain with per-state rewards.
struct MarkovChannel {
    std::size_t n_states = 0;
    std::vector<double> transition; // row-major n x n, row-stochastic
    std::vector<double> rewards;    // strictly increasing in state index

    MarkovChannel() = default;
    MarkovChannel(std::size_t n, std::vector<double> transition,
                  std::vector<double> rewards);

    double prob(std::size_t from, std::size_t to) const {
        return transition[from * n_states + to];
    }

    std::size_t sample_next(std::size_t state, Rng& rng) const;
};

// n_points equispaced midpoints on (0, x_max]; probabilities proportional to
// the exponential density, renormalized after truncation.
DiscreteDistribution discretize_exponential(double mean, double x_max,
                                            std::size_t n_points);

// Shannon-rate distribution over a Rayleigh-faded AWGN link:
//   F_R(r) = 1 - exp(-(e^r - 1)/rho),  r >= 0
// Probabilities come from CDF differences on an n-bin grid over (0, r_max],
// renormalized after truncation.
DiscreteDistribution discretize_awgn(double rho, double r_max,
                                     std::size_t n_points);

// Truncation point keeping all but ~1e-4 of the AWGN rate mass.
double awgn_default_rmax(double rho);

// transition^k; k = 0 gives identity. Repeated squaring, rows renormalized
// if accumulated drift exceeds 1e-12.
std::vector<double> k_step(const MarkovChannel& chain, std::size_t k);

// Stationary distribution by power iteration to residual < 1e-12.
std::vector<double> stationary(const MarkovChannel& chain);

// Birth-death chain with reflecting ends: P(i,i+1) = up, P(i,i-1) = 1-up,
// boundary mass folded back on itself.
MarkovChannel birth_death_chain(std::size_t n_states, double up,
                                std::vector<double> rewards);

// Chain whose rows all equal `dist` (IID model embedded as a Markov chain).
MarkovChannel iid_as_chain(const DiscreteDistribution& dist);

} // namespace osa
