#include <doctest.h>

#include <initializer_list>
#include <stdexcept>

#include <algorithm>
#include <cmath>

#include "osa/channel_models.hpp"

using namespace osa;

namespace {

MarkovChannel sample_birth_death() {
    return birth_death_chain(5, 0.8, {10, 20, 30, 40, 50});
}

} // namespace

TEST_CASE("discretized exponential") {
    const double mean = 1.0 / 0.4;
    const auto d = discretize_exponential(mean, 5.0 * mean, 1000);

    double total = 0.0;
    for (double p : d.probs) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    // Oracle: analytic mean of the exponential truncated at 5*mean,
    //   m (1 - 5 e^{-5} / (1 - e^{-5}))
    const double trunc_mean =
        mean * (1.0 - 5.0 * std::exp(-5.0) / (1.0 - std::exp(-5.0)));
    CHECK(d.mean() == doctest::Approx(trunc_mean).epsilon(1e-4));
    // Truncation at 5*mean keeps the mean within a few percent of the
    // untruncated value.
    CHECK(std::abs(d.mean() - mean) / mean < 0.04);

    CHECK_THROWS_AS(discretize_exponential(-1.0, 5.0, 100), std::domain_error);
    CHECK_THROWS_AS(discretize_exponential(1.0, 5.0, 1), std::domain_error);
}

TEST_CASE("stochastic dominance of higher-mean exponential") {
    const double xmax = 5.0 / 0.2;
    const auto hi = discretize_exponential(1.0 / 0.2, xmax, 1000);
    const auto lo = discretize_exponential(1.0 / 0.6, xmax, 1000);
    double cdf_hi = 0.0, cdf_lo = 0.0;
    for (std::size_t i = 0; i < hi.support.size(); ++i) {
        cdf_hi += hi.probs[i];
        cdf_lo += lo.probs[i];
        CHECK(cdf_hi <= cdf_lo + 1e-12);
    }
}

TEST_CASE("awgn rate distribution") {
    const double rho = 10.0;
    const auto d = discretize_awgn(rho, 8.0, 1000);
    for (double x : d.support) CHECK(x > 0.0);

    // Median from inverting the cdf: r = ln(1 + rho ln 2)
    const double median = std::log(1.0 + rho * std::log(2.0));
    double acc = 0.0;
    double found = 0.0;
    for (std::size_t i = 0; i < d.support.size(); ++i) {
        acc += d.probs[i];
        if (acc >= 0.5) {
            found = d.support[i];
            break;
        }
    }
    CHECK(found == doctest::Approx(median).epsilon(1e-2));

    // Kolmogorov distance between the empirical cdf of samples and the
    // analytic cdf.
    Rng rng(42);
    const int n = 100000;
    std::vector<double> samples(n);
    for (auto& s : samples) s = d.sample(rng);
    std::sort(samples.begin(), samples.end());
    auto cdf = [rho](double r) { return 1.0 - std::exp(-std::expm1(r) / rho); };
    double ks = 0.0;
    for (int i = 0; i < n; ++i) {
        const double f = cdf(samples[static_cast<std::size_t>(i)]);
        ks = std::max(ks, std::abs(f - static_cast<double>(i + 1) / n));
        ks = std::max(ks, std::abs(f - static_cast<double>(i) / n));
    }
    CHECK(ks < 0.02);

    CHECK(awgn_default_rmax(10.0) ==
          doctest::Approx(std::log(1.0 + 10.0 * std::log(1e4))));
}

TEST_CASE("k-step transition") {
    const auto chain = sample_birth_death();
    const auto identity = k_step(chain, 0);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(identity[i * 5 + j] == doctest::Approx(i == j ? 1.0 : 0.0));

    const auto one = k_step(chain, 1);
    for (std::size_t i = 0; i < 25; ++i)
        CHECK(one[i] == doctest::Approx(chain.transition[i]));

    // two up-moves from state 1 to state 3: 0.8 * 0.8
    const auto two = k_step(chain, 2);
    CHECK(two[0 * 5 + 2] == doctest::Approx(0.64));
}

TEST_CASE("stationary distribution") {
    // birth-death with p=0.8 up: detailed balance gives pi_i ~ 4^(i-1)
    const auto pi = stationary(sample_birth_death());
    const double z = 341.0;
    CHECK(pi[0] == doctest::Approx(1.0 / z).epsilon(1e-9));
    CHECK(pi[1] == doctest::Approx(4.0 / z).epsilon(1e-9));
    CHECK(pi[2] == doctest::Approx(16.0 / z).epsilon(1e-9));
    CHECK(pi[3] == doctest::Approx(64.0 / z).epsilon(1e-9));
    CHECK(pi[4] == doctest::Approx(256.0 / z).epsilon(1e-9));

    // defining property pi P = pi
    const auto chain = sample_birth_death();
    for (std::size_t j = 0; j < 5; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < 5; ++i) s += pi[i] * chain.prob(i, j);
        CHECK(std::abs(s - pi[j]) < 1e-11);
    }

    // uniform doubly-stochastic chain -> uniform pi
    const MarkovChannel uniform(3, std::vector<double>(9, 1.0 / 3.0), {1, 2, 3});
    for (double p : stationary(uniform)) CHECK(p == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("iid embedded as chain has its row as stationary distribution") {
    const DiscreteDistribution d({5.0, 15.0}, {0.5, 0.5});
    const auto chain = iid_as_chain(d);
    const auto pi = stationary(chain);
    CHECK(pi[0] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(pi[1] == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("sampling determinism and law of large numbers") {
    const DiscreteDistribution d({5.0, 15.0}, {0.5, 0.5});

    Rng a(123), b(123);
    for (int i = 0; i < 1000; ++i) CHECK(d.sample(a) == d.sample(b));

    Rng rng(7);
    double sum = 0.0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) sum += d.sample(rng);
    CHECK(sum / n == doctest::Approx(10.0).epsilon(0.005));
}

TEST_CASE("chain long-run frequencies match stationary") {
    const auto chain = sample_birth_death();
    const auto pi = stationary(chain);
    Rng rng(99);
    std::vector<double> freq(5, 0.0);
    std::size_t state = 0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) {
        state = chain.sample_next(state, rng);
        freq[state] += 1.0;
    }
    double tv = 0.0;
    for (std::size_t i = 0; i < 5; ++i) tv += std::abs(freq[i] / n - pi[i]);
    CHECK(tv / 2.0 < 0.01);
}

TEST_CASE("invariants rejected at construction") {
    CHECK_THROWS(DiscreteDistribution({5.0, 5.0}, {0.5, 0.5}));     // not increasing
    CHECK_THROWS(DiscreteDistribution({-1.0, 5.0}, {0.5, 0.5}));    // negative reward
    CHECK_THROWS(DiscreteDistribution({1.0, 5.0}, {0.6, 0.6}));     // sum != 1
    CHECK_THROWS(MarkovChannel(2, {0.5, 0.4, 0.5, 0.5}, {1, 2}));   // row sum
    CHECK_THROWS(MarkovChannel(2, {0.5, 0.5, 0.5, 0.5}, {2, 1}));   // rewards order
}
