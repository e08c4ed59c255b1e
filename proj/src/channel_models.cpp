#include "osa/channel_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace osa {

namespace {

constexpr double kProbTol = 1e-12;

} // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> s,
                                           std::vector<double> p)
    : support(std::move(s)), probs(std::move(p)) {
    if (support.empty() || support.size() != probs.size())
        throw std::invalid_argument("support/probs size mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i] <= 0.0)
            throw std::invalid_argument("rewards must be positive");
        if (i > 0 && support[i] <= support[i - 1])
            throw std::invalid_argument("support must be strictly increasing");
        if (probs[i] < 0.0)
            throw std::invalid_argument("probabilities must be >= 0");
        total += probs[i];
    }
    if (std::abs(total - 1.0) > kProbTol)
        throw std::invalid_argument("probabilities must sum to 1");
    cdf_.resize(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cdf_.begin());
    cdf_.back() = 1.0;
}

double DiscreteDistribution::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) m += support[i] * probs[i];
    return m;
}

double DiscreteDistribution::cdf(double c) const {
    double p = 0.0;
    for (std::size_t i = 0; i < support.size() && support[i] <= c; ++i)
        p += probs[i];
    return p;
}

double DiscreteDistribution::tail_prob(double lam) const {
    double p = 0.0;
    for (std::size_t i = support.size(); i-- > 0 && support[i] >= lam;)
        p += probs[i];
    return p;
}

double DiscreteDistribution::upper_partial_mean(double lam) const {
    double m = 0.0;
    for (std::size_t i = support.size(); i-- > 0 && support[i] >= lam;)
        m += support[i] * probs[i];
    return m;
}

double DiscreteDistribution::expect_max(double floor) const {
    double m = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i)
        m += std::max(support[i], floor) * probs[i];
    return m;
}

double DiscreteDistribution::sample(Rng& rng) const {
    const double u = rng.uniform();
    auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return support[static_cast<std::size_t>(it - cdf_.begin())];
}

MarkovChannel::MarkovChannel(std::size_t n, std::vector<double> t,
                             std::vector<double> r)
    : n_states(n), transition(std::move(t)), rewards(std::move(r)) {
    if (n == 0 || transition.size() != n * n || rewards.size() != n)
        throw std::invalid_argument("bad chain dimensions");
    for (std::size_t i = 0; i < n; ++i) {
        if (rewards[i] <= 0.0)
            throw std::invalid_argument("state rewards must be positive");
        if (i > 0 && rewards[i] <= rewards[i - 1])
            throw std::invalid_argument("state rewards must be increasing");
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (prob(i, j) < 0.0)
                throw std::invalid_argument("transition entries must be >= 0");
            row += prob(i, j);
        }
        if (std::abs(row - 1.0) > kProbTol)
            throw std::invalid_argument("transition rows must sum to 1");
    }
}

std::size_t MarkovChannel::sample_next(std::size_t state, Rng& rng) const {
    double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t j = 0; j < n_states; ++j) {
        acc += prob(state, j);
        if (u <= acc) return j;
    }
    return n_states - 1;
}

DiscreteDistribution discretize_exponential(double mean, double x_max,
                                            std::size_t n_points) {
    if (mean <= 0.0 || x_max <= 0.0)
        throw std::domain_error("mean and x_max must be > 0");
    if (n_points < 2) throw std::domain_error("need at least 2 grid points");
    std::vector<double> support(n_points), probs(n_points);
    const double step = x_max / static_cast<double>(n_points);
    double total = 0.0;
    for (std::size_t i = 0; i < n_points; ++i) {
        support[i] = (static_cast<double>(i) + 0.5) * step;
        probs[i] = std::exp(-support[i] / mean);
        total += probs[i];
    }
    for (double& p : probs) p /= total;
    return DiscreteDistribution(std::move(support), std::move(probs));
}

double awgn_default_rmax(double rho) {
    // F_R(r_max) = 1 - 1e-4
    return std::log(1.0 + rho * std::log(1e4));
}

DiscreteDistribution discretize_awgn(double rho, double r_max,
                                     std::size_t n_points) {
    if (rho <= 0.0 || r_max <= 0.0)
        throw std::domain_error("rho and r_max must be > 0");
    if (n_points < 2) throw std::domain_error("need at least 2 grid points");
    auto cdf = [rho](double r) { return 1.0 - std::exp(-std::expm1(r) / rho); };
    std::vector<double> support(n_points), probs(n_points);
    const double step = r_max / static_cast<double>(n_points);
    double total = 0.0;
    for (std::size_t i = 0; i < n_points; ++i) {
        const double lo = static_cast<double>(i) * step;
        const double hi = lo + step;
        support[i] = 0.5 * (lo + hi);
        probs[i] = cdf(hi) - cdf(lo);
        total += probs[i];
    }
    for (double& p : probs) p /= total;
    return DiscreteDistribution(std::move(support), std::move(probs));
}

namespace {

std::vector<double> mat_mul(const std::vector<double>& a,
                            const std::vector<double>& b, std::size_t n) {
    std::vector<double> c(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a[i * n + k];
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
        }
    return c;
}

void renormalize_rows(std::vector<double>& m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double& e = m[i * n + j];
            e = std::clamp(e, 0.0, 1.0);
            row += e;
        }
        if (std::abs(row - 1.0) > 1e-12)
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] /= row;
    }
}

} // namespace

std::vector<double> k_step(const MarkovChannel& chain, std::size_t k) {
    const std::size_t n = chain.n_states;
    std::vector<double> result(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) result[i * n + i] = 1.0;
    std::vector<double> base = chain.transition;
    while (k > 0) {
        if (k & 1) result = mat_mul(result, base, n);
        k >>= 1;
        if (k > 0) base = mat_mul(base, base, n);
    }
    renormalize_rows(result, n);
    return result;
}

std::vector<double> stationary(const MarkovChannel& chain) {
    const std::size_t n = chain.n_states;
    std::vector<double> pi(n, 1.0 / static_cast<double>(n)), next(n);
    // Power iteration on the lazy chain (I + P)/2, which shares the
    // stationary distribution but is aperiodic.
    for (int iter = 0; iter < 400000; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            next[i] += 0.5 * pi[i];
            for (std::size_t j = 0; j < n; ++j)
                next[j] += 0.5 * pi[i] * chain.prob(i, j);
        }
        double total = 0.0;
        for (double v : next) total += v;
        for (double& v : next) v /= total;
        pi.swap(next);
        // Residual against the original chain: ||pi P - pi||_inf
        double residual = 0.0;
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                next[j] += pi[i] * chain.prob(i, j);
        for (std::size_t j = 0; j < n; ++j)
            residual = std::max(residual, std::abs(next[j] - pi[j]));
        if (residual < 1e-12) return pi;
    }
    throw std::runtime_error(
        "stationary distribution did not converge; chain may be reducible");
}

MarkovChannel birth_death_chain(std::size_t n, double up,
                                std::vector<double> rewards) {
    if (up <= 0.0 || up >= 1.0) throw std::domain_error("up must be in (0,1)");
    std::vector<double> t(n * n, 0.0);
    const double down = 1.0 - up;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t hi = std::min(i + 1, n - 1);
        const std::size_t lo = i == 0 ? 0 : i - 1;
        t[i * n + hi] += up;
        t[i * n + lo] += down;
    }
    return MarkovChannel(n, std::move(t), std::move(rewards));
}

MarkovChannel iid_as_chain(const DiscreteDistribution& dist) {
    const std::size_t n = dist.support.size();
    std::vector<double> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i * n + j] = dist.probs[j];
    return MarkovChannel(n, std::move(t), dist.support);
}

} // namespace osa
