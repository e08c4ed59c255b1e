#include "osa/congestion.hpp"

#include <cmath>
#include <stdexcept>

namespace osa::congestion {

namespace {

void check_domain(double g, double T) {
    if (g < 0.0) throw std::domain_error("attempt rate must be >= 0");
    if (T < 1.0) throw std::domain_error("transmission time must be >= 1");
}

} // namespace

double success_rate(double g, double T) {
    check_domain(g, T);
    if (g == 0.0) return 0.0;
    const double a = g * std::exp(-2.0 * g);
    return a / (1.0 + (1.0 + T) * a);
}

double residual_wait(double g, double T, double inv_zeta) {
    check_domain(g, T);
    if (inv_zeta <= 0.0) throw std::domain_error("1/zeta must be > 0");
    if (g == 0.0) return 0.0; // limit S -> 0
    const double s = success_rate(g, T);
    const double inv_s = 1.0 / s;
    return inv_s + inv_zeta -
           (T + 1.0 + inv_s + inv_zeta) * std::exp(-(T + 1.0) * s);
}

double contention_delay(double g, double inv_zeta) {
    if (g < 0.0) throw std::domain_error("attempt rate must be >= 0");
    if (inv_zeta <= 0.0) throw std::domain_error("1/zeta must be > 0");
    return std::expm1(2.0 * g) * (inv_zeta + 2.0) + 2.0;
}

double switching_delay(double g, double T, double inv_zeta) {
    return residual_wait(g, T, inv_zeta) + contention_delay(g, inv_zeta);
}

CongestionProfile CongestionProfile::make(double g, double T, double inv_zeta) {
    CongestionProfile p;
    p.attempt_rate = g;
    p.transmission_time = T;
    p.inv_zeta = inv_zeta;
    p.success = success_rate(g, T);
    p.residual = residual_wait(g, T, inv_zeta);
    p.contention = contention_delay(g, inv_zeta);
    p.switching = p.residual + p.contention;
    return p;
}

} // namespace osa::congestion
