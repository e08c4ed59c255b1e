#pragma once

namespace osa::congestion {

// Success rate of channel contention:
//   S = G e^{-2G} / (1 + (1+T) G e^{-2G})
double success_rate(double attempt_rate, double transmission_time);

// Expected residual wait when arriving during an active transmission:
//   t_w = 1/S + 1/zeta - (T + 1 + 1/S + 1/zeta) e^{-(T+1)S}
// Analytic limit t_w = 0 at G = 0.
double residual_wait(double attempt_rate, double transmission_time, double inv_zeta);

// Mean contention delay from carrier sense to winning access:
//   t_c = (e^{2G} - 1)(1/zeta + 2) + 2
double contention_delay(double attempt_rate, double inv_zeta);

// t_s = t_w + t_c
double switching_delay(double attempt_rate, double transmission_time, double inv_zeta);

// All derived congestion quantities for one channel at a given load.
struct CongestionProfile {
    double attempt_rate = 0.0;      // G_i, packets per time unit
    double transmission_time = 0.0; // T
    double inv_zeta = 0.0;          // mean random backoff, 1/zeta
    double success = 0.0;           // S_i
    double residual = 0.0;          // t_w
    double contention = 0.0;        // t_c
    double switching = 0.0;         // t_s

    static CongestionProfile make(double attempt_rate, double transmission_time,
                                  double inv_zeta);
};

} // namespace osa::congestion
