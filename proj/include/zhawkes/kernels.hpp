#pragma once

#include <cmath>
#include <string>

namespace zhawkes {

/// Exponential excitation kernel amplitude * exp(-decay * s), s >= 0.
struct ExpKernel {
    double amplitude = 0.0;  // 1/time
    double decay = 1.0;      // 1/time

    double operator()(double s) const { return amplitude * std::exp(-decay * s); }
    double norm() const { return amplitude / decay; }
};

double kernel_norm(const ExpKernel& k);

/// Full parameterization of the quadratic self-exciting process
///   lambda_t = baseline + H_t + Z_t^2
/// with exponential Hawkes kernel phi(s) = hawkes_ratio * hawkes_decay * exp(-hawkes_decay * s)
/// and trend kernel z(s) = gamma * exp(-zumbach_decay * s), gamma = sqrt(2 * zumbach_ratio * zumbach_decay).
/// gamma is always derived on demand, never stored.
struct ZHawkesParams {
    double baseline = 0.0;      // events/time, > 0
    double hawkes_ratio = 0.0;  // n_H, >= 0
    double hawkes_decay = 1.0;  // beta, > 0
    double zumbach_ratio = 0.0; // n_Z, >= 0
    double zumbach_decay = 1.0; // omega, > 0
    double tick = 1.0;          // elementary price change, > 0

    double zumbach_amplitude() const { return std::sqrt(2.0 * zumbach_ratio * zumbach_decay); }
    ExpKernel hawkes_kernel() const { return {hawkes_ratio * hawkes_decay, hawkes_decay}; }

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct Endogeneity {
    double hawkes;   // n_H
    double zumbach;  // n_Z
    double total;    // n = n_H + n_Z
};

Endogeneity endogeneity(const ZHawkesParams& p);

enum class Stability {
    stationary_finite_mean,    // n < 1
    stationary_infinite_mean,  // n >= 1 but n_H < 1
    explosive,                 // n_H >= 1
};

Stability classify_stability(const ZHawkesParams& p);
std::string to_string(Stability s);

struct MeanIntensity {
    double value;      // baseline / (1 - n) when finite, +inf otherwise
    bool is_infinite;
};

MeanIntensity theoretical_mean_intensity(const ZHawkesParams& p);

/// Which closed-form correction to apply in the survival-tail exponent.
/// There is no crossover criterion between the two chi limits, so the
/// regime is always an explicit caller choice.
enum class TailRegime {
    exact_nh0,  // n_H = 0: correction is exactly zero
    chi_small,  // chi = 2*omega/beta -> 0 expansion
    chi_large,  // chi -> infinity expansion (also valid for n_H -> 0 at any chi)
};

std::string to_string(TailRegime r);

struct TailPrediction {
    double exponent;      // slope of log E(Lambda) vs log Lambda, < -1/2
    double correction_a;  // the regime-dependent correction
    double chi;           // 2 * zumbach_decay / hawkes_decay
    TailRegime regime;
    bool infinite_mean;   // exponent > -1, i.e. density exponent below 2
};

/// Throws std::invalid_argument when the regime preconditions are violated
/// (zumbach_ratio == 0; exact_nh0 with hawkes_ratio != 0; chi_large with
/// zumbach_ratio == 1) and std::domain_error when n_Z*(1+a) <= 0.
TailPrediction predict_tail_exponent(const ZHawkesParams& p, TailRegime regime);

}  // namespace zhawkes
