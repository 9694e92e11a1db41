#include "zhawkes/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace zhawkes {

double kernel_norm(const ExpKernel& k) { return k.norm(); }

void ZHawkesParams::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(what);
    };
    require(std::isfinite(baseline) && baseline > 0.0, "baseline must be > 0");
    require(std::isfinite(hawkes_ratio) && hawkes_ratio >= 0.0, "hawkes_ratio must be >= 0");
    require(std::isfinite(hawkes_decay) && hawkes_decay > 0.0, "hawkes_decay must be > 0");
    require(std::isfinite(zumbach_ratio) && zumbach_ratio >= 0.0, "zumbach_ratio must be >= 0");
    require(std::isfinite(zumbach_decay) && zumbach_decay > 0.0, "zumbach_decay must be > 0");
    require(std::isfinite(tick) && tick > 0.0, "tick must be > 0");
}

Endogeneity endogeneity(const ZHawkesParams& p) {
    return {p.hawkes_ratio, p.zumbach_ratio, p.hawkes_ratio + p.zumbach_ratio};
}

Stability classify_stability(const ZHawkesParams& p) {
    if (p.hawkes_ratio >= 1.0) return Stability::explosive;
    if (p.hawkes_ratio + p.zumbach_ratio >= 1.0) return Stability::stationary_infinite_mean;
    return Stability::stationary_finite_mean;
}

std::string to_string(Stability s) {
    switch (s) {
        case Stability::stationary_finite_mean: return "stationary-finite-mean";
        case Stability::stationary_infinite_mean: return "stationary-infinite-mean";
        case Stability::explosive: return "explosive";
    }
    return "?";
}

MeanIntensity theoretical_mean_intensity(const ZHawkesParams& p) {
    const double n = p.hawkes_ratio + p.zumbach_ratio;
    if (n >= 1.0) return {std::numeric_limits<double>::infinity(), true};
    return {p.baseline / (1.0 - n), false};
}

std::string to_string(TailRegime r) {
    switch (r) {
        case TailRegime::exact_nh0: return "exact_nh0";
        case TailRegime::chi_small: return "chi_small";
        case TailRegime::chi_large: return "chi_large";
    }
    return "?";
}

TailPrediction predict_tail_exponent(const ZHawkesParams& p, TailRegime regime) {
    const double nh = p.hawkes_ratio;
    const double nz = p.zumbach_ratio;
    if (!(nz > 0.0)) throw std::invalid_argument("tail prediction requires zumbach_ratio > 0");

    const double chi = 2.0 * p.zumbach_decay / p.hawkes_decay;
    double a = 0.0;
    switch (regime) {
        case TailRegime::exact_nh0:
            if (nh != 0.0)
                throw std::invalid_argument("regime exact_nh0 requires hawkes_ratio = 0");
            a = 0.0;
            break;
        case TailRegime::chi_small:
            if (!(nh < 1.0))
                throw std::invalid_argument("regime chi_small requires hawkes_ratio < 1");
            a = nh / (1.0 - nh) *
                (1.0 - chi * (1.0 - nh - nz) / ((1.0 - nh) * (1.0 - nh)));
            break;
        case TailRegime::chi_large:
            if (nz == 1.0)
                throw std::invalid_argument("regime chi_large requires zumbach_ratio != 1");
            a = nh / (chi * (1.0 - nz));
            break;
    }

    const double scale = nz * (1.0 + a);
    if (!(scale > 0.0)) throw std::domain_error("n_Z*(1+a) must be positive for a power-law tail");

    const double exponent = -0.5 * (1.0 + 1.0 / scale);
    return {exponent, a, chi, regime, exponent > -1.0};
}

}  // namespace zhawkes
