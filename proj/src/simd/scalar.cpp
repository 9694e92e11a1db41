#include "zhawkes/simd/kernels.hpp"

#include <cmath>

namespace zhawkes::simd {
namespace {

void decay_sums_scalar(const double* times, const double* signs, std::size_t n,
                       double t, double beta, double omega,
                       double* h_sum, double* z_sum) {
    double h = 0.0;
    double z = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = t - times[i];
        h += std::exp(-beta * dt);
        z += signs[i] * std::exp(-omega * dt);
    }
    *h_sum = h;
    *z_sum = z;
}

void count_ge_scalar(const double* values, std::size_t n,
                     const double* thresholds, std::size_t m,
                     std::uint64_t* counts) {
    for (std::size_t j = 0; j < m; ++j) counts[j] = 0;
    // Block over values so each chunk stays cache-resident across thresholds.
    constexpr std::size_t block = 8192;
    for (std::size_t start = 0; start < n; start += block) {
        const std::size_t end = start + block < n ? start + block : n;
        for (std::size_t j = 0; j < m; ++j) {
            const double thr = thresholds[j];
            std::uint64_t c = 0;
            for (std::size_t i = start; i < end; ++i) c += values[i] >= thr;
            counts[j] += c;
        }
    }
}

double sum_log_scalar(const double* values, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::log(values[i]);
    return s;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{decay_sums_scalar, count_ge_scalar, sum_log_scalar};
    return table;
}

}  // namespace zhawkes::simd
