#pragma once

#include <cstddef>
#include <cstdint>

namespace zhawkes::simd {

/// Data-parallel inner loops shared by the brute-force intensity oracle and
/// the tail statistics. Each entry has a scalar reference implementation and
/// (on x86-64) an AVX2 variant; the active table is chosen once at runtime.
/// Variants are equivalence-tested against the scalar reference, not assumed.
struct KernelTable {
    // h_sum = sum_i exp(-beta * (t - times[i]))
    // z_sum = sum_i signs[i] * exp(-omega * (t - times[i]))
    // Requires times[i] <= t for all i.
    void (*decay_sums)(const double* times, const double* signs, std::size_t n,
                       double t, double beta, double omega,
                       double* h_sum, double* z_sum);

    // counts[j] = #{ i : values[i] >= thresholds[j] }
    void (*count_ge)(const double* values, std::size_t n,
                     const double* thresholds, std::size_t m,
                     std::uint64_t* counts);

    // sum_i log(values[i]); values must be positive.
    double (*sum_log)(const double* values, std::size_t n);
};

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);

/// The table in use. Resolved on first call: AVX2 when the build and the CPU
/// support it, scalar otherwise. The ZHAWKES_SIMD environment variable
/// ("scalar" or "avx2") overrides auto-detection.
const KernelTable& active();
Backend active_backend();

/// Force a specific backend (tests, benchmarking). Throws
/// std::invalid_argument if the backend is not available on this machine.
void force_backend(Backend b);

bool avx2_available();

const KernelTable& scalar_table();
#if defined(ZHAWKES_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace zhawkes::simd
