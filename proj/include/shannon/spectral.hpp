#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shannon/bits.hpp"
#include "shannon/errors.hpp"

// Fourier decomposition of uniformly sampled signals, power spectra, and
// band-limited Gaussian mutual information via the per-frequency integral
// I(x,y) = integral over [0, W] of log2(1 + S(f)/N(f)) df.

namespace shannon {

struct SampledSignal {
    std::vector<double> samples;
    double sample_rate;  // Hz

    SampledSignal(std::vector<double> samples, double sample_rate);

    double duration() const noexcept {  // T, seconds
        return static_cast<double>(samples.size()) / sample_rate;
    }
};

// Real Fourier coefficients a_n (cosine) and b_n (sine) at harmonics
// f_n = n/T Hz for n = 1 .. floor(count/2), plus the background amplitude
// x0.  For even sample counts the last entry is the Nyquist bin, whose
// coefficient carries the full (not halved) amplitude and whose sine part
// is identically zero.
struct FourierCoefficients {
    double mean = 0.0;           // x0
    std::vector<double> cosine;  // a_1 .. a_nmax
    std::vector<double> sine;    // b_1 .. b_nmax
    double duration = 1.0;       // T, seconds

    std::size_t size() const noexcept { return cosine.size(); }
    double frequency(std::size_t index) const {  // f_{index+1} in Hz
        return static_cast<double>(index + 1) / duration;
    }
};

// Realizes the coefficient integrals a_n = (2/T) integral x_t cos(2 pi f_n t) dt
// (and the sine analogue) as sums over the uniform sample grid; under the
// periodic extension the trapezoid rule collapses to the plain scaled sum.
// Power-of-two sample counts go through a radix-2 transform that matches
// the direct sums to better than 1e-9.
FourierCoefficients fourier_analyze(const SampledSignal& sig);

// x(t) = x0 + sum a_n cos(2 pi f_n t) + sum b_n sin(2 pi f_n t).
std::vector<double> synthesize(const FourierCoefficients& coeffs,
                               std::span<const double> times);

// Convenience: synthesize on the uniform grid k / sample_rate.
SampledSignal synthesize_uniform(const FourierCoefficients& coeffs,
                                 double sample_rate, std::size_t count);

struct SpectralLine {
    double frequency;  // Hz
    double power;      // S_f = a_n^2 + b_n^2, with no 1/2 factor
    double phase;      // arctan(b_n / a_n), quadrant-correct
};

// One line per harmonic n >= 1.  Mean-square consistency carries the
// compensating 1/2: (1/N) sum x_k^2 = x0^2 + sum S_f / 2 for signals
// band-limited below Nyquist.
std::vector<SpectralLine> power_spectrum(const FourierCoefficients& coeffs);

// log2(1 + S_f / N_f); bits/s per unit bandwidth at one frequency.
Bits per_frequency_mi(double signal_power, double noise_power);

// Per-frequency signal and noise power on a grid spanning [0, W].
struct SpectrumPair {
    std::vector<double> frequencies;   // strictly increasing, within [0, W]
    std::vector<double> signal_power;  // S(f) >= 0
    std::vector<double> noise_power;   // N(f) > 0
    double bandwidth;                  // W, Hz

    SpectrumPair(std::vector<double> frequencies, std::vector<double> signal_power,
                 std::vector<double> noise_power, double bandwidth);
};

// Trapezoid integral of per_frequency_mi over the grid; for flat spectra
// this reduces to W log2(1 + S/N) within 1e-9.
Bits spectral_mutual_information(const SpectrumPair& sp);

// Water-filling: S(f) = max(0, k - N(f)) with the level k found by
// bisection so the trapezoid-weighted signal power matches the budget
// within 1e-9.  Where no frequency is clipped, S(f) + N(f) is the constant
// k — the flat spectrum that maximizes band-limited mutual information.
SpectrumPair flat_spectrum_allocation(std::span<const double> frequencies,
                                      std::span<const double> noise_power,
                                      double bandwidth, double total_signal_power);

}  // namespace shannon
