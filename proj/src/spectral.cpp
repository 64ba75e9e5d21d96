#include "shannon/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace shannon {

SampledSignal::SampledSignal(std::vector<double> samples_in, double sample_rate_in)
    : samples(std::move(samples_in)), sample_rate(sample_rate_in) {
    if (samples.size() < 2) throw ValidationError("sampled signal: need at least 2 samples");
    if (!(sample_rate > 0.0)) throw ValidationError("sampled signal: sample rate must be > 0");
}

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey, decimation in time.
void fft_radix2(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
        for (std::size_t block = 0; block < n; block += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> w =
                    std::polar(1.0, angle * static_cast<double>(k));
                const std::complex<double> u = a[block + k];
                const std::complex<double> v = a[block + k + len / 2] * w;
                a[block + k] = u + v;
                a[block + k + len / 2] = u - v;
            }
        }
    }
}

FourierCoefficients analyze_via_fft(const SampledSignal& sig) {
    const std::size_t n = sig.samples.size();
    std::vector<std::complex<double>> spectrum(sig.samples.begin(), sig.samples.end());
    fft_radix2(spectrum);
    FourierCoefficients coeffs;
    coeffs.duration = sig.duration();
    coeffs.mean = spectrum[0].real() / static_cast<double>(n);
    const std::size_t n_max = n / 2;
    coeffs.cosine.resize(n_max);
    coeffs.sine.resize(n_max);
    for (std::size_t h = 1; h <= n_max; ++h) {
        const bool nyquist = (2 * h == n);
        const double scale = (nyquist ? 1.0 : 2.0) / static_cast<double>(n);
        coeffs.cosine[h - 1] = scale * spectrum[h].real();
        coeffs.sine[h - 1] = nyquist ? 0.0 : -scale * spectrum[h].imag();
    }
    return coeffs;
}

FourierCoefficients analyze_direct(const SampledSignal& sig) {
    const std::size_t n = sig.samples.size();
    FourierCoefficients coeffs;
    coeffs.duration = sig.duration();
    double mean = 0.0;
    for (double x : sig.samples) mean += x;
    coeffs.mean = mean / static_cast<double>(n);
    const std::size_t n_max = n / 2;
    coeffs.cosine.resize(n_max);
    coeffs.sine.resize(n_max);
    for (std::size_t h = 1; h <= n_max; ++h) {
        const double step = 2.0 * std::numbers::pi * static_cast<double>(h) /
                            static_cast<double>(n);
        double sum_cos = 0.0;
        double sum_sin = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = step * static_cast<double>(k);
            sum_cos += sig.samples[k] * std::cos(angle);
            sum_sin += sig.samples[k] * std::sin(angle);
        }
        const bool nyquist = (2 * h == n);
        const double scale = (nyquist ? 1.0 : 2.0) / static_cast<double>(n);
        coeffs.cosine[h - 1] = scale * sum_cos;
        coeffs.sine[h - 1] = nyquist ? 0.0 : scale * sum_sin;
    }
    return coeffs;
}

}  // namespace

FourierCoefficients fourier_analyze(const SampledSignal& sig) {
    if (is_power_of_two(sig.samples.size())) return analyze_via_fft(sig);
    return analyze_direct(sig);
}

std::vector<double> synthesize(const FourierCoefficients& coeffs,
                               std::span<const double> times) {
    std::vector<double> values;
    values.reserve(times.size());
    for (double t : times) {
        double x = coeffs.mean;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const double angle = 2.0 * std::numbers::pi * coeffs.frequency(i) * t;
            x += coeffs.cosine[i] * std::cos(angle) + coeffs.sine[i] * std::sin(angle);
        }
        values.push_back(x);
    }
    return values;
}

SampledSignal synthesize_uniform(const FourierCoefficients& coeffs, double sample_rate,
                                 std::size_t count) {
    std::vector<double> times(count);
    for (std::size_t k = 0; k < count; ++k) times[k] = static_cast<double>(k) / sample_rate;
    return SampledSignal(synthesize(coeffs, times), sample_rate);
}

std::vector<SpectralLine> power_spectrum(const FourierCoefficients& coeffs) {
    std::vector<SpectralLine> lines;
    lines.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const double a = coeffs.cosine[i];
        const double b = coeffs.sine[i];
        lines.push_back({coeffs.frequency(i), a * a + b * b, std::atan2(b, a)});
    }
    return lines;
}

Bits per_frequency_mi(double signal_power, double noise_power) {
    if (!(signal_power >= 0.0)) {
        throw std::domain_error("per_frequency_mi: signal power must be >= 0");
    }
    if (!(noise_power > 0.0)) {
        throw std::domain_error("per_frequency_mi: noise power must be > 0");
    }
    return Bits{log2_of(1.0 + signal_power / noise_power)};
}

SpectrumPair::SpectrumPair(std::vector<double> frequencies_in,
                           std::vector<double> signal_power_in,
                           std::vector<double> noise_power_in, double bandwidth_in)
    : frequencies(std::move(frequencies_in)),
      signal_power(std::move(signal_power_in)),
      noise_power(std::move(noise_power_in)),
      bandwidth(bandwidth_in) {
    if (frequencies.empty() || frequencies.size() != signal_power.size() ||
        frequencies.size() != noise_power.size()) {
        throw ValidationError("spectrum pair: frequency/S/N sequences must share a length >= 1");
    }
    if (!(bandwidth > 0.0)) throw ValidationError("spectrum pair: bandwidth must be > 0");
    for (std::size_t i = 0; i < frequencies.size(); ++i) {
        if (i > 0 && !(frequencies[i] > frequencies[i - 1])) {
            throw ValidationError("spectrum pair: frequency grid is not strictly increasing");
        }
        if (frequencies[i] < 0.0 || frequencies[i] > bandwidth * (1.0 + 1e-12)) {
            std::ostringstream msg;
            msg << "spectrum pair: frequency " << frequencies[i] << " outside [0, "
                << bandwidth << "]";
            throw ValidationError(msg.str());
        }
        if (!(signal_power[i] >= 0.0)) {
            throw ValidationError("spectrum pair: negative signal power");
        }
        if (!(noise_power[i] > 0.0)) {
            throw ValidationError("spectrum pair: noise power must be > 0");
        }
    }
}

Bits spectral_mutual_information(const SpectrumPair& sp) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < sp.frequencies.size(); ++i) {
        const double left = per_frequency_mi(sp.signal_power[i], sp.noise_power[i]).value();
        const double right =
            per_frequency_mi(sp.signal_power[i + 1], sp.noise_power[i + 1]).value();
        total += (sp.frequencies[i + 1] - sp.frequencies[i]) * 0.5 * (left + right);
    }
    return Bits{total};
}

SpectrumPair flat_spectrum_allocation(std::span<const double> frequencies,
                                      std::span<const double> noise_power, double bandwidth,
                                      double total_signal_power) {
    if (frequencies.empty()) throw ValidationError("flat_spectrum_allocation: empty grid");
    if (frequencies.size() < 2) {
        throw ValidationError("flat_spectrum_allocation: grid must span a band (>= 2 points)");
    }
    if (frequencies.size() != noise_power.size()) {
        throw ValidationError("flat_spectrum_allocation: grid and noise lengths differ");
    }
    if (!(total_signal_power >= 0.0)) {
        throw ValidationError("flat_spectrum_allocation: power budget must be >= 0");
    }

    // Trapezoid weights; allocated power is sum w_i S_i.
    const std::size_t n = frequencies.size();
    std::vector<double> weights(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = frequencies[i + 1] - frequencies[i];
        weights[i] += 0.5 * h;
        weights[i + 1] += 0.5 * h;
    }
    const auto allocated = [&](double level) {
        double power = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            power += weights[i] * std::max(0.0, level - noise_power[i]);
        }
        return power;
    };

    double level = *std::min_element(noise_power.begin(), noise_power.end());
    if (total_signal_power > 0.0) {
        const double total_weight = frequencies.back() - frequencies.front();
        double lo = level;
        double hi = *std::max_element(noise_power.begin(), noise_power.end()) +
                    total_signal_power / std::max(total_weight, 1e-300) + 1.0;
        for (int iter = 0; iter < 200; ++iter) {
            level = 0.5 * (lo + hi);
            const double power = allocated(level);
            if (std::abs(power - total_signal_power) <= 1e-9) break;
            (power < total_signal_power ? lo : hi) = level;
        }
    }

    std::vector<double> signal(n);
    for (std::size_t i = 0; i < n; ++i) signal[i] = std::max(0.0, level - noise_power[i]);
    return SpectrumPair(std::vector<double>(frequencies.begin(), frequencies.end()),
                        std::move(signal),
                        std::vector<double>(noise_power.begin(), noise_power.end()), bandwidth);
}

}  // namespace shannon
