#pragma once

#include <cstdint>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "shannon/bits.hpp"
#include "shannon/channel.hpp"
#include "shannon/errors.hpp"

// Monte-Carlo simulation of the Gaussian channel and plug-in entropy/MI
// estimation from binned samples.

namespace shannon {

// Reproducible random stream: SplitMix64 over a 64-bit counter, Gaussian
// variates by the Marsaglia polar method.  Identical seeds give identical
// sequences (bit-identical on any IEEE-754 double platform up to libm
// rounding of sqrt/log).
struct SeededStream {
    std::uint64_t seed = 0;

    static constexpr std::string_view algorithm = "splitmix64+marsaglia-polar/v1";
};

// Raw generator behind SeededStream; exposed for tests and samplers.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double next_unit() {  // [0, 1), 53-bit resolution
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

    double next();  // standard normal

private:
    SplitMix64 rng_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

struct ChannelSamples {
    std::vector<double> x;
    std::vector<double> y;
};

// Samples are generated in fixed-size shards, each from a seed derived
// from (stream.seed, shard index); workers > 1 computes shards in parallel
// with output bit-identical to the sequential run.
ChannelSamples simulate_additive_gaussian(const GaussianChannelSpec& spec, std::size_t n,
                                          SeededStream stream, unsigned workers = 1);

std::uint64_t derive_shard_seed(std::uint64_t seed, std::uint64_t shard_index);

// 2-D counting histogram with strictly increasing bin edges; values
// outside the edge range are clamped into the boundary bins.
class Histogram2D {
public:
    Histogram2D(std::vector<double> x_edges, std::vector<double> y_edges);

    // Equal-probability (quantile) edges on each marginal; duplicate
    // quantiles are merged, so the effective bin count may be lower.
    static Histogram2D with_quantile_edges(std::span<const double> xs,
                                           std::span<const double> ys, std::size_t bins);

    void add(double x, double y);
    void add_all(std::span<const double> xs, std::span<const double> ys);

    std::size_t x_bins() const noexcept { return x_edges_.size() - 1; }
    std::size_t y_bins() const noexcept { return y_edges_.size() - 1; }
    std::uint64_t count(std::size_t i, std::size_t j) const { return counts_[i * y_bins() + j]; }
    std::uint64_t total() const noexcept { return total_; }
    const std::vector<double>& x_edges() const noexcept { return x_edges_; }
    const std::vector<double>& y_edges() const noexcept { return y_edges_; }

    std::vector<std::uint64_t> x_marginal() const;
    std::vector<std::uint64_t> y_marginal() const;

private:
    std::size_t x_bin(double v) const;
    std::size_t y_bin(double v) const;

    std::vector<double> x_edges_;
    std::vector<double> y_edges_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

enum class BiasCorrection { None, MillerMadow };

// Entropy of the empirical pmf counts/total.  Off by default, MillerMadow
// adds (K - 1) / (2 n ln 2) with K the number of occupied bins.
Bits plugin_entropy(std::span<const std::uint64_t> counts,
                    BiasCorrection correction = BiasCorrection::None);

// MI of the empirical joint; the uncorrected form is the double-sum
// applied to cell frequencies and is nonnegative.
Bits plugin_mutual_information(const Histogram2D& hist,
                               BiasCorrection correction = BiasCorrection::None);

double sample_variance(std::span<const double> values);

}  // namespace shannon
