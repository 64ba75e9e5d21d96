#include "shannon/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <thread>

#include "shannon/discrete.hpp"

namespace shannon {

double GaussianSampler::next() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // Marsaglia polar: rejection-sample the unit disc, transform the pair.
    while (true) {
        const double u = 2.0 * rng_.next_unit() - 1.0;
        const double v = 2.0 * rng_.next_unit() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            const double factor = std::sqrt(-2.0 * std::log(s) / s);
            cached_ = v * factor;
            has_cached_ = true;
            return u * factor;
        }
    }
}

std::uint64_t derive_shard_seed(std::uint64_t seed, std::uint64_t shard_index) {
    SplitMix64 mixer(seed + 0x9e3779b97f4a7c15ULL * (shard_index + 1));
    return mixer.next();
}

namespace {

// Shard granularity of the simulation stream; fixed so that sequential and
// parallel runs produce the same bytes.
constexpr std::size_t kShardSize = 1 << 16;

void fill_shard(const GaussianChannelSpec& spec, std::uint64_t seed, std::uint64_t shard,
                std::size_t begin, std::size_t end, std::vector<double>& x,
                std::vector<double>& y) {
    GaussianSampler gauss(derive_shard_seed(seed, shard));
    const double x_scale = std::sqrt(spec.signal_power);
    const double noise_scale = std::sqrt(spec.noise_power);
    for (std::size_t i = begin; i < end; ++i) {
        x[i] = x_scale * gauss.next();
        y[i] = x[i] + noise_scale * gauss.next();
    }
}

}  // namespace

ChannelSamples simulate_additive_gaussian(const GaussianChannelSpec& spec, std::size_t n,
                                          SeededStream stream, unsigned workers) {
    if (n == 0) throw ValidationError("simulate_additive_gaussian: need n >= 1");
    ChannelSamples samples;
    samples.x.resize(n);
    samples.y.resize(n);
    const std::size_t shards = (n + kShardSize - 1) / kShardSize;
    if (workers <= 1 || shards <= 1) {
        for (std::size_t s = 0; s < shards; ++s) {
            fill_shard(spec, stream.seed, s, s * kShardSize,
                       std::min(n, (s + 1) * kShardSize), samples.x, samples.y);
        }
        return samples;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t s = w; s < shards; s += workers) {
                fill_shard(spec, stream.seed, s, s * kShardSize,
                           std::min(n, (s + 1) * kShardSize), samples.x, samples.y);
            }
        });
    }
    for (std::thread& t : pool) t.join();
    return samples;
}

Histogram2D::Histogram2D(std::vector<double> x_edges, std::vector<double> y_edges)
    : x_edges_(std::move(x_edges)), y_edges_(std::move(y_edges)) {
    const auto check = [](const std::vector<double>& edges, const char* axis) {
        if (edges.size() < 2) {
            throw ValidationError(std::string("histogram: need >= 2 edges on ") + axis);
        }
        for (std::size_t i = 1; i < edges.size(); ++i) {
            if (!(edges[i] > edges[i - 1])) {
                throw ValidationError(std::string("histogram: edges not strictly increasing on ") +
                                      axis);
            }
        }
    };
    check(x_edges_, "x");
    check(y_edges_, "y");
    counts_.assign(x_bins() * y_bins(), 0);
}

namespace {

std::vector<double> quantile_edges(std::span<const double> values, std::size_t bins) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> edges;
    edges.push_back(sorted.front());
    for (std::size_t j = 1; j < bins; ++j) {
        const std::size_t idx = j * sorted.size() / bins;
        const double e = sorted[idx];
        if (e > edges.back()) edges.push_back(e);
    }
    if (sorted.back() > edges.back()) {
        edges.push_back(sorted.back());
    } else {
        // Degenerate sample (all values equal): one bin of zero width
        // padded to the next representable value.
        edges.push_back(std::nextafter(edges.back(), std::numeric_limits<double>::infinity()));
    }
    return edges;
}

}  // namespace

Histogram2D Histogram2D::with_quantile_edges(std::span<const double> xs,
                                             std::span<const double> ys, std::size_t bins) {
    if (xs.empty() || xs.size() != ys.size()) {
        throw ValidationError("histogram: need equal-length nonempty sample columns");
    }
    if (bins == 0) throw ValidationError("histogram: need >= 1 bin");
    Histogram2D hist(quantile_edges(xs, bins), quantile_edges(ys, bins));
    hist.add_all(xs, ys);
    return hist;
}

std::size_t Histogram2D::x_bin(double v) const {
    const auto first = x_edges_.begin() + 1;
    const auto last = x_edges_.end() - 1;  // interior edges only: clamps outliers
    return static_cast<std::size_t>(std::upper_bound(first, last, v) - first);
}

std::size_t Histogram2D::y_bin(double v) const {
    const auto first = y_edges_.begin() + 1;
    const auto last = y_edges_.end() - 1;
    return static_cast<std::size_t>(std::upper_bound(first, last, v) - first);
}

void Histogram2D::add(double x, double y) {
    ++counts_[x_bin(x) * y_bins() + y_bin(y)];
    ++total_;
}

void Histogram2D::add_all(std::span<const double> xs, std::span<const double> ys) {
    for (std::size_t i = 0; i < xs.size(); ++i) add(xs[i], ys[i]);
}

std::vector<std::uint64_t> Histogram2D::x_marginal() const {
    std::vector<std::uint64_t> marginal(x_bins(), 0);
    for (std::size_t i = 0; i < x_bins(); ++i) {
        for (std::size_t j = 0; j < y_bins(); ++j) marginal[i] += count(i, j);
    }
    return marginal;
}

std::vector<std::uint64_t> Histogram2D::y_marginal() const {
    std::vector<std::uint64_t> marginal(y_bins(), 0);
    for (std::size_t j = 0; j < y_bins(); ++j) {
        for (std::size_t i = 0; i < x_bins(); ++i) marginal[j] += count(i, j);
    }
    return marginal;
}

namespace {

double miller_madow_offset(std::span<const std::uint64_t> counts, std::uint64_t total) {
    std::uint64_t occupied = 0;
    for (std::uint64_t c : counts) occupied += (c > 0) ? 1 : 0;
    if (occupied <= 1) return 0.0;
    return static_cast<double>(occupied - 1) /
           (2.0 * static_cast<double>(total) * std::numbers::ln2);
}

double empirical_entropy(std::span<const std::uint64_t> counts, std::uint64_t total,
                         BiasCorrection correction) {
    std::vector<double> terms;
    terms.reserve(counts.size());
    for (std::uint64_t c : counts) {
        terms.push_back(entropy_term(static_cast<double>(c) / static_cast<double>(total)));
    }
    double h = clamp_tiny_negative(sum_sorted(std::move(terms)));
    if (correction == BiasCorrection::MillerMadow) h += miller_madow_offset(counts, total);
    return h;
}

}  // namespace

Bits plugin_entropy(std::span<const std::uint64_t> counts, BiasCorrection correction) {
    const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (total == 0) throw ValidationError("plugin_entropy: empty histogram");
    return Bits{empirical_entropy(counts, total, correction)};
}

Bits plugin_mutual_information(const Histogram2D& hist, BiasCorrection correction) {
    const std::uint64_t total = hist.total();
    if (total == 0) throw ValidationError("plugin_mutual_information: empty histogram");
    if (correction == BiasCorrection::MillerMadow) {
        std::vector<std::uint64_t> joint;
        joint.reserve(hist.x_bins() * hist.y_bins());
        for (std::size_t i = 0; i < hist.x_bins(); ++i) {
            for (std::size_t j = 0; j < hist.y_bins(); ++j) joint.push_back(hist.count(i, j));
        }
        const double h_x = empirical_entropy(hist.x_marginal(), total, correction);
        const double h_y = empirical_entropy(hist.y_marginal(), total, correction);
        const double h_xy = empirical_entropy(joint, total, correction);
        return Bits{h_x + h_y - h_xy};
    }
    // Uncorrected: the MI double-sum over empirical cell frequencies.
    const std::vector<std::uint64_t> mx = hist.x_marginal();
    const std::vector<std::uint64_t> my = hist.y_marginal();
    const double n = static_cast<double>(total);
    std::vector<double> terms;
    terms.reserve(hist.x_bins() * hist.y_bins());
    for (std::size_t i = 0; i < hist.x_bins(); ++i) {
        for (std::size_t j = 0; j < hist.y_bins(); ++j) {
            const std::uint64_t c = hist.count(i, j);
            if (c == 0) continue;
            const double p = static_cast<double>(c) / n;
            const double px = static_cast<double>(mx[i]) / n;
            const double py = static_cast<double>(my[j]) / n;
            terms.push_back(p * log2_of(p / (px * py)));
        }
    }
    return Bits{clamp_tiny_negative(sum_sorted(std::move(terms)))};
}

double sample_variance(std::span<const double> values) {
    if (values.size() < 2) throw ValidationError("sample_variance: need >= 2 values");
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return ss / (n - 1.0);
}

}  // namespace shannon
