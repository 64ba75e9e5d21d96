#include "shannon/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace shannon {

namespace {

// Two sums are the same output level when they agree exactly (always the
// case for integer-valued levels) or within this absolute slack.
constexpr double kLevelMergeTol = 1e-12;

struct FanOutResult {
    JointPmf<double, double> joint;
    bool collision;
};

FanOutResult fan_out_impl(const DiscreteAdditiveChannel& ch, const LevelPmf& input_pmf) {
    if (input_pmf.symbols() != ch.input_values) {
        throw ValidationError("fan_out: input pmf symbols do not match channel input values");
    }
    struct Sum {
        double value;
        std::size_t input_index;
        double prob;
    };
    std::vector<Sum> sums;
    sums.reserve(input_pmf.size() * ch.noise.size());
    for (std::size_t i = 0; i < input_pmf.size(); ++i) {
        for (std::size_t k = 0; k < ch.noise.size(); ++k) {
            sums.push_back({ch.input_values[i] + ch.noise.symbol(k),
                            i, input_pmf.prob(i) * ch.noise.prob(k)});
        }
    }
    std::sort(sums.begin(), sums.end(),
              [](const Sum& a, const Sum& b) { return a.value < b.value; });

    std::vector<double> outputs;
    std::vector<std::size_t> cluster_of(sums.size());
    bool collision = false;
    for (std::size_t s = 0; s < sums.size(); ++s) {
        if (s == 0 || sums[s].value - outputs.back() > kLevelMergeTol) {
            outputs.push_back(sums[s].value);
        } else {
            collision = true;
        }
        cluster_of[s] = outputs.size() - 1;
    }

    std::vector<std::vector<double>> grid(input_pmf.size(),
                                          std::vector<double>(outputs.size(), 0.0));
    for (std::size_t s = 0; s < sums.size(); ++s) {
        grid[sums[s].input_index][cluster_of[s]] += sums[s].prob;
    }
    return {JointPmf<double, double>(ch.input_values, outputs, grid), collision};
}

}  // namespace

DiscreteAdditiveChannel::DiscreteAdditiveChannel(std::vector<double> input_values_in,
                                                 LevelPmf noise_in)
    : input_values(std::move(input_values_in)), noise(std::move(noise_in)) {
    if (input_values.empty()) {
        throw ValidationError("additive channel: no input values");
    }
    detail::require_unique(input_values, "additive channel inputs");
}

JointPmf<double, double> fan_out(const DiscreteAdditiveChannel& ch, const LevelPmf& input_pmf) {
    return fan_out_impl(ch, input_pmf).joint;
}

OutputEntropyDecomposition output_entropy_decomposition(const DiscreteAdditiveChannel& ch,
                                                        const LevelPmf& input_pmf) {
    FanOutResult fanned = fan_out_impl(ch, input_pmf);
    return {entropy(input_pmf), entropy(ch.noise), entropy(marginal_y(fanned.joint)),
            fanned.collision};
}

Bits mutual_information_of_channel(const DiscreteAdditiveChannel& ch,
                                   const LevelPmf& input_pmf) {
    return mutual_information(fan_out(ch, input_pmf));
}

TransitionMatrix::TransitionMatrix(std::vector<std::string> inputs,
                                   std::vector<std::string> outputs,
                                   const std::vector<std::vector<double>>& rows)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
    if (inputs_.empty() || outputs_.empty()) {
        throw ValidationError("transition matrix: empty input or output alphabet");
    }
    if (rows.size() != inputs_.size()) {
        throw ValidationError("transition matrix: row count does not match inputs");
    }
    detail::require_unique(inputs_, "transition matrix inputs");
    detail::require_unique(outputs_, "transition matrix outputs");
    rows_.reserve(inputs_.size() * outputs_.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != outputs_.size()) {
            std::ostringstream msg;
            msg << "transition matrix: row " << i << " has " << rows[i].size()
                << " entries, expected " << outputs_.size();
            throw ValidationError(msg.str());
        }
        std::vector<double> row = rows[i];
        detail::require_probs_nonnegative(row, "transition matrix row");
        detail::normalize_or_throw(row, "transition matrix row");
        rows_.insert(rows_.end(), row.begin(), row.end());
    }
}

DmcCapacityResult dmc_capacity(const TransitionMatrix& t, double tol, std::size_t max_iters) {
    if (!(tol > 0.0)) throw ValidationError("dmc_capacity: tol must be > 0");
    const std::size_t m = t.input_count();
    const std::size_t k = t.output_count();
    std::vector<double> p(m, 1.0 / static_cast<double>(m));
    std::vector<double> q(k);
    std::vector<double> row_kl(m);
    double gap = std::numeric_limits<double>::infinity();

    for (std::size_t iter = 1; iter <= max_iters; ++iter) {
        std::fill(q.begin(), q.end(), 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < k; ++j) q[j] += p[i] * t.at(i, j);
        }
        // KL divergence of each row from the output marginal, in bits.
        for (std::size_t i = 0; i < m; ++i) {
            double d = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
                const double pj = t.at(i, j);
                if (pj > 0.0 && q[j] > 0.0) d += pj * log2_of(pj / q[j]);
            }
            row_kl[i] = d;
        }
        double achieved = 0.0;  // I(p) = sum_i p_i KL(row_i || q)
        double upper = 0.0;     // max_i KL(row_i || q) >= C
        for (std::size_t i = 0; i < m; ++i) {
            achieved += p[i] * row_kl[i];
            upper = std::max(upper, row_kl[i]);
        }
        gap = upper - achieved;
        if (gap <= tol) {
            return {Bits{clamp_tiny_negative(achieved)},
                    DiscretePmf(t.inputs(), p), iter, gap};
        }
        // p_i <- p_i 2^{KL_i} / Z
        double z = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            p[i] *= std::exp2(row_kl[i]);
            z += p[i];
        }
        for (double& pi : p) pi /= z;
    }
    std::ostringstream msg;
    msg << "dmc_capacity: no convergence after " << max_iters << " iterations, gap " << gap;
    throw ConvergenceError(msg.str(), gap);
}

GaussianChannelSpec::GaussianChannelSpec(double signal_power_in, double noise_power_in,
                                         std::optional<double> bandwidth_in)
    : signal_power(signal_power_in), noise_power(noise_power_in), bandwidth_hz(bandwidth_in) {
    if (!(signal_power >= 0.0)) {
        throw std::domain_error("Gaussian channel: signal power must be >= 0");
    }
    if (!(noise_power > 0.0)) {
        throw std::domain_error("Gaussian channel: noise power must be > 0");
    }
    if (bandwidth_hz && !(*bandwidth_hz > 0.0)) {
        throw std::domain_error("Gaussian channel: bandwidth must be > 0");
    }
}

Bits gaussian_mutual_information(double v_x, double v_noise) {
    if (!(v_x >= 0.0)) throw std::domain_error("gaussian MI: signal variance must be >= 0");
    if (!(v_noise > 0.0)) throw std::domain_error("gaussian MI: noise variance must be > 0");
    return Bits{0.5 * log2_of(1.0 + v_x / v_noise)};
}

Bits gaussian_capacity(const GaussianChannelSpec& spec) {
    const Bits per_usage = gaussian_mutual_information(spec.signal_power, spec.noise_power);
    if (!spec.bandwidth_hz) return per_usage;
    // Nyquist rate: 2W usages per second.
    return Bits{2.0 * *spec.bandwidth_hz * per_usage.value()};
}

double detection_probability(double signal_power, double noise_power) {
    if (!(signal_power >= 0.0)) {
        throw std::domain_error("detection_probability: signal power must be >= 0");
    }
    if (!(noise_power > 0.0)) {
        throw std::domain_error("detection_probability: noise power must be > 0");
    }
    return 0.5 * log2_of(1.0 + std::erf(std::sqrt(signal_power / (8.0 * noise_power))));
}

}  // namespace shannon
