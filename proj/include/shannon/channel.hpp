#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shannon/bits.hpp"
#include "shannon/discrete.hpp"
#include "shannon/errors.hpp"
#include "shannon/pmf.hpp"

// Additive channels y = x + eta, discrete memoryless channels, and capacity:
// noiseless (max H), discrete-noisy (alternating-maximization solver), and
// the Gaussian closed form (1/2) log2(1 + S/N).

namespace shannon {

// Additive channel over discrete real-valued levels; the noise level is
// drawn independently of the input.
struct DiscreteAdditiveChannel {
    std::vector<double> input_values;  // unique
    LevelPmf noise;                    // pmf over unique noise levels

    DiscreteAdditiveChannel(std::vector<double> input_values, LevelPmf noise);
};

// Joint pmf over (x, y = x + eta).  Output levels whose sums coincide
// (exactly for integer-valued levels, within 1e-12 otherwise) are merged
// into one output symbol.
JointPmf<double, double> fan_out(const DiscreteAdditiveChannel& ch,
                                 const LevelPmf& input_pmf);

struct OutputEntropyDecomposition {
    Bits input_entropy;   // H(x)
    Bits noise_entropy;   // H(eta)
    Bits output_entropy;  // H(y)
    bool collision;       // true iff two (x, eta) pairs produced the same sum
};

// H(y) = H(x) + H(eta) exactly when no sums collide; merging collapses
// output entropy below that sum and sets the flag.
OutputEntropyDecomposition output_entropy_decomposition(const DiscreteAdditiveChannel& ch,
                                                        const LevelPmf& input_pmf);

// I(x,y) of the fan-out joint; equals H(y) - H(eta) in the collision-free
// case.
Bits mutual_information_of_channel(const DiscreteAdditiveChannel& ch,
                                   const LevelPmf& input_pmf);

// Discrete memoryless channel given by rows p(y_j | x_i); rows are
// validated to sum to 1 within 1e-9 and renormalized.
class TransitionMatrix {
public:
    TransitionMatrix(std::vector<std::string> inputs, std::vector<std::string> outputs,
                     const std::vector<std::vector<double>>& rows);

    std::size_t input_count() const noexcept { return inputs_.size(); }
    std::size_t output_count() const noexcept { return outputs_.size(); }
    double at(std::size_t i, std::size_t j) const { return rows_[i * outputs_.size() + j]; }
    const std::vector<std::string>& inputs() const noexcept { return inputs_; }
    const std::vector<std::string>& outputs() const noexcept { return outputs_; }

private:
    std::vector<std::string> inputs_;
    std::vector<std::string> outputs_;
    std::vector<double> rows_;  // row-major
};

struct DmcCapacityResult {
    Bits capacity;
    DiscretePmf optimal_input;
    std::size_t iterations;
    double gap;  // upper-bound minus achieved mutual information at exit
};

// C = max over p(x) of I(x,y) by alternating maximization from the uniform
// input.  Convergence is declared when the duality gap (max over rows of
// the KL divergence to the output marginal, minus the achieved mutual
// information) drops to tol; throws ConvergenceError with the last gap
// otherwise.  Deterministic given inputs.
DmcCapacityResult dmc_capacity(const TransitionMatrix& t, double tol = 1e-9,
                               std::size_t max_iters = 10000);

// Additive Gaussian channel.  Without a bandwidth the capacity is per
// usage; with bandwidth W it is per second, transmitted at the Nyquist
// rate of 2W usages/s.
struct GaussianChannelSpec {
    double signal_power;                   // S = v_x, J/s
    double noise_power;                    // N = v_eta, J/s
    std::optional<double> bandwidth_hz;    // W

    GaussianChannelSpec(double signal_power, double noise_power,
                        std::optional<double> bandwidth_hz = std::nullopt);
};

// I(x,y) = (1/2) log2(1 + v_x / v_noise) for Gaussian input and noise.
Bits gaussian_mutual_information(double v_x, double v_noise);

// (1/2) log2(1 + S/N) bits per usage, or W log2(1 + S/N) bits/s with a
// bandwidth (computed as 2W times the per-usage value).
Bits gaussian_capacity(const GaussianChannelSpec& spec);

// P = (1/2) log2(1 + erf(sqrt(S/(8N)))).  Note the base-2 logarithm: the
// value is bounded above by 1/2 despite being labeled a probability.  The
// formula is kept in exactly this form.
double detection_probability(double signal_power, double noise_power);

// True iff I(x,y) <= H(x) + 1e-10: the output of any channel cannot carry
// more information about the input than the input itself holds.
template <typename X, typename Y>
bool data_processing_check(const JointPmf<X, Y>& joint, Bits input_entropy) {
    return mutual_information(joint).value() <= input_entropy.value() + 1e-10;
}

}  // namespace shannon
