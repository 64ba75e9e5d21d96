#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <variant>

#include "shannon/bits.hpp"
#include "shannon/errors.hpp"

// Maximum-entropy continuous distributions: Gaussian (fixed variance),
// exponential (fixed mean, nonnegative support) and uniform (fixed range),
// with closed-form and quadrature differential entropies.

namespace shannon {

struct Gaussian {
    double mean;
    double variance;
    Gaussian(double mean, double variance);  // variance must be > 0
};

struct Exponential {
    double mean;                  // support is x >= 0
    explicit Exponential(double mean);  // mean must be > 0
};

struct Uniform {
    double lower;
    double upper;
    Uniform(double lower, double upper);  // upper must exceed lower
};

using MaxEntDistribution = std::variant<Gaussian, Exponential, Uniform>;

// Probability density at x; zero outside the support.
double density(const MaxEntDistribution& d, double x);

double variance(const MaxEntDistribution& d);

// Closed forms: Gaussian (1/2) log2(2 pi e v), exponential log2(mu e),
// uniform log2(range).  Differential entropy may be negative.
Bits differential_entropy(const MaxEntDistribution& d);

struct Interval {
    double lower;
    double upper;
};

// Truncated support wide enough that the mass outside is negligible
// (< 1e-20): +/- 10 sigma for the Gaussian, [0, 50 mu] for the exponential,
// the exact range for the uniform.
Interval quadrature_support(const MaxEntDistribution& d);

std::function<double(double)> density_fn(const MaxEntDistribution& d);

// integral of p log2(1/p) over the support by adaptive Simpson quadrature
// with absolute error target tol (in bits).  Validates that the density
// integrates to 1 within 1e-6 and reports the measured mass otherwise.
Bits numeric_differential_entropy(const std::function<double(double)>& density,
                                  Interval support, double tol);

// Exactly one constraint must be set; each maps to its maximum-entropy
// family (variance -> Gaussian with zero mean, mean on x >= 0 ->
// exponential, range -> uniform).
struct MaxEntConstraints {
    std::optional<double> fixed_variance;
    std::optional<double> fixed_mean_nonnegative;
    std::optional<std::pair<double, double>> fixed_range;
};

MaxEntDistribution maxent_for_constraints(const MaxEntConstraints& constraints);

}  // namespace shannon
