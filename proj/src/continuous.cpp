#include "shannon/continuous.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace shannon {

namespace {

double require_positive(double v, const char* what) {
    if (!(v > 0.0)) {
        std::ostringstream msg;
        msg << what << " must be positive, got " << v;
        throw std::domain_error(msg.str());
    }
    return v;
}

}  // namespace

Gaussian::Gaussian(double mean, double variance) : mean(mean), variance(variance) {
    require_positive(variance, "Gaussian variance");
}

Exponential::Exponential(double mean) : mean(mean) {
    require_positive(mean, "Exponential mean");
}

Uniform::Uniform(double lower, double upper) : lower(lower), upper(upper) {
    if (!(upper > lower)) {
        std::ostringstream msg;
        msg << "Uniform range [" << lower << ", " << upper << "] is empty";
        throw std::domain_error(msg.str());
    }
}

double density(const MaxEntDistribution& d, double x) {
    return std::visit(
        [x](const auto& dist) -> double {
            using T = std::decay_t<decltype(dist)>;
            if constexpr (std::is_same_v<T, Gaussian>) {
                const double dev = dist.mean - x;
                return std::exp(-dev * dev / (2.0 * dist.variance)) /
                       std::sqrt(2.0 * std::numbers::pi * dist.variance);
            } else if constexpr (std::is_same_v<T, Exponential>) {
                if (x < 0.0) return 0.0;
                return std::exp(-x / dist.mean) / dist.mean;
            } else {
                if (x < dist.lower || x > dist.upper) return 0.0;
                return 1.0 / (dist.upper - dist.lower);
            }
        },
        d);
}

double variance(const MaxEntDistribution& d) {
    return std::visit(
        [](const auto& dist) -> double {
            using T = std::decay_t<decltype(dist)>;
            if constexpr (std::is_same_v<T, Gaussian>) {
                return dist.variance;
            } else if constexpr (std::is_same_v<T, Exponential>) {
                return dist.mean * dist.mean;
            } else {
                const double range = dist.upper - dist.lower;
                return range * range / 12.0;
            }
        },
        d);
}

Bits differential_entropy(const MaxEntDistribution& d) {
    return std::visit(
        [](const auto& dist) -> Bits {
            using T = std::decay_t<decltype(dist)>;
            if constexpr (std::is_same_v<T, Gaussian>) {
                return Bits{0.5 * log2_of(2.0 * std::numbers::pi * std::numbers::e * dist.variance)};
            } else if constexpr (std::is_same_v<T, Exponential>) {
                return Bits{log2_of(dist.mean * std::numbers::e)};
            } else {
                return Bits{log2_of(dist.upper - dist.lower)};
            }
        },
        d);
}

Interval quadrature_support(const MaxEntDistribution& d) {
    return std::visit(
        [](const auto& dist) -> Interval {
            using T = std::decay_t<decltype(dist)>;
            if constexpr (std::is_same_v<T, Gaussian>) {
                const double sigma = std::sqrt(dist.variance);
                return {dist.mean - 10.0 * sigma, dist.mean + 10.0 * sigma};
            } else if constexpr (std::is_same_v<T, Exponential>) {
                return {0.0, 50.0 * dist.mean};
            } else {
                return {dist.lower, dist.upper};
            }
        },
        d);
}

std::function<double(double)> density_fn(const MaxEntDistribution& d) {
    return [d](double x) { return density(d, x); };
}

namespace {

struct SimpsonEstimate {
    double value;
    double midpoint;
};

double simpson(const std::function<double(double)>& f, double a, double fa, double b,
               double fb, double* fm_out) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    *fm_out = fm;
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// Classic adaptive Simpson with the |S_half - S| / 15 error estimate.
double adaptive_simpson(const std::function<double(double)>& f, double a, double fa,
                        double m, double fm, double b, double fb, double whole,
                        double tol, int depth) {
    double flm = 0.0;
    double frm = 0.0;
    const double left = simpson(f, a, fa, m, fm, &flm);
    const double right = simpson(f, m, fm, b, fb, &frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, fa, 0.5 * (a + m), flm, m, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, fm, 0.5 * (m + b), frm, b, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, Interval support, double tol) {
    const double a = support.lower;
    const double b = support.upper;
    if (!(b > a)) throw ValidationError("quadrature: empty support interval");
    // Seed with a few panels so narrow features are not stepped over.
    constexpr int kPanels = 16;
    const double h = (b - a) / kPanels;
    double total = 0.0;
    for (int i = 0; i < kPanels; ++i) {
        const double lo = a + i * h;
        const double hi = (i == kPanels - 1) ? b : lo + h;
        const double flo = f(lo);
        const double fhi = f(hi);
        double fm = 0.0;
        const double whole = simpson(f, lo, flo, hi, fhi, &fm);
        total += adaptive_simpson(f, lo, flo, 0.5 * (lo + hi), fm, hi, fhi, whole,
                                  tol / kPanels, 48);
    }
    return total;
}

}  // namespace

Bits numeric_differential_entropy(const std::function<double(double)>& density,
                                  Interval support, double tol) {
    if (!(tol > 0.0)) throw ValidationError("numeric_differential_entropy: tol must be > 0");
    const double mass = integrate(density, support, 1e-10);
    if (std::abs(mass - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "numeric_differential_entropy: density mass over support is " << mass
            << ", expected 1 within 1e-6";
        throw ValidationError(msg.str());
    }
    const auto integrand = [&density](double x) { return entropy_term(density(x)); };
    return Bits{integrate(integrand, support, tol)};
}

MaxEntDistribution maxent_for_constraints(const MaxEntConstraints& constraints) {
    const int set = (constraints.fixed_variance ? 1 : 0) +
                    (constraints.fixed_mean_nonnegative ? 1 : 0) +
                    (constraints.fixed_range ? 1 : 0);
    if (set != 1) {
        throw ValidationError(
            "maxent_for_constraints: constraint set not covered; expected exactly one of "
            "fixed-variance, fixed-mean on x >= 0, fixed-range");
    }
    if (constraints.fixed_variance) {
        return Gaussian(0.0, *constraints.fixed_variance);
    }
    if (constraints.fixed_mean_nonnegative) {
        return Exponential(*constraints.fixed_mean_nonnegative);
    }
    const auto [lo, hi] = *constraints.fixed_range;
    return Uniform(lo, hi);
}

}  // namespace shannon
