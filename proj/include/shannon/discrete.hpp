#pragma once

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "shannon/bits.hpp"
#include "shannon/errors.hpp"
#include "shannon/pmf.hpp"

// Entropy, conditional entropy and mutual information over discrete pmfs.
// All functions are pure and safe to call concurrently.

namespace shannon {

// Shannon information log2(1/p) of a single outcome.
inline Bits surprisal(double p) {
    if (!(p > 0.0) || p > 1.0) {
        std::ostringstream msg;
        msg << "surprisal: probability " << p << " outside (0, 1]";
        throw std::domain_error(msg.str());
    }
    return Bits{log2_of(1.0 / p)};
}

// Average surprisal sum p_i log2(1/p_i); lies in [0, log2(m)].
template <typename S>
Bits entropy(const Pmf<S>& pmf) {
    std::vector<double> terms;
    terms.reserve(pmf.size());
    for (double p : pmf.probs()) terms.push_back(entropy_term(p));
    return Bits{clamp_tiny_negative(sum_sorted(std::move(terms)))};
}

// The number m = 2^H of equiprobable values a variable with entropy H could
// distinguish.
inline double equivalent_equiprobable_count(Bits h) {
    if (h.value() < 0.0) {
        std::ostringstream msg;
        msg << "equivalent_equiprobable_count: entropy " << h.value() << " is negative";
        throw std::domain_error(msg.str());
    }
    return std::exp2(h.value());
}

template <typename X, typename Y>
Bits joint_entropy(const JointPmf<X, Y>& j) {
    std::vector<double> terms;
    terms.reserve(j.flat().size());
    for (double p : j.flat()) terms.push_back(entropy_term(p));
    return Bits{clamp_tiny_negative(sum_sorted(std::move(terms)))};
}

namespace detail {

// Row sums, inner loop over j ascending.
template <typename X, typename Y>
std::vector<double> marginal_x_probs(const JointPmf<X, Y>& j) {
    std::vector<double> px(j.nx(), 0.0);
    for (std::size_t i = 0; i < j.nx(); ++i) {
        for (std::size_t jj = 0; jj < j.ny(); ++jj) px[i] += j.at(i, jj);
    }
    return px;
}

// Column sums, inner loop over i ascending (the exact mirror of
// marginal_x_probs, so transposing a joint swaps the marginals bit for bit).
template <typename X, typename Y>
std::vector<double> marginal_y_probs(const JointPmf<X, Y>& j) {
    std::vector<double> py(j.ny(), 0.0);
    for (std::size_t jj = 0; jj < j.ny(); ++jj) {
        for (std::size_t i = 0; i < j.nx(); ++i) py[jj] += j.at(i, jj);
    }
    return py;
}

}  // namespace detail

template <typename X, typename Y>
Pmf<X> marginal_x(const JointPmf<X, Y>& j) {
    return Pmf<X>(j.x_symbols(), detail::marginal_x_probs(j));
}

template <typename X, typename Y>
Pmf<Y> marginal_y(const JointPmf<X, Y>& j) {
    return Pmf<Y>(j.y_symbols(), detail::marginal_y_probs(j));
}

enum class Axis { X, Y };

template <typename S>
Pmf<S> marginalize(const JointPmf<S, S>& j, Axis axis) {
    switch (axis) {
        case Axis::X: return marginal_x(j);
        case Axis::Y: return marginal_y(j);
    }
    throw ValidationError("marginalize: invalid axis selector");
}

// H(y|x) = H(x,y) - H(x); equals the double-sum form
// sum p(x,y) log2(1/p(y|x)) within roundoff.
template <typename X, typename Y>
Bits conditional_entropy_y_given_x(const JointPmf<X, Y>& j) {
    Bits h = joint_entropy(j) - entropy(marginal_x(j));
    return Bits{clamp_tiny_negative(h.value())};
}

template <typename X, typename Y>
Bits conditional_entropy_x_given_y(const JointPmf<X, Y>& j) {
    Bits h = joint_entropy(j) - entropy(marginal_y(j));
    return Bits{clamp_tiny_negative(h.value())};
}

// Double-sum form sum p(x,y) log2( p(x,y) / (p(x) p(y)) ).  Agrees with the
// entropy-difference identities within roundoff and is exactly symmetric
// under transposition.
template <typename X, typename Y>
Bits mutual_information(const JointPmf<X, Y>& j) {
    const std::vector<double> px = detail::marginal_x_probs(j);
    const std::vector<double> py = detail::marginal_y_probs(j);
    std::vector<double> terms;
    terms.reserve(j.flat().size());
    for (std::size_t i = 0; i < j.nx(); ++i) {
        for (std::size_t jj = 0; jj < j.ny(); ++jj) {
            const double p = j.at(i, jj);
            if (p > 0.0) terms.push_back(p * log2_of(p / (px[i] * py[jj])));
        }
    }
    return Bits{clamp_tiny_negative(sum_sorted(std::move(terms)))};
}

// Entropy of a {p, 1-p} coin sampled at n_points evenly spaced biases in
// [0, 1]; 0 bits at the endpoints, 1 bit at p = 0.5.
inline std::vector<std::pair<double, Bits>> coin_entropy_curve(std::size_t n_points) {
    if (n_points < 2) {
        throw ValidationError("coin_entropy_curve: need at least 2 points");
    }
    std::vector<std::pair<double, Bits>> curve;
    curve.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double bias = static_cast<double>(i) / static_cast<double>(n_points - 1);
        const double h = clamp_tiny_negative(entropy_term(bias) + entropy_term(1.0 - bias));
        curve.emplace_back(bias, Bits{h});
    }
    return curve;
}

}  // namespace shannon
