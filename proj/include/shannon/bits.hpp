#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <numeric>
#include <vector>

namespace shannon {

// Every information measure in this library is in base 2; this is the only
// logarithm entry point the measures go through.
inline double log2_of(double x) { return std::log2(x); }

// Amount of information in bits (bits/s when the caller's context says so).
// Distinct from a binary digit: a codeword length is a plain number, a
// measured uncertainty is a Bits.
class Bits {
public:
    Bits() = default;
    explicit constexpr Bits(double value) : value_(value) {}

    constexpr double value() const noexcept { return value_; }

    friend constexpr Bits operator+(Bits a, Bits b) { return Bits{a.value_ + b.value_}; }
    friend constexpr Bits operator-(Bits a, Bits b) { return Bits{a.value_ - b.value_}; }
    friend constexpr auto operator<=>(Bits, Bits) = default;

private:
    double value_ = 0.0;
};

// One entropy contribution p * log2(1/p), with the continuity convention
// 0 * log2(1/0) = 0.
inline double entropy_term(double p) {
    return p > 0.0 ? p * log2_of(1.0 / p) : 0.0;
}

// Sums contributions in ascending order.  The result then depends only on
// the multiset of terms, so entropies are invariant under symbol
// permutation and mutual information is invariant under transposition,
// bit for bit.
inline double sum_sorted(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    return std::accumulate(terms.begin(), terms.end(), 0.0);
}

// Entropies and mutual informations are mathematically >= 0; roundoff may
// leave a tiny negative residue, which is clamped so invariants stay
// assertable.  Anything below -1e-12 is a real error and passes through.
inline double clamp_tiny_negative(double x) {
    return (x < 0.0 && x > -1e-12) ? 0.0 : x;
}

}  // namespace shannon
