#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shannon/errors.hpp"

namespace shannon {

inline constexpr double kPmfNormalizationTol = 1e-9;

namespace detail {

template <typename Symbol>
void require_unique(const std::vector<Symbol>& symbols, const char* what) {
    std::set<Symbol> seen(symbols.begin(), symbols.end());
    if (seen.size() != symbols.size()) {
        throw ValidationError(std::string(what) + ": symbols are not unique");
    }
}

inline void require_probs_nonnegative(const std::vector<double>& probs, const char* what) {
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (!(probs[i] >= 0.0)) {
            std::ostringstream msg;
            msg << what << ": probs[" << i << "] = " << probs[i] << " is negative";
            throw ValidationError(msg.str());
        }
    }
}

// Checks the total is within kPmfNormalizationTol of 1, then renormalizes
// exactly so downstream identities hold tightly.  The total is accumulated
// in sorted order, so renormalization commutes with symbol permutation and
// transposition bit for bit.
inline void normalize_or_throw(std::vector<double>& probs, const char* what) {
    std::vector<double> ordered(probs);
    std::sort(ordered.begin(), ordered.end());
    double total = 0.0;
    for (double p : ordered) total += p;
    if (std::abs(total - 1.0) > kPmfNormalizationTol) {
        std::ostringstream msg;
        msg << what << ": probabilities sum to " << total << ", expected 1";
        throw ValidationError(msg.str());
    }
    for (double& p : probs) p /= total;
}

}  // namespace detail

// A normalized probability mass function over labeled symbols.  Immutable
// after construction; construction validates and renormalizes.
template <typename Symbol>
class Pmf {
public:
    Pmf(std::vector<Symbol> symbols, std::vector<double> probs)
        : symbols_(std::move(symbols)), probs_(std::move(probs)) {
        if (symbols_.empty() || symbols_.size() != probs_.size()) {
            throw ValidationError("pmf: symbols and probs must have equal length >= 1");
        }
        detail::require_unique(symbols_, "pmf");
        detail::require_probs_nonnegative(probs_, "pmf");
        detail::normalize_or_throw(probs_, "pmf");
    }

    static Pmf uniform(std::vector<Symbol> symbols) {
        std::vector<double> probs(symbols.size(), 1.0 / static_cast<double>(symbols.size()));
        return Pmf(std::move(symbols), std::move(probs));
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    const std::vector<double>& probs() const noexcept { return probs_; }
    const Symbol& symbol(std::size_t i) const { return symbols_[i]; }
    double prob(std::size_t i) const { return probs_[i]; }

private:
    std::vector<Symbol> symbols_;
    std::vector<double> probs_;
};

using DiscretePmf = Pmf<std::string>;
using LevelPmf = Pmf<double>;  // pmf over real-valued levels (channel inputs, noise)

// A 2-D pmf over symbol pairs; cell (i, j) holds p(x_i, y_j).  Row-major
// flat storage.
template <typename XSymbol, typename YSymbol>
class JointPmf {
public:
    JointPmf(std::vector<XSymbol> x_symbols, std::vector<YSymbol> y_symbols,
             const std::vector<std::vector<double>>& grid)
        : x_symbols_(std::move(x_symbols)), y_symbols_(std::move(y_symbols)) {
        if (x_symbols_.empty() || y_symbols_.empty()) {
            throw ValidationError("joint pmf: empty symbol axis");
        }
        if (grid.size() != x_symbols_.size()) {
            throw ValidationError("joint pmf: probs row count does not match x_symbols");
        }
        detail::require_unique(x_symbols_, "joint pmf (x axis)");
        detail::require_unique(y_symbols_, "joint pmf (y axis)");
        probs_.reserve(x_symbols_.size() * y_symbols_.size());
        for (const auto& row : grid) {
            if (row.size() != y_symbols_.size()) {
                throw ValidationError("joint pmf: probs grid is not rectangular");
            }
            probs_.insert(probs_.end(), row.begin(), row.end());
        }
        detail::require_probs_nonnegative(probs_, "joint pmf");
        detail::normalize_or_throw(probs_, "joint pmf");
    }

    // The x/y marginals of a product joint are the inputs themselves.
    static JointPmf product(const Pmf<XSymbol>& px, const Pmf<YSymbol>& py) {
        std::vector<std::vector<double>> grid(px.size(), std::vector<double>(py.size()));
        for (std::size_t i = 0; i < px.size(); ++i) {
            for (std::size_t j = 0; j < py.size(); ++j) {
                grid[i][j] = px.prob(i) * py.prob(j);
            }
        }
        return JointPmf(px.symbols(), py.symbols(), grid);
    }

    // Copies the already-normalized grid without renormalizing, so the
    // transposed cells are bit-identical to the originals.
    JointPmf<YSymbol, XSymbol> transposed() const {
        JointPmf<YSymbol, XSymbol> t(raw_tag{}, y_symbols_, x_symbols_);
        t.probs_.resize(probs_.size());
        for (std::size_t i = 0; i < nx(); ++i) {
            for (std::size_t j = 0; j < ny(); ++j) {
                t.probs_[j * nx() + i] = at(i, j);
            }
        }
        return t;
    }

    std::size_t nx() const noexcept { return x_symbols_.size(); }
    std::size_t ny() const noexcept { return y_symbols_.size(); }
    double at(std::size_t i, std::size_t j) const { return probs_[i * ny() + j]; }
    const std::vector<XSymbol>& x_symbols() const noexcept { return x_symbols_; }
    const std::vector<YSymbol>& y_symbols() const noexcept { return y_symbols_; }
    const std::vector<double>& flat() const noexcept { return probs_; }

private:
    template <typename A, typename B>
    friend class JointPmf;

    struct raw_tag {};
    JointPmf(raw_tag, std::vector<XSymbol> xs, std::vector<YSymbol> ys)
        : x_symbols_(std::move(xs)), y_symbols_(std::move(ys)) {}

    std::vector<XSymbol> x_symbols_;
    std::vector<YSymbol> y_symbols_;
    std::vector<double> probs_;  // row-major, nx * ny
};

using DiscreteJointPmf = JointPmf<std::string, std::string>;

}  // namespace shannon
