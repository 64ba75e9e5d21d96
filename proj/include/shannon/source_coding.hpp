#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "shannon/errors.hpp"
#include "shannon/pmf.hpp"

// Source coding: fixed-length (naive) accounting, optimal prefix codes by
// the lowest-two-probability merge construction, block coding over product
// sources, and a streaming encode/decode round trip.

namespace shannon {

struct NaiveCodeLength {
    double binary_digits;       // log2(m), the fractional accounting
    std::size_t fixed_digits;   // ceil(log2 m), a realizable fixed-length code
};

NaiveCodeLength naive_code_length(std::size_t symbol_count);

template <typename S>
NaiveCodeLength naive_code_length(const Pmf<S>& pmf) {
    return naive_code_length(pmf.size());
}

// Symbol -> binary-digit string map, validated prefix-free with Kraft sum
// <= 1 + 1e-12.
class PrefixCode {
public:
    explicit PrefixCode(std::map<std::string, std::string> codewords);

    const std::map<std::string, std::string>& codewords() const noexcept { return codewords_; }
    double kraft_sum() const;

    // sum p(s) * len(codeword(s)); every pmf symbol must be in the code.
    double average_length(const DiscretePmf& pmf) const;

    std::string encode(std::span<const std::string> symbols) const;
    std::vector<std::string> decode(const std::string& digits) const;

private:
    std::map<std::string, std::string> codewords_;
    std::map<std::string, std::string> by_codeword_;
    std::size_t max_codeword_length_ = 0;
};

// Optimal codeword lengths by iterative merge of the two lowest
// probabilities; ties broken by (probability, first-symbol-index) so the
// construction is deterministic.  A single-symbol source gets length 1.
std::vector<std::size_t> optimal_code_lengths(std::span<const double> probs);

// The merge construction with codewords assigned 0 to the lower branch of
// each merge.  Average length L satisfies H <= L < H + 1.
PrefixCode build_optimal_code(const DiscretePmf& pmf);

// A discrete source together with the number of symbols coded jointly as
// one super-symbol.
struct SourceSpec {
    DiscretePmf pmf;
    std::size_t block_length = 1;
};

// Builds the optimal code over the block_length-fold product pmf (iid
// symbols) and returns its average length per source symbol.  Bounded by
// block_length * log2(m) <= 24; beyond that throws ResourceError.
double block_code_rate(const SourceSpec& src);

// The block_length-fold product pmf with labels joined by '|'.
DiscretePmf product_pmf(const DiscretePmf& pmf, std::size_t block_length);

}  // namespace shannon
