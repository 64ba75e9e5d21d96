#include "shannon/source_coding.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "shannon/bits.hpp"

namespace shannon {

NaiveCodeLength naive_code_length(std::size_t symbol_count) {
    if (symbol_count == 0) throw ValidationError("naive_code_length: empty alphabet");
    const double digits = log2_of(static_cast<double>(symbol_count));
    return {digits, static_cast<std::size_t>(std::ceil(digits - 1e-12))};
}

PrefixCode::PrefixCode(std::map<std::string, std::string> codewords)
    : codewords_(std::move(codewords)) {
    if (codewords_.empty()) throw ValidationError("prefix code: no codewords");
    double kraft = 0.0;
    std::vector<const std::string*> words;
    words.reserve(codewords_.size());
    for (const auto& [symbol, word] : codewords_) {
        if (word.empty()) {
            throw ValidationError("prefix code: empty codeword for symbol '" + symbol + "'");
        }
        if (word.find_first_not_of("01") != std::string::npos) {
            throw ValidationError("prefix code: codeword '" + word + "' is not binary");
        }
        if (!by_codeword_.emplace(word, symbol).second) {
            throw ValidationError("prefix code: duplicate codeword '" + word + "'");
        }
        kraft += std::exp2(-static_cast<double>(word.size()));
        max_codeword_length_ = std::max(max_codeword_length_, word.size());
        words.push_back(&word);
    }
    if (kraft > 1.0 + 1e-12) {
        std::ostringstream msg;
        msg << "prefix code: Kraft sum " << kraft << " exceeds 1";
        throw ValidationError(msg.str());
    }
    // In lexicographic order a prefix sorts immediately before its first
    // extension, so adjacent pairs are enough.
    std::sort(words.begin(), words.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        if (words[i + 1]->starts_with(*words[i])) {
            throw ValidationError("prefix code: '" + *words[i] + "' is a prefix of '" +
                                  *words[i + 1] + "'");
        }
    }
}

double PrefixCode::kraft_sum() const {
    double kraft = 0.0;
    for (const auto& [symbol, word] : codewords_) {
        kraft += std::exp2(-static_cast<double>(word.size()));
    }
    return kraft;
}

double PrefixCode::average_length(const DiscretePmf& pmf) const {
    double total = 0.0;
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        const auto it = codewords_.find(pmf.symbol(i));
        if (it == codewords_.end()) {
            throw ValidationError("average_length: symbol '" + pmf.symbol(i) +
                                  "' has no codeword");
        }
        total += pmf.prob(i) * static_cast<double>(it->second.size());
    }
    return total;
}

std::string PrefixCode::encode(std::span<const std::string> symbols) const {
    std::string out;
    for (const std::string& symbol : symbols) {
        const auto it = codewords_.find(symbol);
        if (it == codewords_.end()) {
            throw ValidationError("encode: unknown symbol '" + symbol + "'");
        }
        out += it->second;
    }
    return out;
}

std::vector<std::string> PrefixCode::decode(const std::string& digits) const {
    std::vector<std::string> out;
    std::string current;
    for (char c : digits) {
        if (c != '0' && c != '1') {
            throw ValidationError(std::string("decode: invalid digit '") + c + "'");
        }
        current += c;
        if (current.size() > max_codeword_length_) {
            throw ValidationError("decode: unparseable digit group '" + current + "'");
        }
        const auto it = by_codeword_.find(current);
        if (it != by_codeword_.end()) {
            out.push_back(it->second);
            current.clear();
        }
    }
    if (!current.empty()) {
        throw ValidationError("decode: dangling suffix '" + current + "'");
    }
    return out;
}

namespace {

struct MergeNode {
    double prob;
    std::size_t first_index;  // lowest original symbol index in the subtree
    int left = -1;            // '0' branch
    int right = -1;           // '1' branch
};

// Ascending (probability, first-symbol-index); the queue pops the lexicographic
// minimum, which pins the merge order.
struct NodeOrder {
    const std::vector<MergeNode>* nodes;
    bool operator()(int a, int b) const {
        const MergeNode& na = (*nodes)[a];
        const MergeNode& nb = (*nodes)[b];
        if (na.prob != nb.prob) return na.prob > nb.prob;
        return na.first_index > nb.first_index;
    }
};

// Builds the merge tree and returns the root index; nodes[0..m) are leaves.
int build_merge_tree(std::span<const double> probs, std::vector<MergeNode>& nodes) {
    const std::size_t m = probs.size();
    nodes.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) nodes.push_back({probs[i], i});
    std::priority_queue<int, std::vector<int>, NodeOrder> queue{NodeOrder{&nodes}};
    for (std::size_t i = 0; i < m; ++i) queue.push(static_cast<int>(i));
    while (queue.size() > 1) {
        const int a = queue.top();
        queue.pop();
        const int b = queue.top();
        queue.pop();
        nodes.push_back({nodes[a].prob + nodes[b].prob,
                         std::min(nodes[a].first_index, nodes[b].first_index), a, b});
        queue.push(static_cast<int>(nodes.size() - 1));
    }
    return queue.top();
}

void collect_depths(const std::vector<MergeNode>& nodes, int node, std::size_t depth,
                    std::vector<std::size_t>& lengths) {
    if (nodes[node].left < 0) {
        lengths[nodes[node].first_index] = depth;
        return;
    }
    collect_depths(nodes, nodes[node].left, depth + 1, lengths);
    collect_depths(nodes, nodes[node].right, depth + 1, lengths);
}

void collect_codewords(const std::vector<MergeNode>& nodes, int node, std::string& word,
                       std::vector<std::string>& codewords) {
    if (nodes[node].left < 0) {
        codewords[nodes[node].first_index] = word;
        return;
    }
    word.push_back('0');
    collect_codewords(nodes, nodes[node].left, word, codewords);
    word.back() = '1';
    collect_codewords(nodes, nodes[node].right, word, codewords);
    word.pop_back();
}

}  // namespace

std::vector<std::size_t> optimal_code_lengths(std::span<const double> probs) {
    if (probs.empty()) throw ValidationError("optimal_code_lengths: empty pmf");
    if (probs.size() == 1) return {1};
    std::vector<MergeNode> nodes;
    const int root = build_merge_tree(probs, nodes);
    std::vector<std::size_t> lengths(probs.size());
    collect_depths(nodes, root, 0, lengths);
    return lengths;
}

PrefixCode build_optimal_code(const DiscretePmf& pmf) {
    std::vector<std::string> words(pmf.size());
    if (pmf.size() == 1) {
        words[0] = "0";
    } else {
        std::vector<MergeNode> nodes;
        const int root = build_merge_tree(pmf.probs(), nodes);
        std::string scratch;
        collect_codewords(nodes, root, scratch, words);
    }
    std::map<std::string, std::string> table;
    for (std::size_t i = 0; i < pmf.size(); ++i) table.emplace(pmf.symbol(i), words[i]);
    return PrefixCode(std::move(table));
}

DiscretePmf product_pmf(const DiscretePmf& pmf, std::size_t block_length) {
    if (block_length == 0) throw ValidationError("product_pmf: block length must be >= 1");
    std::vector<std::string> symbols = pmf.symbols();
    std::vector<double> probs = pmf.probs();
    for (std::size_t b = 1; b < block_length; ++b) {
        std::vector<std::string> next_symbols;
        std::vector<double> next_probs;
        next_symbols.reserve(symbols.size() * pmf.size());
        next_probs.reserve(symbols.size() * pmf.size());
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            for (std::size_t j = 0; j < pmf.size(); ++j) {
                next_symbols.push_back(symbols[i] + "|" + pmf.symbol(j));
                next_probs.push_back(probs[i] * pmf.prob(j));
            }
        }
        symbols = std::move(next_symbols);
        probs = std::move(next_probs);
    }
    return DiscretePmf(std::move(symbols), std::move(probs));
}

double block_code_rate(const SourceSpec& src) {
    if (src.block_length == 0) throw ValidationError("block_code_rate: block length must be >= 1");
    const double block_bits =
        static_cast<double>(src.block_length) * log2_of(static_cast<double>(src.pmf.size()));
    if (block_bits > 24.0) {
        std::ostringstream msg;
        msg << "block_code_rate: block of " << src.block_length << " symbols over "
            << src.pmf.size() << " letters needs " << block_bits
            << " bits of product alphabet, beyond the 24-bit tractability bound";
        throw ResourceError(msg.str());
    }
    // The iid product pmf; labels are irrelevant for the rate.
    std::vector<double> probs = src.pmf.probs();
    for (std::size_t b = 1; b < src.block_length; ++b) {
        std::vector<double> next;
        next.reserve(probs.size() * src.pmf.size());
        for (double p : probs) {
            for (double q : src.pmf.probs()) next.push_back(p * q);
        }
        probs = std::move(next);
    }
    const std::vector<std::size_t> lengths = optimal_code_lengths(probs);
    double average = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        average += probs[i] * static_cast<double>(lengths[i]);
    }
    return average / static_cast<double>(src.block_length);
}

}  // namespace shannon
