#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "shannon/discrete.hpp"
#include "shannon/source_coding.hpp"
#include "test_support.hpp"

using namespace shannon;
using testsupport::Rng;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_SUITE_BEGIN("source_coding");

TEST_CASE("naive code lengths") {
    const auto dice = naive_code_length(testsupport::dice_pmf());
    CHECK(near(dice.binary_digits, 3.46, 0.005));
    CHECK(dice.fixed_digits == 4);

    const auto eight = naive_code_length(8);
    CHECK(eight.binary_digits == 3.0);
    CHECK(eight.fixed_digits == 3);

    const auto one = naive_code_length(1);
    CHECK(one.binary_digits == 0.0);
    CHECK(one.fixed_digits == 0);
}

TEST_CASE("dyadic source reaches entropy exactly") {
    const DiscretePmf pmf({"a", "b", "c"}, {0.5, 0.25, 0.25});
    const PrefixCode code = build_optimal_code(pmf);
    CHECK(code.codewords().at("a").size() == 1);
    CHECK(code.codewords().at("b").size() == 2);
    CHECK(code.codewords().at("c").size() == 2);
    CHECK(code.average_length(pmf) == 1.5);
    CHECK(entropy(pmf).value() == 1.5);
    CHECK(code.kraft_sum() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("dice code matches the exhaustive optimum") {
    const DiscretePmf dice = testsupport::dice_pmf();
    const PrefixCode code = build_optimal_code(dice);
    const double average = code.average_length(dice);
    const double oracle = testsupport::optimal_average_length_exhaustive(dice.probs());
    CHECK(average == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(average == doctest::Approx(119.0 / 36.0).epsilon(1e-12));  // 3.3056 digits
    const double h = entropy(dice).value();
    CHECK(h <= average);
    CHECK(average < h + 1.0);
    CHECK(average >= 3.27);
    CHECK(average < 4.27);
}

TEST_CASE("merge construction is optimal on random small sources") {
    Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = 2 + rng.index(9);
        const auto pmf = testsupport::random_pmf(rng, m);
        const double average = build_optimal_code(pmf).average_length(pmf);
        const double oracle = testsupport::optimal_average_length_exhaustive(pmf.probs());
        CHECK(average == doctest::Approx(oracle).epsilon(1e-9));
    }
}

TEST_CASE("degenerate single-symbol source") {
    const DiscretePmf single({"only"}, {1.0});
    const PrefixCode code = build_optimal_code(single);
    CHECK(code.codewords().at("only") == "0");
    CHECK(code.average_length(single) <= 1.0);
    const std::vector<std::string> symbols = {"only", "only"};
    CHECK(code.decode(code.encode(symbols)) == symbols);
}

TEST_CASE("prefix code validation") {
    CHECK_THROWS_AS(PrefixCode({{"a", "0"}, {"b", "01"}}), ValidationError);
    CHECK_THROWS_AS(PrefixCode({{"a", "0"}, {"b", "1"}, {"c", "10"}}), ValidationError);
    CHECK_THROWS_AS(PrefixCode({{"a", "0"}, {"b", "2"}}), ValidationError);
    CHECK_THROWS_AS(PrefixCode(std::map<std::string, std::string>{{"a", ""}}),
                    ValidationError);
    CHECK_THROWS_AS(PrefixCode({{"a", "0"}, {"b", "0"}}), ValidationError);
    CHECK_NOTHROW(PrefixCode({{"a", "0"}, {"b", "10"}, {"c", "11"}}));
}

TEST_CASE("source coding bound holds on fuzzed sources") {
    Rng rng(111);
    for (int trial = 0; trial < 300; ++trial) {
        // m = 1 is excluded from the strict upper bound: its one-digit
        // codeword saturates L = H + 1 (the streaming-decodable degenerate
        // code), so the theorem bound applies from two symbols up.
        const std::size_t m = 2 + rng.index(11);
        const auto pmf = testsupport::random_pmf(rng, m);
        const PrefixCode code = build_optimal_code(pmf);
        const double average = code.average_length(pmf);
        const double h = entropy(pmf).value();
        CHECK(h <= average + 1e-12);
        CHECK(average < h + 1.0);
        CHECK(code.kraft_sum() <= 1.0 + 1e-12);
        CHECK(code.kraft_sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("block coding approaches the entropy rate") {
    const DiscretePmf biased({"h", "t"}, {0.9, 0.1});
    const double h = entropy(biased).value();

    const double rate1 = block_code_rate({biased, 1});
    CHECK(rate1 == 1.0);
    const double rate4 = block_code_rate({biased, 4});
    CHECK(rate4 >= h);
    CHECK(rate4 < rate1);
    CHECK(rate4 == doctest::Approx(0.49255).epsilon(1e-9));

    double previous = 2.0;
    for (std::size_t block = 1; block <= 6; ++block) {
        const double rate = block_code_rate({biased, block});
        CHECK(rate >= h - 1e-12);
        CHECK(rate <= previous + 1e-12);
        previous = rate;
    }
}

TEST_CASE("dice block-2 coding beats single-symbol coding") {
    const DiscretePmf dice = testsupport::dice_pmf();
    const double rate1 = block_code_rate({dice, 1});
    const double rate2 = block_code_rate({dice, 2});
    CHECK(rate1 == doctest::Approx(119.0 / 36.0).epsilon(1e-12));
    // 121-cell product pmf; frozen from an independent merge construction.
    CHECK(rate2 == doctest::Approx(3.2901234567901243).epsilon(1e-9));
    CHECK(rate2 < rate1);
    CHECK(rate2 >= entropy(dice).value());
}

TEST_CASE("block coding tractability bound") {
    const DiscretePmf dice = testsupport::dice_pmf();
    CHECK_THROWS_AS(block_code_rate({dice, 8}), ResourceError);
}

TEST_CASE("product pmf layout") {
    const DiscretePmf biased({"h", "t"}, {0.9, 0.1});
    const DiscretePmf blocks = product_pmf(biased, 2);
    REQUIRE(blocks.size() == 4);
    CHECK(blocks.symbol(0) == "h|h");
    CHECK(blocks.prob(0) == doctest::Approx(0.81).epsilon(1e-15));
    CHECK(blocks.symbol(3) == "t|t");
}

TEST_CASE("encode/decode round trip") {
    const DiscretePmf dice = testsupport::dice_pmf();
    const PrefixCode code = build_optimal_code(dice);

    CHECK(code.encode(std::vector<std::string>{}) == "");
    CHECK(code.decode("").empty());

    const std::vector<std::string> one = {"7"};
    CHECK(code.decode(code.encode(one)) == one);

    CHECK_THROWS_AS(code.encode(std::vector<std::string>{"13"}), ValidationError);
    CHECK_THROWS_AS(code.decode("abc"), ValidationError);
}

TEST_CASE("monte-carlo average length of the dice code") {
    const DiscretePmf dice = testsupport::dice_pmf();
    const PrefixCode code = build_optimal_code(dice);
    const double analytic = code.average_length(dice);

    // CDF inversion with a fixed-seed stream.
    Rng rng(42);
    std::vector<std::string> sample;
    sample.reserve(10000);
    for (int i = 0; i < 10000; ++i) {
        double u = rng.unit();
        std::size_t idx = 0;
        while (idx + 1 < dice.size() && u >= dice.prob(idx)) {
            u -= dice.prob(idx);
            ++idx;
        }
        sample.push_back(dice.symbol(idx));
    }
    const std::string digits = code.encode(sample);
    CHECK(near(static_cast<double>(digits.size()) / 10000.0, analytic, 0.05));
    CHECK(code.decode(digits) == sample);
}

TEST_CASE("round trip on fuzzed sequences") {
    Rng rng(121);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t m = 1 + rng.index(10);
        const auto pmf = testsupport::random_pmf(rng, m);
        const PrefixCode code = build_optimal_code(pmf);
        std::vector<std::string> sequence;
        const std::size_t length = rng.index(40);
        for (std::size_t i = 0; i < length; ++i) {
            sequence.push_back(pmf.symbol(rng.index(m)));
        }
        const std::string digits = code.encode(sequence);
        std::size_t total = 0;
        for (const auto& s : sequence) total += code.codewords().at(s).size();
        CHECK(digits.size() == total);
        CHECK(code.decode(digits) == sequence);
    }
}

TEST_CASE("decode rejects malformed digit strings") {
    const PrefixCode code({{"a", "0"}, {"b", "10"}, {"c", "11"}});
    CHECK_THROWS_AS(code.decode("1"), ValidationError);     // dangling suffix
    CHECK_THROWS_AS(code.decode("010x"), ValidationError);  // invalid digit
    const PrefixCode longer({{"a", "00"}, {"b", "01"}});
    CHECK_THROWS_AS(longer.decode("001"), ValidationError);   // dangling
    CHECK_THROWS_AS(longer.decode("10"), ValidationError);    // unparseable group
}

TEST_SUITE_END();
