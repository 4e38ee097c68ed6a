#include "rmspectrum/enumeration.hpp"

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "rmspectrum/io.hpp"

using namespace rmspec;

namespace {

// Direct per-tuple evaluation through the generic codeword builder.
std::map<std::int64_t, std::uint64_t> brute_histogram(int m) {
    const auto supports = degree_d_supports(2 * m, m);
    std::map<std::int64_t, std::uint64_t> out;
    const int n = 2 * m;
    for (auto a : supports)
        for (auto b : supports)
            for (auto c : supports)
                for (auto d : supports)
                    for (unsigned f = 0; f < 4; ++f) {
                        const auto spec = general_concat_spec(
                            m, {Monomial(n, a), Monomial(n, b), Monomial(n, c), Monomial(n, d)},
                            (f & 2) != 0, (f & 1) != 0);
                        ++out[static_cast<std::int64_t>(weight(codeword_table(spec)))];
                    }
    return out;
}

}  // namespace

TEST(EnumerationTest, ThreeMatchesBruteForce) {
    EnumerationOptions opts;
    opts.m = 3;
    const auto hist = enumerate_general_concat(opts);
    EXPECT_EQ(hist.total, oracle::binomial(6, 3) * oracle::binomial(6, 3) * oracle::binomial(6, 3) *
                              oracle::binomial(6, 3) * 4);
    EXPECT_EQ(hist.total, 640000u);
    EXPECT_TRUE(hist.complete);
    EXPECT_EQ(hist.counts, brute_histogram(3));
    for (const auto& [w, c] : hist.counts) EXPECT_EQ(w % 2, 0);
}

TEST(EnumerationTest, FirstTupleDecodesToItsWeight) {
    EnumerationOptions opts;
    opts.m = 3;
    const auto hist = enumerate_general_concat(opts);
    for (const auto& [w, code] : hist.first_tuple) {
        EXPECT_EQ(static_cast<std::int64_t>(weight(codeword_table(decode_tuple(3, code)))), w);
    }
    // Code 0 is (M1..M4 = first support, a1 = a2 = 0).
    EXPECT_EQ(decode_tuple(3, 0).g1_terms, (std::vector<std::uint32_t>{0x7u, 0x7u}));
    EXPECT_THROW(decode_tuple(3, 640000), std::invalid_argument);
}

TEST(EnumerationTest, ThreadCountDoesNotChangeOutput) {
    EnumerationOptions opts;
    opts.m = 3;
    opts.threads = 1;
    const auto one = enumerate_general_concat(opts);
    for (unsigned t : {2u, 3u, 8u}) {
        opts.threads = t;
        const auto many = enumerate_general_concat(opts);
        EXPECT_EQ(many.counts, one.counts);
        EXPECT_EQ(many.first_tuple, one.first_tuple);
        EXPECT_EQ(histogram_csv(many), histogram_csv(one));
    }
}

TEST(EnumerationTest, Conventions) {
    EnumerationOptions opts;
    opts.m = 3;
    const auto ordered = enumerate_general_concat(opts);
    opts.convention = Convention::NonDegenerate;
    const auto nondeg = enumerate_general_concat(opts);
    opts.convention = Convention::SwapQuotient;
    const auto quotient = enumerate_general_concat(opts);
    EXPECT_LT(nondeg.total, ordered.total);
    // (p, q) with p <= q among 400 ordered pairs, four flips each.
    EXPECT_EQ(quotient.total, 400u * 401u / 2u * 4u);
    for (const auto& [w, c] : nondeg.counts) EXPECT_LE(c, ordered.counts.at(w));
    EXPECT_EQ(parse_convention("swap-quotient"), Convention::SwapQuotient);
    EXPECT_THROW(parse_convention("bogus"), std::invalid_argument);
}

TEST(EnumerationTest, EarlyExitStopsOnceTargetsCovered) {
    EnumerationOptions opts;
    opts.m = 4;
    opts.mode = EnumerationMode::EarlyExit;
    opts.targets = coverage_targets(4);
    const auto partial = enumerate_general_concat(opts);
    EXPECT_FALSE(partial.complete);
    EXPECT_LT(partial.total, 96040000u);
    EXPECT_TRUE(check_coverage(4, partial).all_covered());
    opts.threads = 4;
    EXPECT_EQ(enumerate_general_concat(opts).counts, partial.counts);
}

TEST(EnumerationTest, RejectsUnsupportedParameters) {
    EnumerationOptions opts;
    opts.m = 2;
    EXPECT_THROW(enumerate_general_concat(opts), std::invalid_argument);
    opts.m = 6;
    EXPECT_THROW(enumerate_general_concat(opts), std::invalid_argument);
    opts.m = 3;
    opts.threads = 0;
    EXPECT_THROW(enumerate_general_concat(opts), std::invalid_argument);
}

TEST(CoverageTest, TargetsForFour) {
    std::set<std::int64_t> expected;
    for (std::int64_t w = 80; w <= 110; w += 2) expected.insert(w);
    for (std::int64_t w = 272; w <= 302; w += 2) expected.insert(w);
    EXPECT_EQ(coverage_targets(4), expected);
    EXPECT_EQ(published_m4_counts().size(), 32u);
    for (const auto& [w, c] : published_m4_counts()) EXPECT_TRUE(expected.count(w));
}

TEST(CoverageTest, EmptyHistogramCoversNothing) {
    const auto report = check_coverage(4, WeightHistogram{});
    EXPECT_EQ(report.targets.size(), 32u);
    EXPECT_EQ(report.covered(), 0u);
    EXPECT_FALSE(report.all_covered());
}

TEST(CoverageTest, FullFourMatchesPublishedCounts) {
    EnumerationOptions opts;
    opts.m = 4;
    const auto hist = enumerate_general_concat(opts);
    EXPECT_EQ(hist.total, 96040000u);
    for (const auto& [w, c] : published_m4_counts()) EXPECT_EQ(hist.counts.at(w), c) << w;
    const auto report = check_coverage(4, hist);
    EXPECT_TRUE(report.all_covered());
    for (const auto& t : report.targets) {
        ASSERT_TRUE(t.witness.has_value());
        EXPECT_EQ(static_cast<std::int64_t>(weight(codeword_table(*t.witness))), t.weight);
        EXPECT_LE(degree(codeword_table(*t.witness)), 5);
    }
}
