#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

#include "mediocre/core.hpp"
#include "mediocre/exact_select.hpp"
#include "support/oracles.hpp"

using namespace mediocre;
using mediocre::testing::as_elements;
using mediocre::testing::for_each_permutation;
using mediocre::testing::kth_largest;
using mediocre::testing::TracingComparator;

namespace {

using Selector = std::function<Element(std::span<Element>, std::size_t, CountingComparator&)>;

struct NamedSelector {
    const char* name;
    Selector select;
};

std::vector<NamedSelector> general_selectors(Rng& rng) {
    return {
        {"sort", [](auto b, auto k, auto& c) { return select_by_sort(b, k, c); }},
        {"mom", [](auto b, auto k, auto& c) { return select_mom(b, k, c); }},
        {"fr", [&rng](auto b, auto k, auto& c) { return select_floyd_rivest(b, k, c, rng); }},
        {"strided", [](auto b, auto k, auto& c) { return select_strided_sample(b, k, c); }},
    };
}

// The k-th largest sits at size-k with smaller keys before and larger after.
::testing::AssertionResult partitioned_around(const std::vector<Element>& buffer, std::size_t k,
                                              Element answer) {
    const std::size_t idx = buffer.size() - k;
    if (buffer[idx] != answer) {
        return ::testing::AssertionFailure() << "answer not at index " << idx;
    }
    for (std::size_t t = 0; t < buffer.size(); ++t) {
        if ((t < idx && buffer[t].value > answer.value) || (t > idx && buffer[t].value < answer.value)) {
            return ::testing::AssertionFailure() << "slot " << t << " on the wrong side";
        }
    }
    return ::testing::AssertionSuccess();
}

std::vector<Element> shuffled(std::size_t n, Rng& rng) {
    auto keys = mediocre::testing::iota_keys(n);
    for (std::size_t t = n; t > 1; --t) {
        std::swap(keys[t - 1], keys[rng.below(t)]);
    }
    return as_elements(keys);
}

} // namespace

TEST(SelectBySort, Examples) {
    CountingComparator cmp;
    auto a = as_elements({3, 1, 2});
    EXPECT_EQ(select_by_sort(std::span(a), 1, cmp), Element{3});
    a = as_elements({3, 1, 2});
    EXPECT_EQ(select_by_sort(std::span(a), 3, cmp), Element{1});
    a = as_elements({5, 9, 2, 7});
    EXPECT_EQ(select_by_sort(std::span(a), 2, cmp), Element{7});
}

TEST(ExactSelectors, RejectRankOutOfRange) {
    Rng rng{1};
    for (const auto& s : general_selectors(rng)) {
        auto a = as_elements({1, 2, 3});
        CountingComparator cmp;
        EXPECT_THROW(s.select(std::span(a), 0, cmp), ParameterError) << s.name;
        EXPECT_THROW(s.select(std::span(a), 4, cmp), ParameterError) << s.name;
    }
    std::vector<Element> empty;
    CountingComparator cmp;
    EXPECT_THROW(select_mom(std::span(empty), 1, cmp), ParameterError);
    EXPECT_THROW(select_max(std::span(empty), cmp), ParameterError);
}

TEST(ExactSelectors, AllPermutationsUpToEight) {
    Rng rng{17};
    const auto selectors = general_selectors(rng);
    for (std::size_t n = 1; n <= 8; ++n) {
        for_each_permutation(n, [&](const std::vector<std::uint64_t>& keys) {
            const auto input = as_elements(keys);
            for (std::size_t k = 1; k <= n; ++k) {
                const Element expected = kth_largest(input, k);
                for (const auto& s : selectors) {
                    auto buffer = input;
                    CountingComparator cmp;
                    const Element got = s.select(std::span(buffer), k, cmp);
                    ASSERT_EQ(got, expected) << s.name << " n=" << n << " k=" << k;
                    ASSERT_TRUE(partitioned_around(buffer, k, got)) << s.name;
                }
            }
        });
    }
}

TEST(ExactSelectors, RandomPermutationsAllRanksUpTo200) {
    Rng data{99};
    Rng rng{100};
    const auto selectors = general_selectors(rng);
    for (std::size_t n = 1; n <= 200; ++n) {
        const auto input = shuffled(n, data);
        for (std::size_t k = 1; k <= n; ++k) {
            for (const auto& s : selectors) {
                auto buffer = input;
                CountingComparator cmp;
                ASSERT_EQ(s.select(std::span(buffer), k, cmp), Element{n - k}) << s.name;
            }
        }
    }
}

TEST(ExactSelectors, LargerFuzzAboveSamplingCutoff) {
    Rng data{5};
    Rng rng{6};
    const auto selectors = general_selectors(rng);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 300 + data.below(5000);
        const std::size_t k = 1 + data.below(n);
        const auto input = shuffled(n, data);
        for (const auto& s : selectors) {
            auto buffer = input;
            CountingComparator cmp;
            const Element got = s.select(std::span(buffer), k, cmp);
            ASSERT_EQ(got, Element{n - k}) << s.name << " n=" << n << " k=" << k;
            ASSERT_TRUE(partitioned_around(buffer, k, got)) << s.name;
        }
    }
}

TEST(ExactSelectors, StructuredInputs) {
    Rng rng{8};
    const std::size_t n = 20000;
    std::vector<std::vector<Element>> inputs;
    auto ascending = mediocre::testing::iota_keys(n);
    inputs.push_back(as_elements(ascending));
    std::reverse(ascending.begin(), ascending.end());
    inputs.push_back(as_elements(ascending));
    std::vector<std::uint64_t> organ;
    for (std::size_t t = 0; t < n; t += 2) {
        organ.push_back(t);
    }
    for (std::size_t t = n - 1; t < n; t -= 2) {
        organ.push_back(t);
    }
    inputs.push_back(as_elements(organ));

    for (const auto& input : inputs) {
        for (std::size_t k : {std::size_t{1}, std::size_t{77}, n / 2, n - 3, n}) {
            auto a = input;
            CountingComparator mom_cmp;
            EXPECT_EQ(select_mom(std::span(a), k, mom_cmp), Element{n - k});
            EXPECT_LE(mom_cmp.comparisons(), 25 * n);
            a = input;
            CountingComparator strided_cmp;
            EXPECT_EQ(select_strided_sample(std::span(a), k, strided_cmp), Element{n - k});
            EXPECT_LE(strided_cmp.comparisons(), 25 * n);
            a = input;
            CountingComparator fr_cmp;
            EXPECT_EQ(select_floyd_rivest(std::span(a), k, fr_cmp, rng), Element{n - k});
        }
    }
}

TEST(ExactSelectors, TallyMatchesIndependentCount) {
    Rng data{3};
    Rng rng{4};
    for (std::size_t n : {1u, 7u, 64u, 999u, 4000u}) {
        const auto input = shuffled(n, data);
        const std::size_t k = (n + 1) / 2;
        auto check = [&](auto&& run) {
            auto buffer = input;
            TracingComparator cmp;
            run(buffer, cmp);
            EXPECT_EQ(cmp.comparisons(), cmp.calls());
            std::set<std::uint64_t> keys;
            for (Element e : input) {
                keys.insert(e.value);
            }
            for (auto key : cmp.touched()) {
                ASSERT_TRUE(keys.count(key)); // never reads outside the buffer
            }
        };
        check([&](auto& b, auto& c) { select_mom(std::span(b), k, c); });
        check([&](auto& b, auto& c) { select_floyd_rivest(std::span(b), k, c, rng); });
        check([&](auto& b, auto& c) { select_strided_sample(std::span(b), k, c); });
        if (n >= 2) {
            check([&](auto& b, auto& c) { select_second_tournament(std::span(b), c); });
        }
    }
}

TEST(SelectMom, LinearCeilingAtHundredThousand) {
    Rng data{12};
    const std::size_t n = 100000;
    auto buffer = shuffled(n, data);
    CountingComparator cmp;
    EXPECT_EQ(select_mom(std::span(buffer), n / 2, cmp), Element{n - n / 2});
    EXPECT_LE(cmp.comparisons(), 25 * n);
}

TEST(SelectMax, ScanCost) {
    Rng data{2};
    for (std::size_t n = 1; n <= 50; ++n) {
        auto buffer = shuffled(n, data);
        CountingComparator cmp;
        EXPECT_EQ(select_max(std::span(buffer), cmp), Element{n - 1});
        EXPECT_EQ(cmp.comparisons(), n - 1);
        EXPECT_EQ(buffer.back(), Element{n - 1});
    }
}

TEST(KnockoutTournament, UsesSizeMinusOne) {
    Rng data{21};
    for (std::size_t n = 1; n <= 300; ++n) {
        const auto buffer = shuffled(n, data);
        CountingComparator cmp;
        const auto winner = knockout_tournament(std::span<const Element>(buffer), cmp);
        EXPECT_EQ(buffer[winner], Element{n - 1});
        EXPECT_EQ(cmp.comparisons(), n - 1);
    }
}

TEST(SecondTournament, Examples) {
    CountingComparator cmp;
    auto two = as_elements({4, 9});
    EXPECT_EQ(select_second_tournament(std::span(two), cmp), Element{4});
    EXPECT_EQ(cmp.comparisons(), 1u);

    CountingComparator cmp4;
    auto four = as_elements({2, 8, 5, 1});
    EXPECT_EQ(select_second_tournament(std::span(four), cmp4), Element{5});
    EXPECT_LE(cmp4.comparisons(), 4u);

    Rng data{1};
    auto eight = shuffled(8, data); // j = 6
    CountingComparator cmp8;
    EXPECT_EQ(select_second_tournament(std::span(eight), cmp8), Element{6});
    EXPECT_LE(cmp8.comparisons(), 9u);

    std::vector<Element> one = as_elements({1});
    EXPECT_THROW(select_second_tournament(std::span(one), cmp), ParameterError);
}

TEST(SecondTournament, ExhaustiveSmallSizes) {
    for (std::size_t n = 2; n <= 8; ++n) {
        for_each_permutation(n, [&](const std::vector<std::uint64_t>& keys) {
            auto buffer = as_elements(keys);
            CountingComparator cmp;
            const Element got = select_second_tournament(std::span(buffer), cmp);
            ASSERT_EQ(got, Element{n - 2});
            ASSERT_LE(cmp.comparisons(), n - 2 + ceil_log2(n));
            ASSERT_TRUE(partitioned_around(buffer, 2, got));
            ASSERT_EQ(buffer.back(), Element{n - 1});
        });
    }
}

TEST(SecondTournament, CountIdentityUpTo4096) {
    Rng data{77};
    for (std::size_t n = 2; n <= 4096; ++n) {
        auto buffer = shuffled(n, data);
        CountingComparator cmp;
        ASSERT_EQ(select_second_tournament(std::span(buffer), cmp), Element{n - 2});
        const std::uint64_t bound = n - 2 + ceil_log2(n);
        if (std::has_single_bit(n)) {
            ASSERT_EQ(cmp.comparisons(), bound) << n;
        } else {
            ASSERT_LE(cmp.comparisons(), bound) << n;
        }
    }
}

TEST(SelectorObjects, AgreeWithOracle) {
    Rng data{31};
    Rng rng{32};
    const auto input = shuffled(700, data);
    for (std::size_t k : {1u, 2u, 3u, 350u, 700u}) {
        auto check = [&](auto selector) {
            auto buffer = input;
            CountingComparator cmp;
            EXPECT_EQ(selector(std::span(buffer), k, cmp), Element{700 - k});
        };
        check(SortSelector{});
        check(MedianOfMediansSelector{});
        check(FloydRivestSelector{&rng});
        check(StridedSampleSelector{});
        check(TournamentSelector{});
    }
}

TEST(SamplingPlan, Parameters) {
    const auto plan = detail::sampling_plan(100000);
    EXPECT_EQ(plan.size, 2155u); // ceil(10^(10/3))
    EXPECT_EQ(plan.gap, 52u);    // ceil(1.1 sqrt(2155))
}
