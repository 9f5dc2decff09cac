#pragma once

// Approximate selection: return an element that is neither among the i largest
// nor among the j smallest of an instance.
//
// All schemes read only a prefix of the instance (the "arbitrary subset" is
// always the first elements) and work on a private copy of it.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "mediocre/core.hpp"
#include "mediocre/exact_select.hpp"
#include "mediocre/rng.hpp"

namespace mediocre {

/// Yao's scheme: the (i+1)-th largest of the first i+j+1 elements.
template <ElementComparator Compare, ExactSelector<Compare> Selector>
SelectionOutcome yao_select(const Instance& instance, Selector&& exact, Compare& cmp) {
    const std::uint64_t before = cmp.comparisons();
    const auto prefix = instance.elements().first(instance.i() + instance.j() + 1);
    std::vector<Element> subset(prefix.begin(), prefix.end());

    SelectionOutcome outcome;
    outcome.element = exact(std::span<Element>(subset), instance.i() + 1, cmp);
    outcome.comparisons = cmp.comparisons() - before;
    return outcome;
}

/// True when (i, j, n) lies in the range where pairing is used:
/// i <= j <= n - 2i - 1.
inline bool a1_in_range(std::size_t n, std::size_t i, std::size_t j) noexcept {
    return i <= j && 2 * i + 1 <= n && j <= n - 2 * i - 1;
}

/// Pairing scheme. The first 2i+j+1 elements form m = i + floor((j+1)/2)
/// pairs plus, when j is even, one leftover. The pair winners and the
/// leftover make up the pool, whose (i+1)-th largest is returned. Outside
/// i <= j <= n-2i-1 this is Yao's scheme.
template <ElementComparator Compare, ExactSelector<Compare> Selector>
SelectionOutcome a1_select(const Instance& instance, Selector&& exact, Compare& cmp) {
    const std::size_t i = instance.i();
    const std::size_t j = instance.j();
    if (!a1_in_range(instance.n(), i, j)) {
        return yao_select(instance, exact, cmp);
    }

    const std::uint64_t before = cmp.comparisons();
    const std::size_t pairs = i + (j + 1) / 2;
    const auto subset = instance.elements().first(2 * i + j + 1);

    std::vector<Element> pool;
    pool.reserve(pairs + 1);
    for (std::size_t p = 0; p < pairs; ++p) {
        const Element a = subset[2 * p];
        const Element b = subset[2 * p + 1];
        pool.push_back(cmp(a, b) ? b : a);
    }
    if (j % 2 == 0) {
        pool.push_back(subset.back()); // leftover joins uncompared
    }

    SelectionOutcome outcome;
    outcome.first_stage_comparisons = cmp.comparisons() - before;
    outcome.element = exact(std::span<Element>(pool), i + 1, cmp);
    outcome.comparisons = cmp.comparisons() - before;
    return outcome;
}

struct HyperpairConfig {
    std::size_t group_size;
    std::size_t groups;      ///< m = i + ceil((j+1)/g)
    std::size_t subset_size; ///< g * m
};

/// Validates g and the instance against the group scheme. Throws
/// ParameterError for a bad group size and RangeError when the g*m prefix
/// does not fit.
inline HyperpairConfig hyperpair_config(std::size_t n, std::size_t i, std::size_t j, std::size_t g) {
    if (g < 2 || !std::has_single_bit(g)) {
        throw ParameterError("group size must be a power of two >= 2, got " + std::to_string(g));
    }
    const std::size_t groups = i + (j + 1 + g - 1) / g;
    if (groups == 0) {
        throw RangeError("group scheme needs at least one group");
    }
    const std::size_t subset = g * groups;
    if (subset > n) {
        throw RangeError("group scheme needs g*m <= n (g=" + std::to_string(g) +
                         ", m=" + std::to_string(groups) + ", n=" + std::to_string(n) + ")");
    }
    return {g, groups, subset};
}

/// Hyperpair scheme: the first g*m elements are split into m consecutive
/// groups of g, each group's maximum is found by a balanced knockout
/// tournament (g-1 comparisons), and the (i+1)-th largest of the m maxima is
/// returned. No fallback to Yao's scheme.
template <ElementComparator Compare, ExactSelector<Compare> Selector>
SelectionOutcome hyperpair_select(const Instance& instance, std::size_t g, Selector&& exact,
                                  Compare& cmp) {
    const HyperpairConfig config = hyperpair_config(instance.n(), instance.i(), instance.j(), g);
    const std::uint64_t before = cmp.comparisons();
    const auto subset = instance.elements().first(config.subset_size);

    std::vector<Element> maxima;
    maxima.reserve(config.groups);
    for (std::size_t q = 0; q < config.groups; ++q) {
        const auto group = subset.subspan(q * g, g);
        maxima.push_back(group[knockout_tournament(group, cmp)]);
    }

    SelectionOutcome outcome;
    outcome.first_stage_comparisons = cmp.comparisons() - before;
    outcome.element = exact(std::span<Element>(maxima), instance.i() + 1, cmp);
    outcome.comparisons = cmp.comparisons() - before;
    return outcome;
}

// Randomized scheme ----------------------------------------------------------

struct A2Params {
    std::size_t m; ///< working-set size
    std::size_t r; ///< sample size (with replacement)
    std::size_t k; ///< 1-based rank of the pivot among the sample, from the bottom
};

namespace detail {

inline std::size_t round_half_up(double x) { return static_cast<std::size_t>(std::floor(x + 0.5)); }

} // namespace detail

/// Working-set size m = i+j + 2(i+j)^(3/4), sample size r = m^(3/4) and pivot
/// rank k = j m^(-1/4) + m^(1/2)/2, with m and r rounded half up and k rounded
/// then clamped to [1, r].
inline A2Params a2_params(std::size_t i, std::size_t j, std::size_t n) {
    const std::size_t total = i + j;
    if (total < 16) {
        throw ParameterError("randomized scheme needs i + j >= 16 (i + j = " + std::to_string(total) +
                             ")");
    }
    const double t = static_cast<double>(total);
    const double m_real = t + 2.0 * std::pow(t, 0.75);
    if (m_real > static_cast<double>(n)) {
        throw ParameterError("randomized scheme needs i + j + 2(i+j)^(3/4) <= n (" +
                             std::to_string(m_real) + " > " + std::to_string(n) + ")");
    }
    A2Params p{};
    p.m = detail::round_half_up(m_real);
    const double m = static_cast<double>(p.m);
    p.r = detail::round_half_up(std::pow(m, 0.75));
    const double k_real = static_cast<double>(j) * std::pow(m, -0.25) + std::sqrt(m) / 2.0;
    p.k = std::clamp<std::size_t>(detail::round_half_up(k_real), 1, p.r);

    // m^(1/2)/2 <= k <= r - m^(1/2)/2, up to the same rounding
    const std::size_t margin = detail::round_half_up(std::sqrt(m) / 2.0);
    if (p.k < margin || p.k + margin > p.r) {
        throw std::logic_error("randomized scheme: pivot rank " + std::to_string(p.k) +
                               " left its band for i=" + std::to_string(i) +
                               ", j=" + std::to_string(j));
    }
    return p;
}

/// One Monte Carlo run of the sampling scheme.
///
/// S' is the first m elements. r indices of S' are drawn uniformly with
/// replacement, the k-th smallest x of the sampled multiset is selected with
/// `exact`, and every index of S' that was never drawn is compared with x.
/// Sampled elements are classified by where the selection left them, so they
/// cost nothing extra. x is returned when at least i elements of S' are larger
/// and at least j smaller; otherwise the outcome is marked failed.
template <ElementComparator Compare, ExactSelector<Compare> Selector>
SelectionOutcome a2_once(const Instance& instance, Selector&& exact, Compare& cmp, Rng& rng) {
    const A2Params params = a2_params(instance.i(), instance.j(), instance.n());
    const std::uint64_t before = cmp.comparisons();
    const auto working = instance.elements().first(params.m);

    std::vector<char> drawn(params.m, 0);
    std::vector<Element> sample;
    sample.reserve(params.r);
    for (std::size_t t = 0; t < params.r; ++t) {
        const std::size_t index = rng.below(params.m);
        drawn[index] = 1;
        sample.push_back(working[index]);
    }

    const Element x = exact(std::span<Element>(sample), params.r - params.k + 1, cmp);
    const std::uint64_t after_sample = cmp.comparisons();

    // Selection leaves sample[0, k-1) <= x <= sample[k, r). Distinct keys
    // mean a slot holding a key other than x is strictly on its side.
    std::size_t smaller = 0;
    std::size_t larger = 0;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(params.r);
    for (std::size_t t = 0; t < params.r; ++t) {
        const Element e = sample[t];
        if (e == x || !seen.insert(e.value).second) {
            continue;
        }
        if (t + 1 < params.k) {
            ++smaller;
        } else {
            ++larger;
        }
    }
    for (std::size_t t = 0; t < params.m; ++t) {
        if (drawn[t] != 0) {
            continue;
        }
        if (cmp(working[t], x)) {
            ++smaller;
        } else {
            ++larger;
        }
    }

    SelectionOutcome outcome;
    outcome.element = x;
    outcome.first_stage_comparisons = after_sample - before;
    outcome.comparisons = cmp.comparisons() - before;
    outcome.failed = !(larger >= instance.i() && smaller >= instance.j());
    return outcome;
}

inline constexpr std::uint64_t default_repetition_cap = 100;

/// Las Vegas wrapper: repeats a2_once with fresh samples until it succeeds.
/// Comparisons are summed over all repetitions.
template <ElementComparator Compare, ExactSelector<Compare> Selector>
SelectionOutcome a2_las_vegas(const Instance& instance, Selector&& exact, Compare& cmp, Rng& rng,
                              std::uint64_t max_repetitions = default_repetition_cap) {
    const std::uint64_t before = cmp.comparisons();
    std::uint64_t first_stage = 0;
    for (std::uint64_t rep = 1; rep <= max_repetitions; ++rep) {
        SelectionOutcome outcome = a2_once(instance, exact, cmp, rng);
        first_stage += outcome.first_stage_comparisons;
        if (!outcome.failed) {
            outcome.comparisons = cmp.comparisons() - before;
            outcome.first_stage_comparisons = first_stage;
            outcome.repetitions = rep;
            return outcome;
        }
    }
    throw RepetitionLimitError("randomized scheme failed " + std::to_string(max_repetitions) +
                               " times in a row");
}

} // namespace mediocre
