#pragma once

// Exact selection with counted comparisons.
//
// Every selector takes a mutable buffer and a 1-based rank k counted from the
// top ("k-th largest") and returns that element. On return the buffer is
// partitioned around the answer in ascending order: the k-th largest sits at
// index size-k, everything before it is not larger and everything after it is
// not smaller. Callers rely on this to reuse the comparisons made inside the
// selector.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mediocre/core.hpp"
#include "mediocre/rng.hpp"

namespace mediocre {

inline void check_rank(std::size_t k, std::size_t size) {
    if (k < 1 || k > size) {
        throw ParameterError("rank k=" + std::to_string(k) + " outside [1, " + std::to_string(size) +
                             "]");
    }
}

/// ceil(log2(x)) for x >= 1.
constexpr unsigned ceil_log2(std::uint64_t x) noexcept {
    return x <= 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

namespace detail {

template <ElementComparator Compare>
void insertion_sort(std::span<Element> a, Compare& cmp) {
    for (std::size_t t = 1; t < a.size(); ++t) {
        const Element x = a[t];
        std::size_t p = t;
        while (p > 0 && cmp(x, a[p - 1])) {
            a[p] = a[p - 1];
            --p;
        }
        a[p] = x;
    }
}

template <ElementComparator Compare>
void mom_select_smallest(std::span<Element> a, std::size_t idx, Compare& cmp);

/// One median-of-medians round on a[lo, hi): groups of five are sorted, their
/// medians are gathered at the front and the median of those is used as the
/// pivot. Afterwards a[lo, p) < pivot = a[p] <= a(p, hi). Returns p.
template <ElementComparator Compare>
std::size_t mom_partition(std::span<Element> a, std::size_t lo, std::size_t hi, Compare& cmp) {
    const std::size_t len = hi - lo;
    const std::size_t groups = (len + 4) / 5;
    for (std::size_t g = 0; g < groups; ++g) {
        const std::size_t start = lo + 5 * g;
        const std::size_t end = std::min(start + 5, hi);
        insertion_sort(a.subspan(start, end - start), cmp);
        std::swap(a[lo + g], a[start + (end - start - 1) / 2]);
    }
    mom_select_smallest(a.subspan(lo, groups), (groups - 1) / 2, cmp);

    std::swap(a[lo], a[lo + (groups - 1) / 2]);
    const Element pivot = a[lo];
    std::size_t store = lo + 1;
    for (std::size_t t = lo + 1; t < hi; ++t) {
        if (cmp(a[t], pivot)) {
            std::swap(a[t], a[store]);
            ++store;
        }
    }
    std::swap(a[lo], a[store - 1]);
    return store - 1;
}

/// Places the idx-th smallest (0-based) at a[idx] with the buffer partitioned
/// around it.
template <ElementComparator Compare>
void mom_select_smallest(std::span<Element> a, std::size_t idx, Compare& cmp) {
    std::size_t lo = 0;
    std::size_t hi = a.size();
    while (hi - lo > 5) {
        const std::size_t p = mom_partition(a, lo, hi, cmp);
        if (idx == p) {
            return;
        }
        if (idx < p) {
            hi = p;
        } else {
            lo = p + 1;
        }
    }
    insertion_sort(a.subspan(lo, hi - lo), cmp);
}

/// Quickselect with a median-of-three pivot (first, middle and last slot).
/// After 2 log2(len) + 4 rounds without finishing it hands the remaining range
/// to median-of-medians, so the worst case stays linear.
template <ElementComparator Compare>
void introselect_smallest(std::span<Element> a, std::size_t idx, Compare& cmp) {
    std::size_t lo = 0;
    std::size_t hi = a.size();
    unsigned rounds_left = 2 * static_cast<unsigned>(std::bit_width(a.size())) + 4;
    while (hi - lo > 8) {
        if (rounds_left-- == 0) {
            mom_select_smallest(a.subspan(lo, hi - lo), idx - lo, cmp);
            return;
        }
        const std::size_t first = lo;
        const std::size_t mid = lo + (hi - lo) / 2;
        const std::size_t last = hi - 1;
        std::size_t pick;
        if (cmp(a[first], a[mid])) {
            pick = cmp(a[mid], a[last]) ? mid : (cmp(a[first], a[last]) ? last : first);
        } else {
            pick = cmp(a[first], a[last]) ? first : (cmp(a[mid], a[last]) ? last : mid);
        }
        std::swap(a[lo], a[pick]);
        const Element pivot = a[lo];
        std::size_t store = lo + 1;
        for (std::size_t t = lo + 1; t < hi; ++t) {
            if (cmp(a[t], pivot)) {
                std::swap(a[t], a[store]);
                ++store;
            }
        }
        const std::size_t p = store - 1;
        std::swap(a[lo], a[p]);
        if (idx == p) {
            return;
        }
        if (idx < p) {
            hi = p;
        } else {
            lo = p + 1;
        }
    }
    insertion_sort(a.subspan(lo, hi - lo), cmp);
}

/// Uniform random sample moved to the front (partial Fisher-Yates).
struct RandomSample {
    Rng* rng;

    void gather(std::span<Element> a, std::size_t s) {
        for (std::size_t t = 0; t < s; ++t) {
            std::swap(a[t], a[t + rng->below(a.size() - t)]);
        }
    }
};

/// Evenly spaced positions floor(t * len / s) moved to the front.
struct StridedSample {
    void gather(std::span<Element> a, std::size_t s) {
        const std::size_t len = a.size();
        for (std::size_t t = 0; t < s; ++t) {
            std::swap(a[t], a[t * len / s]);
        }
    }
};

struct SamplingPlan {
    std::size_t size;
    std::size_t gap;
};

// Sample of ceil(len^(2/3)) keys; the pivot pair sits ceil(1.1 sqrt(s)) sample
// ranks either side of the target's expected sample rank, i.e. about 2.2
// standard deviations of the sample rank at the median. Ranges of at most
// `sampling_cutoff` keys go to introselect. These constants minimise the
// measured mean at n = 10^5, k = n/2.
inline constexpr std::size_t sampling_cutoff = 300;

inline SamplingPlan sampling_plan(std::size_t len) {
    const double n = static_cast<double>(len);
    auto s = static_cast<std::size_t>(std::ceil(std::cbrt(n * n)));
    auto gap = static_cast<std::size_t>(std::ceil(1.1 * std::sqrt(static_cast<double>(s))));
    return {s, gap};
}

/// Floyd-Rivest style selection of the idx-th smallest (0-based).
///
/// Each round draws a sample with `picker`, selects two pivots u <= v from it
/// whose sample ranks bracket the target, and splits the range three ways.
/// Keys are first compared against the pivot on the side holding the larger
/// share of the range, so most keys cost one comparison. Sample keys are
/// already classified by the pivot selections and are not compared again.
/// When `guarded`, a round that leaves more than 3/4 of the range is followed
/// by a median-of-medians round, which bounds the worst case linearly.
template <ElementComparator Compare, typename Picker>
void sampling_select_smallest(std::span<Element> a, std::size_t idx, Compare& cmp, Picker& picker,
                              bool guarded) {
    std::size_t lo = 0;
    std::size_t hi = a.size();
    bool force_mom = false;
    std::vector<Element> less;
    std::vector<Element> middle;
    std::vector<Element> greater;

    while (hi - lo > sampling_cutoff) {
        const std::size_t len = hi - lo;
        if (force_mom) {
            force_mom = false;
            const std::size_t p = mom_partition(a, lo, hi, cmp);
            if (idx == p) {
                return;
            }
            if (idx < p) {
                hi = p;
            } else {
                lo = p + 1;
            }
            continue;
        }

        const std::size_t target = idx - lo;
        const auto [s, gap] = sampling_plan(len);
        auto range = a.subspan(lo, len);
        picker.gather(range, s);
        auto sample = range.first(s);

        const std::size_t expected = target * s / len;
        const std::size_t rank_u = expected > gap ? expected - gap : 0;
        const std::size_t rank_v = std::min(s - 1, expected + gap);
        sampling_select_smallest(sample, rank_u, cmp, picker, guarded);
        sampling_select_smallest(sample.subspan(rank_u + 1), rank_v - rank_u - 1, cmp, picker,
                                 guarded);
        const Element u = sample[rank_u];
        const Element v = sample[rank_v];

        less.assign(sample.begin(), sample.begin() + rank_u);
        middle.assign(sample.begin() + rank_u + 1, sample.begin() + rank_v);
        greater.assign(sample.begin() + rank_v + 1, sample.end());

        const bool target_low = 2 * target < len;
        for (Element x : range.subspan(s)) {
            if (target_low) {
                if (cmp(v, x)) {
                    greater.push_back(x);
                } else if (cmp(x, u)) {
                    less.push_back(x);
                } else {
                    middle.push_back(x);
                }
            } else {
                if (cmp(x, u)) {
                    less.push_back(x);
                } else if (cmp(v, x)) {
                    greater.push_back(x);
                } else {
                    middle.push_back(x);
                }
            }
        }

        auto out = range.begin();
        out = std::copy(less.begin(), less.end(), out);
        *out++ = u;
        out = std::copy(middle.begin(), middle.end(), out);
        *out++ = v;
        std::copy(greater.begin(), greater.end(), out);

        const std::size_t pos_u = lo + less.size();
        const std::size_t pos_v = pos_u + 1 + middle.size();
        if (idx == pos_u || idx == pos_v) {
            return;
        }
        if (idx < pos_u) {
            hi = pos_u;
        } else if (idx < pos_v) {
            lo = pos_u + 1;
            hi = pos_v;
        } else {
            lo = pos_v + 1;
        }
        force_mom = guarded && 4 * (hi - lo) > 3 * len;
    }
    introselect_smallest(a.subspan(lo, hi - lo), idx - lo, cmp);
}

} // namespace detail

/// Sort-based reference selection. Correctness oracle only.
template <ElementComparator Compare>
Element select_by_sort(std::span<Element> buffer, std::size_t k, Compare& cmp) {
    check_rank(k, buffer.size());
    std::sort(buffer.begin(), buffer.end(), [&cmp](Element a, Element b) { return cmp(a, b); });
    return buffer[buffer.size() - k];
}

/// Deterministic median-of-medians selection (groups of five), worst-case
/// linear for distinct keys.
template <ElementComparator Compare>
Element select_mom(std::span<Element> buffer, std::size_t k, Compare& cmp) {
    check_rank(k, buffer.size());
    const std::size_t idx = buffer.size() - k;
    detail::mom_select_smallest(buffer, idx, cmp);
    return buffer[idx];
}

/// Maximum by a linear scan, size-1 comparisons; moved to the last slot.
template <ElementComparator Compare>
Element select_max(std::span<Element> buffer, Compare& cmp) {
    check_rank(1, buffer.size());
    std::size_t best = 0;
    for (std::size_t t = 1; t < buffer.size(); ++t) {
        if (cmp(buffer[best], buffer[t])) {
            best = t;
        }
    }
    std::swap(buffer[best], buffer.back());
    return buffer.back();
}

/// Maximum of a buffer by a balanced knockout tournament; returns the index of
/// the winner. Uses size-1 comparisons. `beaten`, when given, receives for
/// every index the indices it beat directly, in round order.
template <ElementComparator Compare>
std::size_t knockout_tournament(std::span<const Element> buffer, Compare& cmp,
                                std::vector<std::vector<std::size_t>>* beaten = nullptr) {
    std::vector<std::size_t> round(buffer.size());
    for (std::size_t t = 0; t < round.size(); ++t) {
        round[t] = t;
    }
    std::vector<std::size_t> next;
    while (round.size() > 1) {
        next.clear();
        for (std::size_t t = 0; t + 1 < round.size(); t += 2) {
            std::size_t winner = round[t];
            std::size_t loser = round[t + 1];
            if (cmp(buffer[winner], buffer[loser])) {
                std::swap(winner, loser);
            }
            if (beaten != nullptr) {
                (*beaten)[winner].push_back(loser);
            }
            next.push_back(winner);
        }
        if (round.size() % 2 == 1) {
            next.push_back(round.back()); // bye
        }
        round.swap(next);
    }
    return round.front();
}

/// Second largest by a single-elimination tournament followed by a playoff
/// among the players that lost directly to the champion. At most
/// size - 2 + ceil(log2 size) comparisons, exactly that many when size is a
/// power of two. Leaves the champion last and the runner-up before it.
template <ElementComparator Compare>
Element select_second_tournament(std::span<Element> buffer, Compare& cmp) {
    const std::size_t s = buffer.size();
    if (s < 2) {
        throw ParameterError("second largest needs at least 2 elements, got " + std::to_string(s));
    }
    std::vector<std::vector<std::size_t>> beaten(s);
    const std::size_t champion = knockout_tournament(std::span<const Element>(buffer), cmp, &beaten);
    const auto& finalists = beaten[champion];
    std::size_t second = finalists.front();
    for (std::size_t t = 1; t < finalists.size(); ++t) {
        if (cmp(buffer[second], buffer[finalists[t]])) {
            second = finalists[t];
        }
    }

    const Element runner_up = buffer[second];
    std::swap(buffer[champion], buffer[s - 1]);
    if (buffer[champion] == runner_up) {
        second = champion; // runner-up was displaced from the last slot
    }
    std::swap(buffer[second], buffer[s - 2]);
    return runner_up;
}

/// Floyd-Rivest randomized selection. Always correct; on average
/// n + min(k, n-k) + o(n) comparisons.
template <ElementComparator Compare>
Element select_floyd_rivest(std::span<Element> buffer, std::size_t k, Compare& cmp, Rng& rng) {
    check_rank(k, buffer.size());
    const std::size_t idx = buffer.size() - k;
    detail::RandomSample picker{&rng};
    detail::sampling_select_smallest(buffer, idx, cmp, picker, false);
    return buffer[idx];
}

/// Floyd-Rivest selection with an evenly spaced sample instead of a random one,
/// and a median-of-medians round after any round that shrinks the range by
/// less than a quarter. Deterministic and worst-case linear; on inputs in
/// random order it costs about as much as the randomized version.
template <ElementComparator Compare>
Element select_strided_sample(std::span<Element> buffer, std::size_t k, Compare& cmp) {
    check_rank(k, buffer.size());
    const std::size_t idx = buffer.size() - k;
    detail::StridedSample picker;
    detail::sampling_select_smallest(buffer, idx, cmp, picker, true);
    return buffer[idx];
}

// Selector objects -----------------------------------------------------------
//
// The approximate-selection schemes take one of these as their exact
// subroutine: a callable (buffer, k-th largest, comparator) -> Element.

template <typename S, typename Compare>
concept ExactSelector = ElementComparator<Compare> &&
    requires(S& selector, std::span<Element> buffer, std::size_t k, Compare& cmp) {
        { selector(buffer, k, cmp) } -> std::same_as<Element>;
    };

struct SortSelector {
    template <ElementComparator Compare>
    Element operator()(std::span<Element> buffer, std::size_t k, Compare& cmp) const {
        return select_by_sort(buffer, k, cmp);
    }
};

struct MedianOfMediansSelector {
    template <ElementComparator Compare>
    Element operator()(std::span<Element> buffer, std::size_t k, Compare& cmp) const {
        return select_mom(buffer, k, cmp);
    }
};

struct FloydRivestSelector {
    Rng* rng;

    template <ElementComparator Compare>
    Element operator()(std::span<Element> buffer, std::size_t k, Compare& cmp) const {
        return select_floyd_rivest(buffer, k, cmp, *rng);
    }
};

struct StridedSampleSelector {
    template <ElementComparator Compare>
    Element operator()(std::span<Element> buffer, std::size_t k, Compare& cmp) const {
        return select_strided_sample(buffer, k, cmp);
    }
};

/// Maximum by scan for k = 1, tournament for k = 2, median-of-medians
/// otherwise. With it Yao's scheme for i = 1 meets V2(j+2) = j + ceil(log2(j+2)).
struct TournamentSelector {
    template <ElementComparator Compare>
    Element operator()(std::span<Element> buffer, std::size_t k, Compare& cmp) const {
        check_rank(k, buffer.size());
        if (k == 1) {
            return select_max(buffer, cmp);
        }
        if (k == 2) {
            return select_second_tournament(buffer, cmp);
        }
        return select_mom(buffer, k, cmp);
    }
};

} // namespace mediocre
