#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mediocre/rng.hpp"

namespace mediocre {

// Errors ---------------------------------------------------------------------

/// Invalid (n, i, j), rank or size argument.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Element looked up by the rank oracle is not part of the instance.
class NotFoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Real-valued argument outside the domain of a cost formula.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// (i, j) outside the range an approximate-selection scheme is defined for.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Las Vegas loop hit its repetition cap.
class RepetitionLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Elements and comparators ---------------------------------------------------

/// An input key. Only identity is exposed directly; any ordering question has
/// to go through a comparator so that it is counted.
struct Element {
    std::uint64_t value{};

    friend constexpr bool operator==(Element, Element) noexcept = default;
};

/// Strict "less than" over elements that also reports how many times it has
/// been invoked.
template <typename C>
concept ElementComparator = requires(C& cmp, const C& ccmp, Element a, Element b) {
    { cmp(a, b) } -> std::convertible_to<bool>;
    { ccmp.comparisons() } -> std::convertible_to<std::uint64_t>;
};

/// Compares element keys and tallies every call.
class CountingComparator {
public:
    bool operator()(Element a, Element b) noexcept {
        ++comparisons_;
        return a.value < b.value;
    }

    std::uint64_t comparisons() const noexcept { return comparisons_; }

private:
    std::uint64_t comparisons_ = 0;
};

static_assert(ElementComparator<CountingComparator>);

// Instances ------------------------------------------------------------------

inline void check_instance_parameters(std::size_t n, std::size_t i, std::size_t j) {
    if (n < 1) {
        throw ParameterError("instance needs n >= 1");
    }
    // i + j + 1 <= n, written so that it cannot overflow
    if (i >= n || j > n - 1 - i) {
        throw ParameterError("instance needs i + j + 1 <= n (n=" + std::to_string(n) +
                             ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
    }
}

/// A mediocre-element problem: find an element of `elements` that has at
/// least `i` larger and at least `j` smaller elements.
class Instance {
public:
    Instance(std::size_t i, std::size_t j, std::vector<Element> elements)
        : i_(i), j_(j), elements_(std::move(elements)) {
        check_instance_parameters(elements_.size(), i_, j_);
        sorted_keys_.reserve(elements_.size());
        for (Element e : elements_) {
            sorted_keys_.push_back(e.value);
        }
        std::sort(sorted_keys_.begin(), sorted_keys_.end());
        if (std::adjacent_find(sorted_keys_.begin(), sorted_keys_.end()) != sorted_keys_.end()) {
            throw ParameterError("instance elements must be pairwise distinct");
        }
    }

    std::size_t n() const noexcept { return elements_.size(); }
    std::size_t i() const noexcept { return i_; }
    std::size_t j() const noexcept { return j_; }
    std::span<const Element> elements() const noexcept { return elements_; }

    /// Number of elements strictly smaller than `x`. Uses a private sorted
    /// copy of the keys and never touches a comparator.
    std::size_t rank_of(Element x) const {
        auto it = std::lower_bound(sorted_keys_.begin(), sorted_keys_.end(), x.value);
        if (it == sorted_keys_.end() || *it != x.value) {
            throw NotFoundError("element " + std::to_string(x.value) + " is not in the instance");
        }
        return static_cast<std::size_t>(it - sorted_keys_.begin());
    }

    bool is_mediocre(Element x) const {
        const std::size_t r = rank_of(x);
        return j_ <= r && r <= n() - 1 - i_;
    }

private:
    std::size_t i_;
    std::size_t j_;
    std::vector<Element> elements_;
    std::vector<std::uint64_t> sorted_keys_;
};

inline std::size_t rank_of(Element x, const Instance& instance) { return instance.rank_of(x); }

inline bool is_mediocre(Element x, const Instance& instance) { return instance.is_mediocre(x); }

/// Uniformly random permutation of {0, ..., n-1}, shuffled by Fisher-Yates
/// from the back: for t = n-1 down to 1, swap positions t and Rng::below(t+1).
inline Instance generate_instance(std::size_t n, std::size_t i, std::size_t j, std::uint64_t seed) {
    check_instance_parameters(n, i, j);
    std::vector<Element> elements(n);
    for (std::size_t t = 0; t < n; ++t) {
        elements[t] = Element{t};
    }
    Rng rng{seed};
    for (std::size_t t = n - 1; t > 0; --t) {
        std::swap(elements[t], elements[rng.below(t + 1)]);
    }
    return Instance{i, j, std::move(elements)};
}

// Outcomes -------------------------------------------------------------------

struct SelectionOutcome {
    Element element{};
    /// Strictly smaller elements in the whole instance; filled in by the
    /// rank oracle on request, never by the algorithms.
    std::optional<std::size_t> rank_from_bottom;
    std::uint64_t comparisons = 0;
    /// Comparisons spent before the final selection: pairing (A1), group
    /// tournaments (hyperpairs) or selection inside the sample (A2).
    std::uint64_t first_stage_comparisons = 0;
    /// Monte Carlo FAIL. `element` then holds the rejected candidate.
    bool failed = false;
    std::uint64_t repetitions = 1;
};

inline SelectionOutcome& attach_rank(SelectionOutcome& outcome, const Instance& instance) {
    outcome.rank_from_bottom = instance.rank_of(outcome.element);
    return outcome;
}

} // namespace mediocre
