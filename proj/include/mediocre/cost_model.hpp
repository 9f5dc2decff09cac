#pragma once

// Closed-form comparison costs (leading constants, per input element) of the
// approximate-selection schemes when the exact subroutine is the Dor-Zwick
// selection algorithm, plus the information-theoretic lower bound for finding
// an (i, j)-mediocre element.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mediocre/core.hpp"
#include "mediocre/exact_select.hpp"

namespace mediocre {

/// How f caps the Dor-Zwick estimate.
enum class FVariant {
    plain,  ///< min(g(a,l), g(a,l+1))
    cap3,   ///< min(g(a,l), g(a,l+1), 3)
    cap295, ///< min(g(a,l), g(a,l+1), 2.95)
};

/// The lower bound could not be decided from floating-point logarithms.
class AmbiguousBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_half_fraction(double alpha, const char* what) {
    if (!(alpha > 0.0 && alpha <= 0.5)) {
        throw DomainError(std::string(what) + ": alpha must lie in (0, 1/2], got " +
                          std::to_string(alpha));
    }
}

} // namespace detail

/// Dor-Zwick cost of selecting the alpha*n-th largest with parameter l:
/// 1 + (l+2)(alpha + (1-alpha)/2^l).
inline double g(double alpha, unsigned l) {
    detail::require_half_fraction(alpha, "g");
    return 1.0 + (l + 2.0) * (alpha + (1.0 - alpha) / std::ldexp(1.0, static_cast<int>(l)));
}

/// floor(log2(1/alpha) + log2(log2(1/alpha))).
inline unsigned l_star(double alpha) {
    detail::require_half_fraction(alpha, "l_star");
    const double lg = std::log2(1.0 / alpha);
    return static_cast<unsigned>(std::floor(lg + std::log2(lg)));
}

/// Fine-tuned Dor-Zwick constant; values above 1/2 use f(a) = f(1-a).
inline double f(double alpha, FVariant variant = FVariant::cap3) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("f: alpha must lie in (0, 1), got " + std::to_string(alpha));
    }
    const double a = alpha > 0.5 ? 1.0 - alpha : alpha;
    const unsigned l = l_star(a);
    const double best = std::min(g(a, l), g(a, l + 1));
    switch (variant) {
    case FVariant::plain:
        return best;
    case FVariant::cap3:
        return std::min(best, 3.0);
    case FVariant::cap295:
        return std::min(best, 2.95);
    }
    return best;
}

struct InstanceConstants {
    double alpha;
    double c_a1;  ///< pairing scheme on (alpha n, (1-2 alpha) n - 1)
    double c_yao; ///< Yao's scheme on the same instance
    std::optional<double> c_a4;   ///< groups of four on (alpha n, (1-4 alpha) n - 1)
    std::optional<double> c_yao4; ///< Yao's scheme on that instance
};

/// Leading constants of both schemes on the pairing instance, and on the
/// groups-of-four instance when alpha <= 1/5. Uses the cap-3 variant of f.
inline InstanceConstants instance_constants(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0 / 3.0)) {
        throw DomainError("instance_constants: alpha must lie in (0, 1/3), got " +
                          std::to_string(alpha));
    }
    InstanceConstants c{};
    c.alpha = alpha;
    c.c_a1 = 0.5 * (1.0 + f(2.0 * alpha));
    c.c_yao = (1.0 - alpha) * f(alpha / (1.0 - alpha));
    if (alpha <= 0.2) {
        c.c_a4 = 0.25 * (3.0 + f(4.0 * alpha));
        c.c_yao4 = (1.0 - 3.0 * alpha) * f(alpha / (1.0 - 3.0 * alpha));
    }
    return c;
}

// Tables ---------------------------------------------------------------------

struct FTableRow {
    double alpha;
    unsigned l;
    double g_l;
    double g_l1;
    double f;
};

struct ConstantsRow {
    double alpha;
    double c_a1;
    double c_yao;
};

struct Hyper4Row {
    double alpha;
    double c_a4;
    double c_yao4;
};

inline double percentile(int s) { return s / 100.0; }

/// f at the percentiles 1..33.
inline std::vector<FTableRow> f_table() {
    std::vector<FTableRow> rows;
    for (int s = 1; s <= 33; ++s) {
        const double a = percentile(s);
        const unsigned l = l_star(a);
        rows.push_back({a, l, g(a, l), g(a, l + 1), f(a)});
    }
    return rows;
}

/// c_A1 and c_Yao at the percentiles 1..33.
inline std::vector<ConstantsRow> constants_table() {
    std::vector<ConstantsRow> rows;
    for (int s = 1; s <= 33; ++s) {
        const auto c = instance_constants(percentile(s));
        rows.push_back({c.alpha, c.c_a1, c.c_yao});
    }
    return rows;
}

/// Groups-of-four constants at the percentiles 9..16.
inline std::vector<Hyper4Row> hyper4_table() {
    std::vector<Hyper4Row> rows;
    for (int s = 9; s <= 16; ++s) {
        const auto c = instance_constants(percentile(s));
        rows.push_back({c.alpha, *c.c_a4, *c.c_yao4});
    }
    return rows;
}

/// instance_constants sampled at from, from+step, ... up to `to` (inclusive
/// within 1e-9 of a step). Grid points are from + t*step rounded to 12
/// decimals, so a decimal grid hits the same alphas as the tables.
inline std::vector<ConstantsRow> curve(double from, double to, double step) {
    if (!(step > 0.0)) {
        throw DomainError("curve: step must be positive");
    }
    if (!(from > 0.0 && from < to && to < 1.0 / 3.0)) {
        throw DomainError("curve: need 0 < from < to < 1/3");
    }
    const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
    std::vector<ConstantsRow> rows;
    rows.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        const double alpha = std::round((from + static_cast<double>(t) * step) * 1e12) / 1e12;
        const auto c = instance_constants(alpha);
        rows.push_back({c.alpha, c.c_a1, c.c_yao});
    }
    return rows;
}

// Lower bounds ---------------------------------------------------------------

/// Worst-case comparisons to find the second largest of k >= 2 elements:
/// k - 2 + ceil(log2 k).
constexpr std::uint64_t second_largest_cost(std::uint64_t k) noexcept {
    return k - 2 + ceil_log2(k);
}

/// i + j up to this size is handled with exact integers.
inline constexpr std::uint64_t exact_lower_bound_limit = 10000;

namespace detail {

inline std::uint64_t ceil_log2(const boost::multiprecision::cpp_int& x) {
    if (x <= 1) {
        return 0;
    }
    const auto top = boost::multiprecision::msb(x);
    const bool power_of_two = (x & (x - 1)) == 0;
    return power_of_two ? top : top + 1;
}

} // namespace detail

/// ceil(log2((i+j+1)! / (i! j!))).
///
/// The ratio equals (j+1) * C(i+j+1, i) and is evaluated exactly for
/// i + j <= exact_lower_bound_limit. Beyond that it is summed from
/// log-gamma values, and AmbiguousBoundError is thrown if the result lies
/// too close to an integer to round safely.
inline std::uint64_t lower_bound(std::uint64_t i, std::uint64_t j) {
    if (i == 0 || j == 0) {
        return ceil_log2(std::max(i, j) + 1);
    }
    if (i + j <= exact_lower_bound_limit) {
        using boost::multiprecision::cpp_int;
        const std::uint64_t top = i + j + 1;
        const std::uint64_t q = std::min(i, top - i);
        cpp_int c = 1;
        for (std::uint64_t t = 0; t < q; ++t) {
            c *= top - t;
            c /= t + 1;
        }
        c *= j + 1;
        return detail::ceil_log2(c);
    }

    const long double ln2 = std::log(2.0L);
    const long double value =
        (std::lgamma(static_cast<long double>(i + j + 2)) - std::lgamma(static_cast<long double>(i + 1)) -
         std::lgamma(static_cast<long double>(j + 1))) /
        ln2;
    const long double slack =
        1024 * std::numeric_limits<long double>::epsilon() *
        (std::lgamma(static_cast<long double>(i + j + 2)) / ln2 + 1.0L);
    const long double lo = std::ceil(value - slack);
    const long double hi = std::ceil(value + slack);
    if (lo != hi) {
        throw AmbiguousBoundError("lower_bound(" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") is too close to an integer to round");
    }
    return static_cast<std::uint64_t>(lo);
}

} // namespace mediocre
