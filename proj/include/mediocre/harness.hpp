#pragma once

// Single runs and repeated seeded trials of the selection schemes.
//
// Trial t of a benchmark uses seed_base + t. From a trial seed the instance is
// generated with Rng(seed) and the algorithm draws from Rng::derive(seed, 1),
// so any trial can be replayed on its own with `run --seed`.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "mediocre/approx_select.hpp"
#include "mediocre/core.hpp"
#include "mediocre/exact_select.hpp"
#include "mediocre/rng.hpp"

namespace mediocre {

enum class Algorithm { yao, a1, hyper, a2, a2lv };

enum class ExactChoice { automatic, mom, fr, strided, tournament, sort };

inline std::string_view name_of(Algorithm a) {
    switch (a) {
    case Algorithm::yao:
        return "yao";
    case Algorithm::a1:
        return "a1";
    case Algorithm::hyper:
        return "hyper";
    case Algorithm::a2:
        return "a2";
    case Algorithm::a2lv:
        return "a2lv";
    }
    return "?";
}

inline std::string_view name_of(ExactChoice e) {
    switch (e) {
    case ExactChoice::automatic:
        return "auto";
    case ExactChoice::mom:
        return "mom";
    case ExactChoice::fr:
        return "fr";
    case ExactChoice::strided:
        return "strided";
    case ExactChoice::tournament:
        return "tournament";
    case ExactChoice::sort:
        return "sort";
    }
    return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view s) {
    for (Algorithm a : {Algorithm::yao, Algorithm::a1, Algorithm::hyper, Algorithm::a2, Algorithm::a2lv}) {
        if (name_of(a) == s) {
            return a;
        }
    }
    return std::nullopt;
}

inline std::optional<ExactChoice> parse_exact_choice(std::string_view s) {
    for (ExactChoice e : {ExactChoice::automatic, ExactChoice::mom, ExactChoice::fr, ExactChoice::strided,
                          ExactChoice::tournament, ExactChoice::sort}) {
        if (name_of(e) == s) {
            return e;
        }
    }
    return std::nullopt;
}

/// The deterministic schemes default to median-of-medians. The randomized
/// scheme defaults to the strided-sample selector, which keeps the sample
/// selection close to 2r comparisons.
inline ExactChoice resolve_exact(ExactChoice choice, Algorithm algorithm) {
    if (choice != ExactChoice::automatic) {
        return choice;
    }
    return (algorithm == Algorithm::a2 || algorithm == Algorithm::a2lv) ? ExactChoice::strided
                                                                          : ExactChoice::mom;
}

struct RunConfig {
    Algorithm algorithm = Algorithm::yao;
    std::size_t n = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    std::uint64_t seed = 0;
    ExactChoice exact = ExactChoice::automatic;
    std::size_t group_size = 0; ///< hyper only
};

/// Calls `fn` with the selector object for `choice`.
template <typename Fn>
decltype(auto) with_selector(ExactChoice choice, Rng& rng, Fn&& fn) {
    switch (choice) {
    case ExactChoice::fr:
        return fn(FloydRivestSelector{&rng});
    case ExactChoice::strided:
        return fn(StridedSampleSelector{});
    case ExactChoice::tournament:
        return fn(TournamentSelector{});
    case ExactChoice::sort:
        return fn(SortSelector{});
    case ExactChoice::mom:
    case ExactChoice::automatic:
        break;
    }
    return fn(MedianOfMediansSelector{});
}

/// Runs one scheme on the instance generated from config.seed and attaches
/// the oracle rank. A Monte Carlo FAIL comes back as a failed outcome.
inline SelectionOutcome run_once(const RunConfig& config) {
    if (config.algorithm == Algorithm::hyper && config.group_size == 0) {
        throw ParameterError("hyper needs a group size");
    }
    const Instance instance = generate_instance(config.n, config.i, config.j, config.seed);
    Rng rng = Rng::derive(config.seed, 1);
    CountingComparator cmp;
    const ExactChoice exact = resolve_exact(config.exact, config.algorithm);

    SelectionOutcome outcome = with_selector(exact, rng, [&](auto selector) {
        switch (config.algorithm) {
        case Algorithm::yao:
            return yao_select(instance, selector, cmp);
        case Algorithm::a1:
            return a1_select(instance, selector, cmp);
        case Algorithm::hyper:
            return hyperpair_select(instance, config.group_size, selector, cmp);
        case Algorithm::a2:
            return a2_once(instance, selector, cmp, rng);
        case Algorithm::a2lv:
            return a2_las_vegas(instance, selector, cmp, rng);
        }
        throw ParameterError("unknown algorithm");
    });
    attach_rank(outcome, instance);
    return outcome;
}

/// Floyd-Rivest for the exact median of the first i+j+1 elements of the
/// instance generated from `seed`; the baseline Yao's scheme is measured
/// against. The median of s elements is taken as the ceil(s/2)-th largest.
inline SelectionOutcome run_fr_median(std::size_t n, std::size_t i, std::size_t j, std::uint64_t seed) {
    const Instance instance = generate_instance(n, i, j, seed);
    Rng rng = Rng::derive(seed, 2);
    CountingComparator cmp;
    const auto prefix = instance.elements().first(i + j + 1);
    std::vector<Element> subset(prefix.begin(), prefix.end());
    SelectionOutcome outcome;
    outcome.element = select_floyd_rivest(std::span<Element>(subset), (subset.size() + 1) / 2, cmp, rng);
    outcome.comparisons = cmp.comparisons();
    attach_rank(outcome, instance);
    return outcome;
}

struct TrialStats {
    std::string algorithm;
    std::size_t n = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    std::uint64_t trials = 0;
    double mean_comparisons = 0;
    double stddev = 0; ///< sample standard deviation, 0 for a single trial
    std::uint64_t max = 0;
    double mean_first_stage = 0;
    std::optional<double> failure_rate;     ///< a2 only
    std::optional<double> mean_repetitions; ///< a2lv only
    std::uint64_t seed_base = 0;
};

/// Evaluates trial(t) for t = 0..trials-1 on up to `threads` workers. Results
/// are stored by trial index, so the output does not depend on scheduling.
template <typename Trial>
std::vector<SelectionOutcome> run_indexed(std::uint64_t trials, unsigned threads, Trial trial) {
    std::vector<SelectionOutcome> outcomes(trials);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(trials, 1024))));
    if (threads == 1) {
        for (std::uint64_t t = 0; t < trials; ++t) {
            outcomes[t] = trial(t);
        }
        return outcomes;
    }

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&] {
            for (std::uint64_t t = next++; t < trials; t = next++) {
                try {
                    outcomes[t] = trial(t);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    next = trials;
                }
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return outcomes;
}

inline TrialStats summarize(std::string algorithm, std::size_t n, std::size_t i, std::size_t j,
                            std::uint64_t seed_base, const std::vector<SelectionOutcome>& outcomes) {
    TrialStats stats;
    stats.algorithm = std::move(algorithm);
    stats.n = n;
    stats.i = i;
    stats.j = j;
    stats.trials = outcomes.size();
    stats.seed_base = seed_base;
    if (outcomes.empty()) {
        return stats;
    }

    double sum = 0;
    double first_stage = 0;
    std::uint64_t failures = 0;
    std::uint64_t repetitions = 0;
    for (const auto& o : outcomes) {
        sum += static_cast<double>(o.comparisons);
        first_stage += static_cast<double>(o.first_stage_comparisons);
        stats.max = std::max(stats.max, o.comparisons);
        failures += o.failed ? 1 : 0;
        repetitions += o.repetitions;
    }
    const double count = static_cast<double>(outcomes.size());
    stats.mean_comparisons = sum / count;
    stats.mean_first_stage = first_stage / count;
    if (outcomes.size() > 1) {
        double sq = 0;
        for (const auto& o : outcomes) {
            const double d = static_cast<double>(o.comparisons) - stats.mean_comparisons;
            sq += d * d;
        }
        stats.stddev = std::sqrt(sq / (count - 1));
    }
    if (stats.algorithm == name_of(Algorithm::a2)) {
        stats.failure_rate = static_cast<double>(failures) / count;
    }
    if (stats.algorithm == name_of(Algorithm::a2lv)) {
        stats.mean_repetitions = static_cast<double>(repetitions) / count;
    }
    return stats;
}

/// `trials` seeded runs of config.algorithm; config.seed is ignored in favour
/// of seed_base + t.
inline TrialStats bench(const RunConfig& config, std::uint64_t trials, std::uint64_t seed_base,
                        unsigned threads = 1) {
    if (trials < 1) {
        throw ParameterError("bench needs trials >= 1");
    }
    auto outcomes = run_indexed(trials, threads, [&](std::uint64_t t) {
        RunConfig c = config;
        c.seed = seed_base + t;
        return run_once(c);
    });
    return summarize(std::string(name_of(config.algorithm)), config.n, config.i, config.j, seed_base,
                     outcomes);
}

inline TrialStats bench_fr_median(std::size_t n, std::size_t i, std::size_t j, std::uint64_t trials,
                                  std::uint64_t seed_base, unsigned threads = 1) {
    if (trials < 1) {
        throw ParameterError("bench needs trials >= 1");
    }
    auto outcomes = run_indexed(trials, threads,
                                [&](std::uint64_t t) { return run_fr_median(n, i, j, seed_base + t); });
    return summarize("fr-median", n, i, j, seed_base, outcomes);
}

} // namespace mediocre
