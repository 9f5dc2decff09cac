#include "commands.hpp"

#include <cstdlib>
#include <exception>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "mediocre/cost_model.hpp"

namespace mediocre::cli {

namespace {

// Maps library exceptions onto exit statuses.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const ParameterError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_usage;
    } catch (const RangeError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_usage;
    } catch (const DomainError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_failure;
    }
}

std::string fixed4(double v) { return fmt::format("{:.4f}", v); }

std::string optional_fixed4(const std::optional<double>& v) { return v ? fixed4(*v) : std::string{}; }

} // namespace

int cmd_table(const std::string& which, std::ostream& out, std::ostream& err) {
    if (which == "f") {
        fmt::print(out, "alpha,l,g_l,g_l1,f\n");
        for (const auto& row : f_table()) {
            fmt::print(out, "{:.2f},{},{},{},{}\n", row.alpha, row.l, fixed4(row.g_l), fixed4(row.g_l1),
                       fixed4(row.f));
        }
        return exit_ok;
    }
    if (which == "constants") {
        fmt::print(out, "alpha,c_a1,c_yao\n");
        for (const auto& row : constants_table()) {
            fmt::print(out, "{:.2f},{},{}\n", row.alpha, fixed4(row.c_a1), fixed4(row.c_yao));
        }
        return exit_ok;
    }
    if (which == "hyper4") {
        fmt::print(out, "alpha,c_a4,c_yao4\n");
        for (const auto& row : hyper4_table()) {
            fmt::print(out, "{:.2f},{},{}\n", row.alpha, fixed4(row.c_a4), fixed4(row.c_yao4));
        }
        return exit_ok;
    }
    fmt::print(err, "error: unknown table '{}' (expected f, constants or hyper4)\n", which);
    return exit_usage;
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const SelectionOutcome o = run_once(config);
        const bool mediocre = !o.failed && o.rank_from_bottom && *o.rank_from_bottom >= config.j &&
                              *o.rank_from_bottom <= config.n - 1 - config.i;
        fmt::print(out,
                   "algorithm,exact,n,i,j,g,seed,element,rank_from_bottom,mediocre,comparisons,"
                   "first_stage_comparisons,failed,repetitions\n");
        fmt::print(out, "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", name_of(config.algorithm),
                   name_of(resolve_exact(config.exact, config.algorithm)), config.n, config.i, config.j,
                   config.algorithm == Algorithm::hyper ? std::to_string(config.group_size) : std::string{},
                   config.seed, o.element.value, *o.rank_from_bottom, mediocre, o.comparisons,
                   o.first_stage_comparisons, o.failed, o.repetitions);
        if (o.failed) {
            fmt::print(err, "a2: sample pivot rejected (FAIL)\n");
            return exit_monte_carlo_fail;
        }
        return exit_ok;
    });
}

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<TrialStats> rows;
        rows.push_back(bench(options.config, options.trials, options.seed_base, options.threads));
        if (options.fr_median_baseline) {
            const RunConfig& c = options.config;
            rows.push_back(
                bench_fr_median(c.n, c.i, c.j, options.trials, options.seed_base, options.threads));
        }
        fmt::print(out,
                   "algorithm,exact,n,i,j,trials,mean_comparisons,stddev,max,mean_first_stage,"
                   "failure_rate,mean_repetitions,seed_base\n");
        for (const auto& s : rows) {
            const std::string_view exact = s.algorithm == "fr-median"
                                               ? std::string_view{"fr"}
                                               : name_of(resolve_exact(options.config.exact,
                                                                       options.config.algorithm));
            fmt::print(out, "{},{},{},{},{},{},{},{},{},{},{},{},{}\n", s.algorithm, exact, s.n, s.i, s.j,
                       s.trials, fixed4(s.mean_comparisons), fixed4(s.stddev), s.max,
                       fixed4(s.mean_first_stage), optional_fixed4(s.failure_rate),
                       optional_fixed4(s.mean_repetitions), s.seed_base);
        }
        return exit_ok;
    });
}

int cmd_lower_bound(long long i, long long j, std::ostream& out, std::ostream& err) {
    if (i < 0 || j < 0) {
        fmt::print(err, "error: lower-bound needs i >= 0 and j >= 0\n");
        return exit_usage;
    }
    return guarded(err, [&] {
        fmt::print(out, "{}\n", lower_bound(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j)));
        return exit_ok;
    });
}

int cmd_plot_data(double from, double to, double step, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto rows = curve(from, to, step);
        fmt::print(out, "alpha,c_a1,c_yao\n");
        for (const auto& row : rows) {
            fmt::print(out, "{},{},{}\n", fixed4(row.alpha), fixed4(row.c_a1), fixed4(row.c_yao));
        }
        return exit_ok;
    });
}

std::optional<unsigned> threads_from_environment() {
    const char* raw = std::getenv("MEDIOCRE_THREADS");
    if (raw == nullptr || *raw == '\0') {
        return 1u;
    }
    char* end = nullptr;
    const unsigned long value = std::strtoul(raw, &end, 10);
    if (*end != '\0' || value == 0 || value > 4096 || raw[0] == '-') {
        return std::nullopt;
    }
    return static_cast<unsigned>(value);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Approximate and exact selection with comparison counting", "mediocre"};
    app.require_subcommand(1);

    std::string format = "csv";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv"}));
    };

    // table
    auto* table = app.add_subcommand("table", "Cost-model tables");
    std::string which;
    table->add_option("--which", which, "f, constants or hyper4")->required();
    add_format(table);

    // run and bench share the instance flags
    std::string algo;
    std::string exact = "auto";
    std::size_t n = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t g = 0;
    auto add_instance = [&](CLI::App* sub) {
        sub->add_option("--algo", algo, "yao, a1, hyper, a2 or a2lv")->required();
        sub->add_option("--n", n, "Instance size")->required();
        sub->add_option("--i", i, "Elements excluded from the top")->required();
        sub->add_option("--j", j, "Elements excluded from the bottom")->required();
        sub->add_option("--exact", exact, "Exact selector: auto, mom, fr, strided, tournament, sort");
        sub->add_option("--g", g, "Group size for hyper (power of two)");
        add_format(sub);
    };

    auto* run = app.add_subcommand("run", "One seeded run");
    add_instance(run);
    std::uint64_t seed = 0;
    run->add_option("--seed", seed, "Instance and algorithm seed")->required();

    auto* bench_cmd = app.add_subcommand("bench", "Seeded trials with summary statistics");
    add_instance(bench_cmd);
    std::uint64_t trials = 0;
    std::uint64_t seed_base = 0;
    std::string baseline;
    bench_cmd->add_option("--trials", trials, "Number of trials")->required();
    bench_cmd->add_option("--seed-base", seed_base, "Trial t uses seed seed-base + t");
    bench_cmd->add_option("--baseline", baseline, "Extra baseline row")->check(CLI::IsMember({"fr-median"}));

    auto* lb = app.add_subcommand("lower-bound", "Information-theoretic lower bound");
    long long lb_i = 0;
    long long lb_j = 0;
    lb->add_option("--i", lb_i)->required();
    lb->add_option("--j", lb_j)->required();

    auto* plot = app.add_subcommand("plot-data", "c_a1 and c_yao on a grid of alpha");
    double from = 0;
    double to = 0;
    double step = 0;
    plot->add_option("--from", from)->required();
    plot->add_option("--to", to)->required();
    plot->add_option("--step", step)->required();
    add_format(plot);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (table->parsed()) {
        return cmd_table(which, out, err);
    }
    if (lb->parsed()) {
        return cmd_lower_bound(lb_i, lb_j, out, err);
    }
    if (plot->parsed()) {
        return cmd_plot_data(from, to, step, out, err);
    }

    const auto algorithm = parse_algorithm(algo);
    if (!algorithm) {
        fmt::print(err, "error: unknown algorithm '{}'\n", algo);
        return exit_usage;
    }
    const auto exact_choice = parse_exact_choice(exact);
    if (!exact_choice) {
        fmt::print(err, "error: unknown exact selector '{}'\n", exact);
        return exit_usage;
    }
    if ((*algorithm == Algorithm::hyper) != (g != 0)) {
        fmt::print(err, "error: --g is required for hyper and only accepted there\n");
        return exit_usage;
    }
    RunConfig config{*algorithm, n, i, j, seed, *exact_choice, g};

    if (run->parsed()) {
        return cmd_run(config, out, err);
    }

    const auto threads = threads_from_environment();
    if (!threads) {
        fmt::print(err, "error: MEDIOCRE_THREADS must be a positive integer\n");
        return exit_usage;
    }
    BenchOptions options;
    options.config = config;
    options.trials = trials;
    options.seed_base = seed_base;
    options.fr_median_baseline = !baseline.empty();
    options.threads = *threads;
    return cmd_bench(options, out, err);
}

} // namespace mediocre::cli
