#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "woi/config.hpp"
#include "woi/experiment.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string preset;
    std::string out_dir = "out";
    int reps = 0;            // 0 -> keep spec default
    std::optional<std::string> mode;
    std::optional<std::uint64_t> seed;
    bool verbose = false;

    // GA overrides
    std::optional<int> pop_size;
    std::optional<double> p_c;
    std::optional<double> p_m;
    std::optional<double> eta_c;
    std::optional<double> eta_m;
    std::optional<int> n_r;
    std::optional<int> tournament_size;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt, bool with_ga)
{
    cmd->add_option("config", opt.config_path, "JSON run configuration");
    cmd->add_option("--preset", opt.preset,
                    "built-in experiment: case1, case2 or single:<fn>:<limit,limit>");
    cmd->add_option("--reps", opt.reps, "number of seeded repetitions");
    cmd->add_option("--seed", opt.seed, "base seed (repetition i runs with seed+i)");
    cmd->add_option("--out", opt.out_dir, "artifact output directory");
    cmd->add_option("--mode", opt.mode, "simultaneous or sequential");
    cmd->add_flag("--verbose", opt.verbose, "print one line per allocation round");
    if (with_ga) {
        cmd->add_option("-N,--pop-size", opt.pop_size, "population size per concept");
        cmd->add_option("--pc", opt.p_c, "crossover probability");
        cmd->add_option("--pm", opt.p_m, "per-variable mutation probability (default 1/n)");
        cmd->add_option("--eta-c", opt.eta_c, "SBX distribution index");
        cmd->add_option("--eta-m", opt.eta_m, "mutation distribution index");
        cmd->add_option("--nr", opt.n_r, "number of distance ranges");
        cmd->add_option("--tournament-size", opt.tournament_size, "tournament size");
    }
}

woi::ExperimentSpec build_spec(const CommonOptions& opt)
{
    if (opt.config_path.empty() == opt.preset.empty())
        throw std::invalid_argument("cli: give either a config file or --preset (not both)");

    woi::ExperimentSpec spec = opt.preset.empty() ? woi::load_config(opt.config_path)
                                                  : woi::preset_spec(opt.preset);
    if (opt.reps > 0)
        spec.repetitions = opt.reps;
    if (opt.mode)
        spec.base.mode = woi::run_mode_from_string(*opt.mode);
    if (opt.seed)
        spec.base.seed = *opt.seed;
    if (opt.pop_size)
        spec.base.ga.N = *opt.pop_size;
    if (opt.p_c)
        spec.base.ga.p_c = *opt.p_c;
    if (opt.p_m)
        spec.base.ga.p_m = *opt.p_m;
    if (opt.eta_c)
        spec.base.ga.eta_c = *opt.eta_c;
    if (opt.eta_m)
        spec.base.ga.eta_m = *opt.eta_m;
    if (opt.n_r)
        spec.base.ga.n_r = *opt.n_r;
    if (opt.tournament_size)
        spec.base.ga.tournament_size = *opt.tournament_size;
    if (opt.verbose)
        spec.base.logger = [](const std::string& line) { std::cout << line << '\n'; };
    spec.validate();
    return spec;
}

void print_stats_row(const std::string& name, const woi::Stats& s)
{
    std::printf("  %-32s mean %10.2f  median %10.2f  q1 %10.2f  q3 %10.2f  min %10.2f  max %10.2f\n",
                name.c_str(), s.mean, s.median, s.q1, s.q3, s.min, s.max);
}

int cmd_run(const CommonOptions& opt)
{
    const woi::ExperimentSpec spec = build_spec(opt);
    const woi::ExperimentResult result = woi::run_experiment(spec, opt.out_dir);

    std::printf("%d %s run(s), portfolio of %zu concept(s), target %d\n", spec.repetitions,
                woi::to_string(spec.base.mode), spec.base.portfolio.size(), spec.base.target_l);
    int reached = 0;
    for (const woi::RunReport& r : result.reports)
        reached += r.stop_reason == woi::StopReason::target_reached ? 1 : 0;
    std::printf("target reached in %d/%d run(s)\n", reached, spec.repetitions);
    for (const auto& [name, stats] : result.summary.metrics) {
        print_stats_row(name, stats);
        if (stats.count < spec.repetitions)
            std::printf("    (observed in %d of %d runs)\n", stats.count, spec.repetitions);
    }
    std::printf("artifacts written to %s\n", opt.out_dir.c_str());
    return 0;
}

int cmd_compare(const CommonOptions& opt)
{
    const woi::ExperimentSpec spec = build_spec(opt);
    const woi::ComparisonResult result = woi::compare_modes(spec, opt.out_dir);

    std::printf("%-12s %24s %24s\n", "concept", "simultaneous avg gens", "sequential avg gens");
    for (const woi::ComparisonRow& row : result.rows)
        std::printf("%-12s %24.1f %24.1f\n", row.concept_id.c_str(), row.simultaneous_avg_gens,
                    row.sequential_avg_gens);
    std::printf("simultaneous/sequential total ratio: %.3f\n", result.ratio);
    std::printf("artifacts written to %s\n", opt.out_dir.c_str());
    return 0;
}

int cmd_validate(const std::string& path)
{
    const woi::ExperimentSpec spec = woi::load_config(path);
    std::printf("%s: OK (%zu concept(s), %zu objective(s), target %d, budget %lld, mode %s)\n",
                path.c_str(), spec.base.portfolio.size(), spec.base.woi_limits.size(),
                spec.base.target_l, static_cast<long long>(spec.base.effective_budget()),
                woi::to_string(spec.base.mode));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"window-of-interest concept search"};
    app.require_subcommand(1);

    CommonOptions run_opt;
    CLI::App* run_cmd = app.add_subcommand("run", "execute a seeded experiment");
    add_common_flags(run_cmd, run_opt, true);

    CommonOptions cmp_opt;
    CLI::App* cmp_cmd = app.add_subcommand("compare", "simultaneous vs sequential over matched seeds");
    add_common_flags(cmp_cmd, cmp_opt, true);

    std::string validate_path;
    CLI::App* val_cmd = app.add_subcommand("validate", "check a config file");
    val_cmd->add_option("config", validate_path, "JSON run configuration")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed())
            return cmd_run(run_opt);
        if (cmp_cmd->parsed())
            return cmd_compare(cmp_opt);
        return cmd_validate(validate_path);
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2; // configuration error
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1; // runtime failure
    }
}
