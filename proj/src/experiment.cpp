#include "woi/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "woi/report_json.hpp"

namespace woi {

namespace {

double quantile(const std::vector<double>& sorted, double p)
{
    if (sorted.empty())
        return 0.0;
    const double h = p * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// All artifact writes funnel through here so a failing write can report what
// already landed on disk.
class ArtifactWriter {
public:
    explicit ArtifactWriter(std::string dir) : dir_(std::move(dir))
    {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec)
            fail("create output directory", dir_);
    }

    void write(const std::string& name, const std::string& content)
    {
        const std::string path = dir_ + "/" + name;
        std::ofstream out(path, std::ios::binary);
        out << content;
        if (!out)
            fail("write", path);
        written_.push_back(name);
    }

    const std::vector<std::string>& written() const { return written_; }

private:
    [[noreturn]] void fail(const std::string& action, const std::string& path) const
    {
        std::ostringstream msg;
        msg << "experiment: failed to " << action << " '" << path << "'; artifacts completed:";
        if (written_.empty())
            msg << " none";
        for (const std::string& name : written_)
            msg << ' ' << name;
        throw std::runtime_error(msg.str());
    }

    std::string dir_;
    std::vector<std::string> written_;
};

std::vector<RunReport> run_repetitions(const RunConfig& base, int repetitions,
                                       std::uint64_t base_seed)
{
    std::vector<RunReport> reports(static_cast<std::size_t>(repetitions));
    const unsigned workers =
        std::min<unsigned>(worker_count(), static_cast<unsigned>(repetitions));
    if (workers <= 1) {
        for (int i = 0; i < repetitions; ++i) {
            RunConfig cfg = base;
            cfg.seed = base_seed + static_cast<std::uint64_t>(i);
            reports[static_cast<std::size_t>(i)] = run(cfg);
        }
        return reports;
    }

    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < repetitions; i = next.fetch_add(1)) {
                RunConfig cfg = base;
                cfg.logger = nullptr; // workers stay quiet
                cfg.seed = base_seed + static_cast<std::uint64_t>(i);
                reports[static_cast<std::size_t>(i)] = run(cfg);
            }
        });
    }
    for (std::thread& t : pool)
        t.join();
    return reports;
}

std::string summary_csv(const SummaryStats& summary)
{
    std::ostringstream out;
    out << "metric,mean,median,q1,q3,min,max\n";
    for (const auto& [name, s] : summary.metrics) {
        out << name << ',' << format_double(s.mean) << ',' << format_double(s.median) << ','
            << format_double(s.q1) << ',' << format_double(s.q3) << ',' << format_double(s.min)
            << ',' << format_double(s.max) << '\n';
    }
    return out.str();
}

std::string trajectory_csv(const std::vector<RunReport>& reports, std::size_t concept_index)
{
    int max_gen = -1;
    for (const RunReport& r : reports) {
        const auto& traj = r.concepts[concept_index].trajectory;
        if (!traj.empty())
            max_gen = std::max(max_gen, traj.back().first);
    }

    std::ostringstream out;
    out << "generation,median_distance,q1,q3\n";
    for (int g = 0; g <= max_gen; ++g) {
        std::vector<double> values;
        for (const RunReport& r : reports) {
            const auto& traj = r.concepts[concept_index].trajectory;
            // trajectories are dense in generations, so index directly
            if (g < static_cast<int>(traj.size()) && traj[static_cast<std::size_t>(g)].first == g)
                values.push_back(traj[static_cast<std::size_t>(g)].second);
        }
        if (values.empty())
            continue;
        std::sort(values.begin(), values.end());
        out << g << ',' << format_double(quantile(values, 0.5)) << ','
            << format_double(quantile(values, 0.25)) << ',' << format_double(quantile(values, 0.75))
            << '\n';
    }
    return out.str();
}

double progress_value_at(const std::vector<std::pair<std::uint64_t, double>>& series,
                         std::uint64_t evals)
{
    // last recorded best at or before `evals`; before the first record the
    // first value stands, after the last the final value stands
    double value = series.front().second;
    for (const auto& [e, d] : series) {
        if (e > evals)
            break;
        value = d;
    }
    return value;
}

std::string boxplot_csv(const std::vector<RunReport>& reports)
{
    std::uint64_t max_evals = 0;
    for (const RunReport& r : reports) {
        if (!r.progress.empty())
            max_evals = std::max(max_evals, r.progress.back().first);
    }

    constexpr int checkpoints = 50;
    std::ostringstream out;
    out << "evaluations,min,q1,median,q3,max\n";
    std::uint64_t previous = 0;
    for (int k = 1; k <= checkpoints; ++k) {
        const std::uint64_t c = max_evals * static_cast<std::uint64_t>(k)
            / static_cast<std::uint64_t>(checkpoints);
        if (c == previous)
            continue;
        previous = c;
        std::vector<double> values;
        for (const RunReport& r : reports) {
            if (!r.progress.empty())
                values.push_back(progress_value_at(r.progress, c));
        }
        if (values.empty())
            continue;
        std::sort(values.begin(), values.end());
        out << c << ',' << format_double(values.front()) << ','
            << format_double(quantile(values, 0.25)) << ',' << format_double(quantile(values, 0.5))
            << ',' << format_double(quantile(values, 0.75)) << ','
            << format_double(values.back()) << '\n';
    }
    return out.str();
}

} // namespace

Stats summarize(std::vector<double> values)
{
    Stats s;
    s.count = static_cast<int>(values.size());
    if (values.empty())
        return s;
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values)
        sum += v;
    s.mean = sum / static_cast<double>(values.size());
    s.median = quantile(values, 0.5);
    s.q1 = quantile(values, 0.25);
    s.q3 = quantile(values, 0.75);
    s.min = values.front();
    s.max = values.back();
    return s;
}

SummaryStats summarize_reports(const std::vector<RunReport>& reports)
{
    SummaryStats summary;
    summary.repetitions = static_cast<int>(reports.size());
    if (reports.empty())
        return summary;

    std::vector<double> gens;
    std::vector<double> evals;
    std::vector<double> sat_count;
    for (const RunReport& r : reports) {
        gens.push_back(static_cast<double>(r.total_generations));
        evals.push_back(static_cast<double>(r.total_evaluations));
        sat_count.push_back(static_cast<double>(r.satisficing.size()));
    }
    summary.metrics.emplace_back("total_generations", summarize(std::move(gens)));
    summary.metrics.emplace_back("total_evaluations", summarize(std::move(evals)));
    summary.metrics.emplace_back("satisficing_count", summarize(std::move(sat_count)));

    for (std::size_t j = 0; j < reports.front().concepts.size(); ++j) {
        const std::string& id = reports.front().concepts[j].id;
        std::vector<double> concept_gens;
        std::vector<double> detection;
        for (const RunReport& r : reports) {
            concept_gens.push_back(static_cast<double>(r.concepts[j].generations));
            if (r.concepts[j].satisficing_generation >= 0)
                detection.push_back(static_cast<double>(r.concepts[j].satisficing_generation));
        }
        summary.metrics.emplace_back("generations." + id, summarize(std::move(concept_gens)));
        if (!detection.empty())
            summary.metrics.emplace_back("detection_generation." + id,
                                         summarize(std::move(detection)));
    }
    return summary;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const std::string& out_dir)
{
    spec.validate();

    ExperimentResult result;
    result.reports = run_repetitions(spec.base, spec.repetitions, spec.base.seed);
    result.summary = summarize_reports(result.reports);

    ArtifactWriter writer(out_dir);
    if (spec.outputs.contains(Artifact::report)) {
        for (std::size_t i = 0; i < result.reports.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof(name), "run_%04zu.json", i + 1);
            writer.write(name, report_to_json(result.reports[i]));
        }
    }
    if (spec.outputs.contains(Artifact::summary))
        writer.write("summary.csv", summary_csv(result.summary));
    if (spec.outputs.contains(Artifact::trajectories)) {
        for (std::size_t j = 0; j < spec.base.portfolio.size(); ++j)
            writer.write("trajectory_" + spec.base.portfolio[j].id + ".csv",
                         trajectory_csv(result.reports, j));
    }
    if (spec.outputs.contains(Artifact::boxplot))
        writer.write("boxplot.csv", boxplot_csv(result.reports));
    return result;
}

ComparisonResult compare_modes(const ExperimentSpec& spec, const std::string& out_dir)
{
    spec.validate();

    ComparisonResult result;
    RunConfig sim = spec.base;
    sim.mode = RunMode::simultaneous;
    RunConfig seq = spec.base;
    seq.mode = RunMode::sequential;
    result.simultaneous_reports = run_repetitions(sim, spec.repetitions, spec.base.seed);
    result.sequential_reports = run_repetitions(seq, spec.repetitions, spec.base.seed);

    const std::size_t n_concepts = spec.base.portfolio.size();
    const double reps = static_cast<double>(spec.repetitions);
    double sim_total = 0.0;
    double seq_total = 0.0;
    for (std::size_t j = 0; j < n_concepts; ++j) {
        ComparisonRow row;
        row.concept_id = spec.base.portfolio[j].id;
        for (const RunReport& r : result.simultaneous_reports)
            row.simultaneous_avg_gens += static_cast<double>(r.concepts[j].generations);
        for (const RunReport& r : result.sequential_reports)
            row.sequential_avg_gens += static_cast<double>(r.concepts[j].generations);
        row.simultaneous_avg_gens /= reps;
        row.sequential_avg_gens /= reps;
        sim_total += row.simultaneous_avg_gens;
        seq_total += row.sequential_avg_gens;
        result.rows.push_back(row);
    }
    result.rows.push_back({"Total", sim_total, seq_total});
    result.ratio = seq_total > 0.0 ? sim_total / seq_total : 0.0;

    if (!out_dir.empty()) {
        ArtifactWriter writer(out_dir);
        std::ostringstream out;
        out << "concept,simultaneous_avg_gens,sequential_avg_gens\n";
        for (const ComparisonRow& row : result.rows)
            out << row.concept_id << ',' << format_double(row.simultaneous_avg_gens) << ','
                << format_double(row.sequential_avg_gens) << '\n';
        writer.write("comparison.csv", out.str());
    }
    return result;
}

unsigned worker_count()
{
    const char* env = std::getenv("WOI_SEARCH_THREADS");
    if (!env)
        return 1;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        return 1;
    return static_cast<unsigned>(v);
}

} // namespace woi
