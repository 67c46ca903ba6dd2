#pragma once

#include <map>
#include <string>
#include <vector>

#include "woi/config.hpp"
#include "woi/orchestrator.hpp"

namespace woi {

struct Stats {
    double mean = 0.0;
    double median = 0.0;
    double q1 = 0.0;
    double q3 = 0.0;
    double min = 0.0;
    double max = 0.0;
    int count = 0;
};

// Distribution summary of a sample; quartiles by linear interpolation on the
// sorted sample.
Stats summarize(std::vector<double> values);

struct SummaryStats {
    // insertion-ordered (metric name, stats) rows, as emitted to summary.csv
    std::vector<std::pair<std::string, Stats>> metrics;
    int repetitions = 0;
};

struct ExperimentResult {
    std::vector<RunReport> reports; // repetition order
    SummaryStats summary;
};

// Derives the summary metric rows from a set of per-run reports:
// total_generations, total_evaluations, satisficing_count, then per-concept
// generation counts and (where observed) detection generations.
SummaryStats summarize_reports(const std::vector<RunReport>& reports);

// Executes spec.repetitions seeded runs (seed + i) and persists the selected
// artifacts under out_dir. Repetitions run on up to WOI_SEARCH_THREADS
// workers (default 1); artifact files are written once all runs finished.
ExperimentResult run_experiment(const ExperimentSpec& spec, const std::string& out_dir);

struct ComparisonRow {
    std::string concept_id; // "Total" for the closing row
    double simultaneous_avg_gens = 0.0;
    double sequential_avg_gens = 0.0;
};

struct ComparisonResult {
    std::vector<ComparisonRow> rows; // per concept + Total
    double ratio = 0.0;              // simultaneous total / sequential total
    std::vector<RunReport> simultaneous_reports;
    std::vector<RunReport> sequential_reports;
};

// Runs both modes over matched seeds and tabulates per-concept and total
// average generations. Writes comparison.csv when out_dir is non-empty.
ComparisonResult compare_modes(const ExperimentSpec& spec, const std::string& out_dir);

// Worker cap from WOI_SEARCH_THREADS; absent or invalid -> 1.
unsigned worker_count();

} // namespace woi
