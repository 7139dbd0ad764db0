#pragma once

#include <map>
#include <string>
#include <vector>

#include "dive/config.hpp"
#include "dive/metrics.hpp"

namespace dive {

struct TrialResult {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    SelectionReport selection;
    std::vector<MetricsRecord> records;  // model-major, split order inside
    std::size_t epochs_run = 0;
    std::size_t best_epoch = 0;
};

struct ExperimentResult {
    std::string outdir;
    std::string dataset_hash;
    std::string metric_name;  // "accuracy" or "mae"
    std::vector<std::string> split_names;
    std::vector<TrialResult> trials;
    // selected-member task metric across trials, per split
    std::map<std::string, double> mean_by_split;
    std::map<std::string, double> std_by_split;  // sample std, 0 for one trial
};

// Trains `trials` collections (trial t uses seed + t) on one shared dataset
// and persists everything under cfg.outdir:
//   config.txt              resolved config snapshot
//   dataset.jsonl           when generated inline
//   manifest.json           generator stats (or source path) + content hash
//   trial<t>/metrics.jsonl  per-epoch training log
//   trial<t>/checkpoint.bin best-epoch parameters
//   trial<t>/selection.json validation metrics and the chosen member
//   trial<t>/mask_test.csv  per-graph mask P/R/F1 on the test split
//   summary.csv             one row per (trial, model, split) plus
//                           mean/std rows for the selected member
ExperimentResult run_experiment(const ExperimentConfig& cfg);

struct SweepRow {
    double value = 0.0;
    double mean = 0.0;   // selected member on the test split
    double stdev = 0.0;
    std::string manifest_hash;
};

// axis is "lambda" or "collection_size". The dataset is generated once under
// base.outdir and shared by every point, so all rows carry the same manifest
// hash. Each point runs in base.outdir/<axis>_<value>; rows land in
// base.outdir/sweep.csv.
std::vector<SweepRow> run_sweep(const ExperimentConfig& base, const std::string& axis,
                                const std::vector<double>& values);

}  // namespace dive
