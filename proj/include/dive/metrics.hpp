#pragma once

#include <string>
#include <vector>

#include "dive/model.hpp"

namespace dive {

double metric_accuracy(const std::vector<int>& preds, const std::vector<int>& labels);
double metric_mae(const std::vector<double>& preds, const std::vector<double>& targets);

struct Prf {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// Convention: with no predicted positives, P (and R, F1) are 1 when the
// ground truth is also empty, 0 otherwise. F1 is the harmonic mean with
// 0/0 -> 0.
Prf mask_prf(const std::vector<std::uint8_t>& pred, const std::vector<std::uint8_t>& gt);

struct MetricsRecord {
    std::string split;
    std::size_t model_idx = 0;
    double metric = 0.0;  // accuracy, or MAE for regression
    bool has_mask = false;
    std::vector<double> mask_p, mask_r, mask_f1;  // per graph, when gt_mask present
    double mean_p = 0.0, mean_r = 0.0, mean_f1 = 0.0;
    double mean_keep = 0.0;  // mean kept-edge fraction over graphs with edges
};

// Eval-mode pass of one collection member over a split. Tape nodes created
// per graph are reclaimed, so the collection is unchanged afterward.
MetricsRecord evaluate(Collection& col, std::size_t model_idx, const Dataset& ds,
                       const std::string& split);

struct SelectionReport {
    std::vector<double> member_metric;
    std::size_t chosen = 0;
    std::string metric_name;  // "accuracy" or "mae"
};

// Best member by validation metric (max accuracy / min MAE), ties to the
// lowest index.
SelectionReport select_best(Collection& col, const Dataset& ds, const std::string& val_split);

}  // namespace dive
