#pragma once

#include "dive/adam.hpp"
#include "dive/metrics.hpp"

namespace dive {

struct TrainConfig {
    double lr = 1e-3;
    double weight_decay = 0.0;
    // epochs trained before the diversity term is switched on. Adam rescales
    // any constant-sign gradient to full lr-sized steps, so with untrained
    // classifiers even a tiny diversity weight drives every mask to empty
    // (an absorbing state: an empty subgraph has constant logits and zero
    // task gradient). Classifiers trained first supply the counter-pressure
    // that makes the masks specialize instead of die.
    std::size_t lambda_warmup = 0;
    std::size_t batch_size = 32;
    std::size_t max_epochs = 300;
    std::size_t patience = 50;
    std::uint64_t seed = 0;
    std::string train_split = "train";
    std::string val_split = "val";  // "id_val" for ID-validation mode
    std::string log_path;           // per-epoch JSONL when nonempty
};

struct EpochRecord {
    std::size_t epoch = 0;
    double total_loss = 0.0;  // batch mean of Eq. (13)
    double diversity = 0.0;   // batch mean of L_d
    std::vector<double> train_loss;  // per-model batch-mean task loss
    std::vector<double> val_metric;  // per-model
    std::vector<double> val_keep;    // per-model mean kept-edge fraction, eval mode
    std::vector<double> val_mask_p, val_mask_r, val_mask_f1;  // empty when split lacks gt_mask
};

struct TrainResult {
    std::vector<EpochRecord> log;
    std::size_t epochs_run = 0;
    std::size_t best_epoch = 0;
    double best_metric = 0.0;  // best member's val metric at best_epoch
};

// Algorithm: per epoch, shuffled batches; per batch one joint Adam step on
// the total loss. Early-stops when the best member's validation metric has
// not improved for `patience` epochs; parameters are restored to the
// best-epoch snapshot before returning. Aborts with NumericError (naming the
// first non-finite tensor) on a non-finite loss.
TrainResult train(Collection& col, const Dataset& ds, const TrainConfig& cfg);

}  // namespace dive
