#pragma once

#include <memory>

#include "dive/checkpoint.hpp"
#include "dive/gnn.hpp"

namespace dive {

enum class Mode { train, eval };

// One standard Gumbel draw, -log(-log U), with U clamped away from {0,1} by
// 1e-12.
double gumbel_sample(Rng& rng);
NumArray gumbel_noise(Rng& rng, std::size_t n);

// Train-mode straight-through sample with caller-supplied noise (one draw
// per edge): q = sigma((log p + G)/tau), q' = 1[q > 0.5], m = q' + p -
// stop(p). value(m) == q' exactly and dm/dp == 1. The noise is an explicit
// argument so gradient checks can freeze it.
Value gumbel_sigmoid_mask(Value p, double tau, const NumArray& noise);
// Spec-shaped wrapper: train mode draws fresh noise from rng; eval mode is
// the deterministic threshold 1[p > 0.5] with no gradient.
Value gumbel_sigmoid_mask(Value p, double tau, Rng& rng, Mode mode);

struct EdgeMaskResult {
    Value p;    // [|E|] probabilities
    Value m;    // [|E|] straight-through samples (or eval threshold)
    Value a_p;  // [n x n] masked adjacency
};

struct Predictor {
    GnnParams extractor_gnn;
    MlpParams extractor_head;
    GnnParams classifier_gnn;
    MlpParams classifier_head;
};

struct CollectionConfig {
    std::size_t m = 2;        // collection size
    std::size_t d_in = 1;     // node feature width
    std::size_t hidden = 64;
    std::size_t layers = 3;
    std::size_t out_dim = 3;  // num classes, or 1 for regression
    double lambda = 0.5;
    double tau = 1.0;
    double dropout = 0.0;  // inverted dropout rate, off by default
    bool dropout_extractor = false;
    bool dropout_classifier = false;
};

// Tape lives behind a pointer so the collection can move without
// invalidating the Values that point at it.
struct Collection {
    CollectionConfig cfg;
    std::unique_ptr<Tape> tape;
    std::vector<Predictor> predictors;
    std::vector<Value> params;    // union of all predictors' parameters
    std::size_t params_mark = 0;  // truncate to here to drop per-step nodes
};

Collection make_collection(const CollectionConfig& cfg, std::uint64_t seed);

struct ForwardOut {
    Value logits;
    EdgeMaskResult mask;
};

// Extractor runs on the original adjacency; the classifier sees
// A_P = scatter(m) ⊙ A. a and x are leaves for adjacency(g) and
// g.node_features on the collection's tape (shareable across models).
ForwardOut forward_graph(Collection& col, std::size_t model_idx, const Graph& g, Value a,
                         Value x, Rng& rng, Mode mode);
// Convenience wrapper that creates the leaves itself.
ForwardOut forward_one(Collection& col, std::size_t model_idx, const Graph& g, Rng& rng,
                       Mode mode);

// inter/union on straight-through mask values; 0 when the union is
// degenerate (< 1e-9).
Value jaccard_pair(Value mi, Value mj);

// masks[k][b] is model k's mask for batch graph b. Mean over unordered model
// pairs, then over graphs.
Value jaccard_diversity(const std::vector<std::vector<Value>>& masks);

struct LossParts {
    std::vector<double> main;  // per-model batch-mean task loss
    double diversity = 0.0;    // L_d (0 when m == 1)
};

// Eq. (13): (1/m) sum_i L_main^i + lambda * L_d, built on the collection's
// tape in train mode with fresh noise per model per edge.
// lambda_scale multiplies the diversity weight for this call (train uses 0
// during lambda warmup); the reported LossParts::diversity is unscaled.
Value total_loss(Collection& col, const Dataset& ds, const Batch& batch, Rng& rng,
                 LossParts* parts = nullptr, double lambda_scale = 1.0);

// Checkpoint records named model{k}/{extractor|classifier}/{gnn\ell|mlp\ell}/{weight|bias}.

std::vector<CheckpointRecord> collection_records(const Collection& col);
void load_collection_params(Collection& col, const std::vector<CheckpointRecord>& records);
// Reads m / widths / layer count back out of checkpoint record names and
// shapes, so `eval` can rebuild a matching collection.
CollectionConfig infer_config(const std::vector<CheckpointRecord>& records);

}  // namespace dive
