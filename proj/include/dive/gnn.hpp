#pragma once

#include <optional>
#include <vector>

#include "dive/graph.hpp"
#include "dive/ops.hpp"
#include "dive/rng.hpp"

namespace dive {

struct DenseLayer {
    Value weight;  // [in x out]
    Value bias;    // [out]
};

struct GnnParams {
    std::vector<DenseLayer> layers;
};

struct MlpParams {
    std::vector<DenseLayer> layers;  // two: hidden, output
};

// Glorot-uniform weights, uniform(+-1/sqrt(fan_in)) biases (nonzero so a
// ReLU stack over constant features does not collapse to rank 1), all
// requires_grad.
GnnParams make_gnn(Tape& tape, std::size_t d_in, std::size_t hidden, std::size_t n_layers,
                   Rng& rng);
MlpParams make_mlp(Tape& tape, std::size_t d_in, std::size_t hidden, std::size_t d_out, Rng& rng);

void append_params(std::vector<Value>& out, const GnnParams& p);
void append_params(std::vector<Value>& out, const MlpParams& p);

// Inverted dropout on hidden activations; inactive when rng is null or rate
// is 0 (eval mode passes null).
struct GcnDropout {
    double rate = 0.0;
    Rng* rng = nullptr;
};

// L rounds of H <- ReLU(D^{-1/2} (A_eff + I) D^{-1/2} H W + b), D = degree of
// (A_eff + I). Differentiable wrt A_eff entries as well as parameters.
Value gcn_forward(const GnnParams& params, Value a_eff, Value x,
                  const GcnDropout& dropout = {});

// ReLU hidden layer, linear output layer.
Value mlp_forward(const MlpParams& params, Value x, const GcnDropout& dropout = {});

// Per canonical edge (i, j): sigma(MLP([z_i, z_j])), or with edge features
// sigma(MLP([z_i + e, z_j + e])) (Eq. 3's elementwise sum), clamped into
// [kProbEps, 1 - kProbEps]. Result is rank-1 [|E|].
Value edge_prob(const MlpParams& params, Value z, const std::vector<Edge>& edges,
                std::optional<Value> e_feat = std::nullopt);

// Mean-pools gcn_forward(a_p, x) over nodes and maps through the head MLP;
// rank-1 logits [C] (or [1] for regression).
Value readout_classify(const GnnParams& params_feat, const MlpParams& params_head, Value a_p,
                       Value x, const GcnDropout& dropout = {});

}  // namespace dive
