#pragma once

#include <cstddef>
#include <vector>

#include "dive/tape.hpp"

namespace dive {

struct AdamConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 0.0;  // coupled (added to the gradient), not decoupled
};

struct AdamState {
    AdamConfig cfg;
    std::vector<NumArray> m;  // first moments, one per parameter
    std::vector<NumArray> v;  // second moments
    std::size_t t = 0;        // completed steps
};

// Moments start at zero with the parameters' shapes.
AdamState adam_init(const std::vector<Value>& params, AdamConfig cfg = {});

// One bias-corrected Adam update on every parameter from its accumulated
// gradient; gradients are zeroed afterward. params must be the same list (in
// order) the state was initialized with.
void adam_step(const std::vector<Value>& params, AdamState& state);

}  // namespace dive
