#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dive/tape.hpp"

namespace dive {

// Probabilities fed to op_log are expected to be clamped into this band.
inline constexpr double kProbEps = 1e-6;

Value op_matmul(Value a, Value b);

Value op_add(Value a, Value b);
Value op_add(Value a, double c);
Value op_sub(Value a, Value b);
Value op_sub(Value a, double c);
Value op_mul(Value a, Value b);
Value op_mul(Value a, double c);
Value op_div(Value a, Value b);
Value op_div(Value a, double c);

Value op_neg(Value v);
Value op_log(Value v);
Value op_exp(Value v);
Value op_sigmoid(Value v);
Value op_relu(Value v);
Value op_clamp(Value v, double lo, double hi);

Value op_sum(Value v, std::optional<int> axis = std::nullopt);
Value op_mean(Value v, std::optional<int> axis = std::nullopt);
Value op_concat(Value a, Value b, int axis);

// Value-preserving, gradient-annihilating.
Value op_stop_gradient(Value v);

Value op_reshape(Value v, Shape shape);

// Rows of v selected by idx; backward scatter-adds into the source rows.
Value op_gather_rows(Value v, const std::vector<std::size_t>& idx);

// Scatters a per-edge vector symmetrically into an n x n matrix:
// out[i,j] = out[j,i] = m[e] for edge e = (i, j).
Value op_scatter_edges(Value m, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                       std::size_t n);

// Adds vec[d] to every row of mat[n x d].
Value op_add_rowvec(Value mat, Value vec);

// Mean cross-entropy over rows with log-sum-exp stabilization. logits is
// [n x C] (or [C], treated as one row); labels are class indices in [0, C).
Value loss_cross_entropy(Value logits, const std::vector<int>& labels);

// Mean squared error against a constant target of identical shape.
Value loss_mse(Value pred, const NumArray& target);

}  // namespace dive
