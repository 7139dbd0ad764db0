#pragma once

#include <functional>

#include "dive/tape.hpp"

namespace dive {

// Central-difference gradient estimate of f wrt every coordinate of param:
// (f(θ+h) − f(θ−h)) / 2h. f must re-evaluate the quantity of interest from
// the parameter's current payload (and clean up any tape nodes it creates);
// any stochastic inputs must be frozen across calls.
NumArray finite_diff_grad(const std::function<double()>& f, Value param, double h = 1e-5);

// max_i |a_i − b_i| / max(1, |a_i|, |b_i|) — the relative error used by the
// gradient-check suites.
double max_rel_err(const NumArray& a, const NumArray& b);

}  // namespace dive
