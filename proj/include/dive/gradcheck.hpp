#pragma once

#include <string>
#include <vector>

namespace dive {

struct GradCheckResult {
    std::string name;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

// Central finite differences (h = 1e-5) against backward() for every engine
// op, the GCN/extractor heads, and the full 2-model DIVE loss on a 6-node
// fixture with frozen Gumbel noise. Smooth ops are held to 1e-6, composites
// with kinks to 1e-4.
std::vector<GradCheckResult> run_gradcheck_suite();

bool all_passed(const std::vector<GradCheckResult>& results);

}  // namespace dive
