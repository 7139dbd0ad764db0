#pragma once

#include <string>

#include "dive/graph.hpp"

namespace dive {

// Line-delimited JSON: one header line (format tag, task, splits), then one
// record per graph. Doubles serialize as shortest round-trip decimals, so
// save -> load is the identity and identical datasets produce identical
// bytes.
Dataset load_dataset(const std::string& path);
void save_dataset(const Dataset& ds, const std::string& path);

}  // namespace dive
