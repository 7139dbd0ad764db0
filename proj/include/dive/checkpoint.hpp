#pragma once

#include <string>
#include <vector>

#include "dive/array.hpp"

namespace dive {

struct CheckpointRecord {
    std::string name;
    NumArray value;
};

// Flat binary container: 4-byte magic "DIVC", one version byte, u32 record
// count, then per record u32 name length + bytes, u32 rank, u64 dims,
// little-endian f64 payload. Record order is preserved.
void save_checkpoint(const std::string& path, const std::vector<CheckpointRecord>& records);
std::vector<CheckpointRecord> load_checkpoint(const std::string& path);

}  // namespace dive
