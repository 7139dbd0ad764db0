#pragma once

#include <cstdint>
#include <string>

namespace dive {

// 64-bit FNV-1a over a byte range; h chains across calls.
std::uint64_t fnv1a(const void* data, std::size_t n,
                    std::uint64_t h = 14695981039346656037ull);

// Hex digest of a whole file's bytes. Throws IoError when unreadable.
std::string fnv1a_hex_file(const std::string& path);

}  // namespace dive
