#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dive/graph.hpp"
#include "dive/rng.hpp"

namespace dive {

// Label-determining motifs and label-irrelevant bases. The enumerator order
// fixes both the class labels (label = motif index) and the spurious pairing
// used by concept shift: house<->wheel, cycle<->tree, crane<->ladder, i.e.
// equal indices.
enum class MotifKind : int { house = 0, cycle = 1, crane = 2 };
enum class BaseKind : int { wheel = 0, tree = 1, ladder = 2 };

const char* to_string(MotifKind k);
const char* to_string(BaseKind k);
MotifKind motif_from_string(const std::string& s);
BaseKind base_from_string(const std::string& s);

inline constexpr std::uint32_t kMotifNodes = 5;

// wheel: hub 0 joined to every rim node plus the rim cycle, 2(n-1) edges,
// n >= 4. tree: uniform random attachment, n-1 edges, n >= 2. ladder: two
// rails of n/2 with rungs, 3(n/2)-2 edges, n even >= 4. Only the tree
// consumes randomness.
std::vector<Edge> gen_base(BaseKind kind, std::uint32_t n, Rng& rng);

struct MotifTemplate {
    std::uint32_t num_nodes = kMotifNodes;
    std::vector<Edge> edges;
};

// house: 4-cycle plus an apex on two adjacent cycle nodes (6 edges).
// cycle: C5 (5 edges). crane: triangle with pendant legs on two distinct
// corners (5 edges).
MotifTemplate gen_motif(MotifKind kind);

struct MotifSpec {
    MotifKind motif_kind = MotifKind::house;
    BaseKind base_kind = BaseKind::wheel;
    std::uint32_t base_size = 15;
    double bias = 0.0;       // config echo; gen_graph does not draw from it
    std::uint64_t seed = 0;  // config echo
};

// Base on nodes [0, base_size), motif appended, joined by one uniform bridge
// edge. label = motif index; gt_mask marks motif-internal edges only (the
// bridge is false); env names the base kind; node features are constant 1.
Graph gen_graph(const MotifSpec& spec, Rng& rng);

enum class ShiftMode { covariate, concept_shift };

struct SizeRange {
    std::uint32_t lo = 15;
    std::uint32_t hi = 25;
};

struct GenConfig {
    std::size_t n_train = 1000;
    std::size_t n_val = 500;
    std::size_t n_test = 500;
    std::size_t n_id_val = 0;  // extra train-distribution split for ID validation
    ShiftMode shift = ShiftMode::concept_shift;
    double bias_train = 0.9;
    double bias_val = 1.0 / 3.0;
    double bias_test = 1.0 / 3.0;
    SizeRange size_train;
    SizeRange size_val;
    SizeRange size_test;
    std::uint64_t seed = 0;
};

struct SplitStats {
    std::size_t count = 0;
    std::array<std::size_t, 3> label_counts{};
    std::array<std::size_t, 3> base_counts{};
    double realized_bias = 0.0;  // fraction with base == pairing[label]
};

struct GenResult {
    Dataset dataset;
    std::map<std::string, SplitStats> stats;
};

// ParameterError on zero split counts, biases outside [0, 1], or size
// ranges that are empty or start below 6.
void check_config(const GenConfig& cfg);

// Splits in graph-index order: train, val, test, then id_val when requested.
// Labels are balanced per split (shuffled); per-graph seeds derive from
// (seed, split, index) so output is independent of generation order.
GenResult gen_dataset(const GenConfig& cfg);

// Manifest sidecar body: the config, realized per-split statistics, and the
// dataset file's content hash.
std::string manifest_json(const GenConfig& cfg, const std::map<std::string, SplitStats>& stats,
                          const std::string& dataset_hash);

}  // namespace dive
