#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dive/array.hpp"

namespace dive {

// Undirected edge in canonical form: u < v.
struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;

    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

struct Graph {
    std::uint32_t num_nodes = 0;
    std::vector<Edge> edges;  // canonical: u < v, sorted, unique
    NumArray node_features;   // [num_nodes x d_in]
    std::optional<NumArray> edge_features;              // [|E| x d_e]
    std::variant<int, double> label = 0;                // class index or regression target
    std::optional<std::vector<std::uint8_t>> gt_mask;   // per-edge, aligned with edges
    std::string env;

    int class_label() const;     // throws UsageError when label holds a double
    double target_value() const; // numeric value regardless of variant arm
};

enum class TaskKind { classification, regression };

struct TaskSpec {
    TaskKind kind = TaskKind::classification;
    int num_classes = 0;  // meaningful for classification only
};

struct Dataset {
    TaskSpec task;
    std::vector<Graph> graphs;
    std::map<std::string, std::vector<std::size_t>> splits;

    const std::vector<std::size_t>& split(const std::string& name) const;
};

// Sorts into canonical order, flipping (u,v) with u>v. Self-loops and
// duplicate edges are rejected.
std::vector<Edge> canonicalize_edges(std::vector<Edge> edges);

// Throws ValidationError naming the graph index (or split name) on the first
// violated invariant.
void validate_graph(const Graph& g, std::size_t index, const TaskSpec& task);
void validate_dataset(const Dataset& ds);

// Dense symmetric 0/1 adjacency with zero diagonal.
NumArray adjacency(const Graph& g);

using Batch = std::vector<std::size_t>;

// Seeded permutation of the split chopped into consecutive chunks; the last
// batch may be short. Empty split gives an empty list.
std::vector<Batch> make_batches(const std::vector<std::size_t>& split, std::size_t batch_size,
                                std::uint64_t seed);

}  // namespace dive
