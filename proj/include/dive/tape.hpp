#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dive/array.hpp"

namespace dive {

class Tape;

// Handle to a node on a Tape. Cheap to copy; invalidated when the tape is
// truncated past the node.
struct Value {
    Tape* tape = nullptr;
    std::size_t id = 0;

    bool valid() const { return tape != nullptr; }
    const NumArray& val() const;
    const NumArray& grad() const;
    bool requires_grad() const;
    const Shape& shape() const { return val().shape; }
    std::size_t numel() const { return val().numel(); }
    // Scalar payload convenience; throws unless numel == 1.
    double item() const;
};

// Reverse-mode computation tape. Nodes are appended in creation order, which
// is a topological order by construction; backward() walks it once in
// reverse, so each node's local rule runs exactly once and gradient
// accumulation order is deterministic.
//
// A tape is confined to one thread. Parameters are created first; mark() /
// truncate() reclaim the per-step subgraph built on top of them.
class Tape {
public:
    Tape() = default;
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;
    Tape(Tape&&) = default;
    Tape& operator=(Tape&&) = default;

    Value leaf(NumArray v, bool requires_grad = false);

    std::size_t size() const { return nodes_.size(); }
    std::size_t mark() const { return nodes_.size(); }
    void truncate(std::size_t mark);

    // Accumulates d(root)/d(node) into every reachable requires_grad node.
    // root must be scalar.
    void backward(Value root);

    NumArray& payload(Value v) { return nodes_[v.id].val; }
    const NumArray& payload(Value v) const { return nodes_[v.id].val; }
    NumArray& grad(Value v) { return nodes_[v.id].grad; }
    bool requires_grad(Value v) const { return nodes_[v.id].requires_grad; }
    const char* op_name(Value v) const { return nodes_[v.id].op; }
    void zero_grad(Value v);

    // Name of the first node holding a non-finite payload, searching in
    // creation order; empty string when everything is finite. Used for the
    // diagnostic on a non-finite loss.
    std::string first_nonfinite_op() const;

    // --- op-implementation interface ---
    // The backward fn receives the tape and the emitting node's own id, so a
    // rule reads its output gradient as tape.grad(Value{&tape, self}).
    using BackFn = std::function<void(Tape&, std::size_t)>;
    Value emit(const char* op, NumArray out, bool requires_grad, BackFn back);

private:
    struct Node {
        NumArray val;
        NumArray grad;  // allocated only when requires_grad
        bool requires_grad = false;
        const char* op = "";
        BackFn back;  // empty for leaves
    };
    std::vector<Node> nodes_;
};

// Sums src into dst; shapes must already agree.
void accumulate(NumArray& dst, const NumArray& src);

void backward(Value root);

}  // namespace dive
