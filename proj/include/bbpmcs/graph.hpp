#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bbpmcs {

// Raised when an input document cannot be parsed. CLI maps this to exit 1.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an operation is called on a graph violating its precondition
// (disconnected, not series-parallel, ...). CLI maps this to exit 2.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Simple undirected graph over dense vertex indices 0..n-1.
// No self-loops, no duplicate edges. Optional vertex names are diagnostic
// labels only and never act as identity.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n) {
        if (n < 0) throw PreconditionError("vertex count must be non-negative");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Returns false (instead of inserting) for a duplicate edge.
    bool add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Normalized (u < v) pairs in insertion order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::vector<std::string> vertex_names;  // optional, may be empty

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw PreconditionError("vertex index out of range");
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Blocks (maximal biconnected subgraphs, >= 3 vertices), bridges (edges in
// no block) and cutvertices of a connected graph. Every edge lies in
// exactly one block or is exactly one bridge.
struct BlockDecomposition {
    std::vector<int> cutvertices;                       // ascending
    std::vector<std::vector<int>> blocks;               // vertex sets, ascending
    std::vector<std::vector<std::pair<int, int>>> block_edges;  // parallel to blocks
    std::vector<std::pair<int, int>> bridges;           // normalized pairs

    bool is_cutvertex(int v) const;
};

bool is_connected(const Graph& g);

// pre: g connected with at least 2 vertices.
BlockDecomposition decompose_blocks(const Graph& g);

// true iff |V| > 2, connected, and no cutvertex exists.
bool is_biconnected(const Graph& g);

// pre: g connected. True iff every block reduces to a single edge under
// repeated suppression of degree-2 vertices and merging of parallel edges.
bool is_series_parallel(const Graph& g);

// pre: g connected and series-parallel (error otherwise). True iff every
// P-node in every block's SP-tree has tree degree <= 2.
bool is_outerplanar(const Graph& g);

}  // namespace bbpmcs
