#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bbpmcs/graph.hpp"

namespace bbpmcs {

// Skeleton edge of an SP-tree node. Positions index into the node's verts;
// for an S-node, edges[i] joins cycle positions i and (i+1) mod L.
struct SpEdge {
    int a = -1, b = -1;
    bool real = false;
    int pertinent = -1;  // adjacent tree node when virtual
};

struct SpNode {
    enum class Kind { S, P };
    Kind kind;
    std::vector<int> verts;   // original vertex ids; S: cycle order, P: the two poles
    std::vector<SpEdge> edges;
    std::vector<int> adj;     // tree neighbors, ascending

    int cycle_len() const { return static_cast<int>(verts.size()); }
    int orig(int pos) const { return verts[pos]; }
    int pos_of(int orig_vertex) const;  // -1 if absent
};

// Series-parallel composition tree of one biconnected block. Every node is
// an S-node (chordless cycle skeleton) or P-node (parallel bundle); adjacent
// nodes cross-reference each other through exactly one virtual edge each,
// and replacing every virtual edge by its pertinent skeleton reproduces the
// block exactly.
struct SpTree {
    std::vector<SpNode> nodes;

    std::vector<int> s_node_ids() const;
    std::vector<int> p_node_ids() const;
    // Index of the virtual edge in `node` pertinent to `nbr` (-1 if none).
    int edge_to_neighbor(int node, int nbr) const;
    // Locate the unique skeleton in which the original pair {u,v} is a real
    // edge; returns {node, edge index} or {-1,-1}.
    std::pair<int, int> find_real_edge(int u, int v) const;
};

// pre: block biconnected (hence >= 3 vertices) and series-parallel.
SpTree build_sp_tree(const Graph& block);

// Rewrite skeleton vertex ids through vmap (local block ids -> originals).
void remap_vertices(SpTree& t, const std::vector<int>& vmap);

// SP4 reconstruction: the union of all real skeleton edges.
Graph merge_back(const SpTree& t, int n);

// For each (node, original vertex): first tree hop toward the vertex.
constexpr int kTowardSelf = -1;    // vertex is in this node's skeleton
constexpr int kTowardOutside = -2; // vertex not in the block at all
std::vector<int> toward_table(const SpTree& t, int graph_n);

// Per-root-edge view; rooting never mutates the shared tree.
struct RootedSpTree {
    const SpTree* tree = nullptr;
    int root_node = -1;
    int root_edge = -1;        // real edge index in S_{root_node}
    std::vector<int> parent;   // node id -> parent node id, -1 at root
    std::vector<int> ref;      // node id -> edge index pertinent to parent, -1 at root

    const SpTree& base() const { return *tree; }
};

// pre: {u,v} is a real edge of exactly one skeleton.
RootedSpTree root_sp(const SpTree& t, int u, int v);

// Children behind a virtual edge: the S-node children of the pertinent
// P-node (excluding the branch containing the edge), or a singleton when
// the pertinent node is an S-node. Ascending order.
std::vector<int> cs_children(const RootedSpTree& rt, int node, int edge_idx);

// Representative of `orig_vertex` in the next S-node on the path to the
// root. pre: node is not the root and orig_vertex is an endpoint of
// ref(node). Returns {ancestor node, position}.
std::pair<int, int> p_s(const RootedSpTree& rt, int node, int orig_vertex);

// Walk step in an S-node cycle: the incident edge toward the neighbor of
// pos that is not came_from. Returns {edge index, next position}.
std::pair<int, int> next_step(const SpNode& s_node, int pos, int came_from_pos);
// First step: direction fixed away from the other endpoint of start_edge.
std::pair<int, int> next_start(const SpNode& s_node, int start_edge, int pos);

std::string sp_tree_dot(const SpTree& t);

}  // namespace bbpmcs
