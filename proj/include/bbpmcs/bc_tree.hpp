#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bbpmcs/graph.hpp"

namespace bbpmcs {

// Block/bridge/cutvertex decomposition tree of a connected graph. B-nodes
// carry a skeleton (a K2 for bridges, the biconnected block otherwise);
// C-nodes exist only for cutvertices. The tree is bipartite between B- and
// C-nodes with an edge iff the cutvertex belongs to the block or bridge.
struct BcNode {
    enum class Kind { Cut, Bridge, Block };
    Kind kind;
    int cutvertex = -1;                             // Kind::Cut
    std::pair<int, int> bridge{-1, -1};             // Kind::Bridge, original ids
    std::vector<int> block_vertices;                // Kind::Block, ascending original ids
    std::vector<std::pair<int, int>> block_edges;   // Kind::Block, original ids
    std::vector<int> adj;                           // tree neighbors, ascending

    bool is_b_node() const { return kind != Kind::Cut; }
    // All original vertices represented by this node's skeleton.
    std::vector<int> skeleton_vertices() const;
};

struct BcTree {
    int graph_n = 0;
    std::vector<BcNode> nodes;
    std::vector<int> cnode_of;  // per vertex: C-node id or -1

    bool is_cutvertex(int v) const { return cnode_of[v] != -1; }
    std::vector<int> b_node_ids() const;
    std::vector<int> block_node_ids() const;
    std::vector<int> bridge_node_ids() const;
};

// pre: g connected, >= 2 vertices.
BcTree build_bc_tree(const Graph& g);

// Cheap per-root view; rooting never mutates the shared tree.
struct RootedBcTree {
    const BcTree* tree = nullptr;
    int root = -1;
    std::vector<int> parent;  // node id -> parent node id, -1 at root

    const BcTree& base() const { return *tree; }
};

// pre: root is a B-node of t.
RootedBcTree root_bc(const BcTree& t, int root_b_node);

// B-node children of cutvertex v's C-node, excluding the parent branch.
// Empty when v is not a cutvertex. Deterministic ascending order.
std::vector<int> cb_children(const RootedBcTree& rt, int v);

// Extract a block B-node's skeleton with local ids; vmap maps local -> original.
Graph block_skeleton(const BcNode& node, std::vector<int>& vmap);

std::string bc_tree_dot(const BcTree& t, const Graph& g);

}  // namespace bbpmcs
