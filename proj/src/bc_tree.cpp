#include "bbpmcs/bc_tree.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace bbpmcs {

std::vector<int> BcNode::skeleton_vertices() const {
    switch (kind) {
        case Kind::Cut: return {cutvertex};
        case Kind::Bridge: return {bridge.first, bridge.second};
        case Kind::Block: return block_vertices;
    }
    return {};
}

std::vector<int> BcTree::b_node_ids() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].is_b_node()) out.push_back(i);
    return out;
}

std::vector<int> BcTree::block_node_ids() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].kind == BcNode::Kind::Block) out.push_back(i);
    return out;
}

std::vector<int> BcTree::bridge_node_ids() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].kind == BcNode::Kind::Bridge) out.push_back(i);
    return out;
}

BcTree build_bc_tree(const Graph& g) {
    if (g.vertex_count() < 2) throw PreconditionError("build_bc_tree needs at least 2 vertices");
    auto dec = decompose_blocks(g);  // also rejects disconnected inputs

    BcTree t;
    t.graph_n = g.vertex_count();
    t.cnode_of.assign(g.vertex_count(), -1);

    // B-nodes first (blocks then bridges), then C-nodes.
    for (size_t i = 0; i < dec.blocks.size(); ++i) {
        BcNode n;
        n.kind = BcNode::Kind::Block;
        n.block_vertices = dec.blocks[i];
        n.block_edges = dec.block_edges[i];
        t.nodes.push_back(std::move(n));
    }
    for (auto br : dec.bridges) {
        BcNode n;
        n.kind = BcNode::Kind::Bridge;
        n.bridge = br;
        t.nodes.push_back(std::move(n));
    }
    for (int v : dec.cutvertices) {
        BcNode n;
        n.kind = BcNode::Kind::Cut;
        n.cutvertex = v;
        t.cnode_of[v] = static_cast<int>(t.nodes.size());
        t.nodes.push_back(std::move(n));
    }

    for (int b = 0; b < static_cast<int>(t.nodes.size()); ++b) {
        if (!t.nodes[b].is_b_node()) continue;
        for (int v : t.nodes[b].skeleton_vertices()) {
            int c = t.cnode_of[v];
            if (c != -1) {
                t.nodes[b].adj.push_back(c);
                t.nodes[c].adj.push_back(b);
            }
        }
    }
    for (auto& n : t.nodes) std::sort(n.adj.begin(), n.adj.end());
    return t;
}

RootedBcTree root_bc(const BcTree& t, int root_b_node) {
    if (root_b_node < 0 || root_b_node >= static_cast<int>(t.nodes.size()) ||
        !t.nodes[root_b_node].is_b_node())
        throw PreconditionError("root_bc: root must be a B-node of the tree");
    RootedBcTree rt;
    rt.tree = &t;
    rt.root = root_b_node;
    rt.parent.assign(t.nodes.size(), -1);
    std::vector<char> seen(t.nodes.size(), 0);
    std::queue<int> q;
    q.push(root_b_node);
    seen[root_b_node] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.nodes[v].adj)
            if (!seen[w]) {
                seen[w] = 1;
                rt.parent[w] = v;
                q.push(w);
            }
    }
    return rt;
}

std::vector<int> cb_children(const RootedBcTree& rt, int v) {
    const BcTree& t = rt.base();
    if (v < 0 || v >= t.graph_n) throw PreconditionError("cb_children: vertex out of range");
    int c = t.cnode_of[v];
    if (c == -1) return {};
    std::vector<int> out;
    for (int b : t.nodes[c].adj)
        if (b != rt.parent[c]) out.push_back(b);
    return out;  // adj is ascending already
}

Graph block_skeleton(const BcNode& node, std::vector<int>& vmap) {
    assert(node.kind == BcNode::Kind::Block);
    vmap = node.block_vertices;
    std::unordered_map<int, int> local;
    for (size_t i = 0; i < vmap.size(); ++i) local[vmap[i]] = static_cast<int>(i);
    Graph g(static_cast<int>(vmap.size()));
    for (auto [u, v] : node.block_edges) g.add_edge(local[u], local[v]);
    return g;
}

std::string bc_tree_dot(const BcTree& t, const Graph& g) {
    std::ostringstream os;
    auto name = [&](int v) {
        if (v < static_cast<int>(g.vertex_names.size()) && !g.vertex_names[v].empty())
            return g.vertex_names[v];
        return std::to_string(v);
    };
    os << "graph bc_tree {\n";
    for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
        const auto& n = t.nodes[i];
        os << "  n" << i << " [";
        switch (n.kind) {
            case BcNode::Kind::Cut:
                os << "shape=circle, label=\"" << name(n.cutvertex) << "\"";
                break;
            case BcNode::Kind::Bridge:
                os << "shape=box, label=\"" << name(n.bridge.first) << "-" << name(n.bridge.second)
                   << "\"";
                break;
            case BcNode::Kind::Block: {
                os << "shape=box, style=filled, fillcolor=lightgray, label=\"{";
                for (size_t k = 0; k < n.block_vertices.size(); ++k)
                    os << (k ? "," : "") << name(n.block_vertices[k]);
                os << "}\"";
                break;
            }
        }
        os << "];\n";
    }
    for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i)
        for (int j : t.nodes[i].adj)
            if (i < j) os << "  n" << i << " -- n" << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace bbpmcs
