#include "bbpmcs/graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stack>

namespace bbpmcs {

bool Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loops are not allowed");
    if (has_edge(u, v)) return false;
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    return true;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
}

bool BlockDecomposition::is_cutvertex(int v) const {
    return std::binary_search(cutvertices.begin(), cutvertices.end(), v);
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::stack<int> st;
    st.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int v = st.top();
        st.pop();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                st.push(w);
            }
    }
    return cnt == n;
}

namespace {

// Iterative Hopcroft-Tarjan: DFS with low-points, stacking edges so each
// biconnected component pops as a unit.
struct BlockDfs {
    const Graph& g;
    std::vector<int> num, low, parent;
    std::vector<char> is_cut;
    std::vector<std::pair<int, int>> edge_stack;
    BlockDecomposition out;
    int timer = 0;

    explicit BlockDfs(const Graph& g)
        : g(g),
          num(g.vertex_count(), -1),
          low(g.vertex_count(), 0),
          parent(g.vertex_count(), -1),
          is_cut(g.vertex_count(), 0) {}

    void pop_component(int u, int v) {
        std::vector<std::pair<int, int>> comp;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(e);
            if (e == std::make_pair(std::min(u, v), std::max(u, v))) break;
        }
        if (comp.size() == 1) {
            out.bridges.push_back(comp[0]);
            return;
        }
        std::vector<int> verts;
        for (auto [a, b] : comp) {
            verts.push_back(a);
            verts.push_back(b);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::sort(comp.begin(), comp.end());
        out.blocks.push_back(std::move(verts));
        out.block_edges.push_back(std::move(comp));
    }

    void run(int root) {
        struct Frame {
            int v;
            size_t i;
        };
        std::vector<Frame> st;
        num[root] = low[root] = timer++;
        st.push_back({root, 0});
        int root_children = 0;
        while (!st.empty()) {
            auto& [v, i] = st.back();
            if (i < g.neighbors(v).size()) {
                int w = g.neighbors(v)[i++];
                if (num[w] == -1) {
                    parent[w] = v;
                    if (v == root) ++root_children;
                    edge_stack.emplace_back(std::min(v, w), std::max(v, w));
                    num[w] = low[w] = timer++;
                    st.push_back({w, 0});
                } else if (w != parent[v] && num[w] < num[v]) {
                    edge_stack.emplace_back(std::min(v, w), std::max(v, w));
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                st.pop_back();
                if (!st.empty()) {
                    int p = st.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) {
                        if (p != root) is_cut[p] = 1;
                        pop_component(p, v);
                    }
                }
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
};

}  // namespace

BlockDecomposition decompose_blocks(const Graph& g) {
    if (g.vertex_count() < 2) throw PreconditionError("decompose_blocks needs at least 2 vertices");
    if (!is_connected(g)) throw PreconditionError("decompose_blocks requires a connected graph");
    BlockDfs dfs(g);
    dfs.run(0);
    assert(dfs.edge_stack.empty());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dfs.is_cut[v]) dfs.out.cutvertices.push_back(v);
    std::sort(dfs.out.bridges.begin(), dfs.out.bridges.end());
    return std::move(dfs.out);
}

bool is_biconnected(const Graph& g) {
    if (g.vertex_count() <= 2) return false;
    if (!is_connected(g)) return false;
    auto d = decompose_blocks(g);
    return d.cutvertices.empty() && d.bridges.empty() && d.blocks.size() == 1;
}

namespace {

// Multigraph scratch copy for the series-parallel reduction. Parallel edges
// arise during reduction even though inputs are simple.
struct MultiGraph {
    // cnt[v] maps neighbor -> multiplicity
    std::vector<std::map<int, int>> cnt;
    std::vector<int> deg;
    int live_vertices = 0;

    explicit MultiGraph(int n) : cnt(n), deg(n, 0) {}

    void add(int u, int v) {
        if (cnt[u].empty()) ++live_vertices;
        if (cnt[v].empty()) ++live_vertices;
        ++cnt[u][v];
        ++cnt[v][u];
        ++deg[u];
        ++deg[v];
    }
    void remove_all(int u, int v) {
        int m = cnt[u][v];
        deg[u] -= m;
        deg[v] -= m;
        cnt[u].erase(v);
        cnt[v].erase(u);
        if (cnt[u].empty()) --live_vertices;
        if (cnt[v].empty()) --live_vertices;
    }
};

// Reduce one block to (hopefully) a single edge.
bool block_reduces(const std::vector<std::pair<int, int>>& edges, int n) {
    MultiGraph mg(n);
    for (auto [u, v] : edges) mg.add(u, v);
    while (true) {
        if (mg.live_vertices == 2) {
            for (int v = 0; v < n; ++v)
                if (!mg.cnt[v].empty() && mg.cnt[v].begin()->second >= 1) return true;
        }
        // merge one parallel bundle if any
        bool merged = false;
        for (int v = 0; v < n && !merged; ++v)
            for (auto& [w, m] : mg.cnt[v])
                if (m >= 2 && v < w) {
                    mg.deg[v] -= m - 1;
                    mg.deg[w] -= m - 1;
                    mg.cnt[v][w] = 1;
                    mg.cnt[w][v] = 1;
                    merged = true;
                    break;
                }
        if (merged) continue;
        // suppress one degree-2 vertex; neighbors are distinct here since no
        // parallel edges remain
        bool suppressed = false;
        for (int v = 0; v < n && !suppressed; ++v)
            if (mg.deg[v] == 2 && mg.live_vertices > 2) {
                auto it = mg.cnt[v].begin();
                int a = it->first;
                int b = std::next(it) == mg.cnt[v].end() ? a : std::next(it)->first;
                if (a == b) continue;  // parallel pair, handled by merge rule
                mg.remove_all(v, a);
                mg.remove_all(v, b);
                mg.add(a, b);
                suppressed = true;
            }
        if (!suppressed) return false;  // stalled: K4-minor present
    }
}

}  // namespace

bool is_series_parallel(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("is_series_parallel requires a connected graph");
    if (g.vertex_count() < 3) return true;
    auto dec = decompose_blocks(g);
    for (size_t i = 0; i < dec.blocks.size(); ++i)
        if (!block_reduces(dec.block_edges[i], g.vertex_count())) return false;
    return true;
}

}  // namespace bbpmcs
