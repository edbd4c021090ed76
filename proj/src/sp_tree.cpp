#include "bbpmcs/sp_tree.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <sstream>

namespace bbpmcs {

int SpNode::pos_of(int orig_vertex) const {
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        if (verts[i] == orig_vertex) return i;
    return -1;
}

std::vector<int> SpTree::s_node_ids() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].kind == SpNode::Kind::S) out.push_back(i);
    return out;
}

std::vector<int> SpTree::p_node_ids() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].kind == SpNode::Kind::P) out.push_back(i);
    return out;
}

int SpTree::edge_to_neighbor(int node, int nbr) const {
    const auto& es = nodes[node].edges;
    for (int i = 0; i < static_cast<int>(es.size()); ++i)
        if (!es[i].real && es[i].pertinent == nbr) return i;
    return -1;
}

std::pair<int, int> SpTree::find_real_edge(int u, int v) const {
    for (int n = 0; n < static_cast<int>(nodes.size()); ++n) {
        const auto& nd = nodes[n];
        for (int i = 0; i < static_cast<int>(nd.edges.size()); ++i) {
            const auto& e = nd.edges[i];
            if (!e.real) continue;
            int x = nd.verts[e.a], y = nd.verts[e.b];
            if ((x == u && y == v) || (x == v && y == u)) return {n, i};
        }
    }
    return {-1, -1};
}

namespace {

// Multigraph under reduction. Each live work edge carries either a real
// block edge or the tree node already built for the part it replaced.
struct WorkGraph {
    struct WEdge {
        int a, b;
        int payload;  // -1 real, else node id
        bool alive;
    };
    std::vector<WEdge> we;
    std::vector<std::vector<int>> inc;  // vertex -> incident wedge ids (stale entries allowed)
    std::vector<int> deg;
    int live_edges = 0;

    explicit WorkGraph(const Graph& g) : inc(g.vertex_count()), deg(g.vertex_count(), 0) {
        for (auto [u, v] : g.edges()) add(u, v, -1);
    }
    int add(int a, int b, int payload) {
        int id = static_cast<int>(we.size());
        we.push_back({a, b, payload, true});
        inc[a].push_back(id);
        inc[b].push_back(id);
        ++deg[a];
        ++deg[b];
        ++live_edges;
        return id;
    }
    void kill(int id) {
        assert(we[id].alive);
        we[id].alive = false;
        --deg[we[id].a];
        --deg[we[id].b];
        --live_edges;
    }
    int other(int id, int v) const { return we[id].a == v ? we[id].b : we[id].a; }
    // Live incident wedge ids of v, ascending.
    std::vector<int> live_inc(int v) {
        auto& L = inc[v];
        L.erase(std::remove_if(L.begin(), L.end(), [&](int id) { return !we[id].alive; }), L.end());
        return L;
    }
};

struct Builder {
    const Graph& block;
    WorkGraph wg;
    std::vector<SpNode> nodes;
    std::vector<char> alive;
    std::vector<int> dangling;  // per node: edge index of the unresolved virtual, -1 when resolved

    explicit Builder(const Graph& g) : block(g), wg(g) {}

    int new_node(SpNode::Kind kind) {
        nodes.push_back(SpNode{kind, {}, {}, {}});
        alive.push_back(1);
        dangling.push_back(-1);
        return static_cast<int>(nodes.size()) - 1;
    }

    // Re-point the backlink of mu (currently pertinent to old_id) to new_id.
    void repoint_backlink(int mu, int old_id, int new_id) {
        for (auto& e : nodes[mu].edges)
            if (!e.real && e.pertinent == old_id) {
                e.pertinent = new_id;
                return;
            }
        assert(false && "missing backlink");
    }

    // Append the expansion of a work edge (s -> t) to the cycle of S-node
    // sigma under construction. verts already ends with s; after the call it
    // ends with t. Absorbs S-node payloads inline to keep the tree minimal.
    void expand_into_cycle(int sigma, const WorkGraph::WEdge& e, int s, int t) {
        auto& nd = nodes[sigma];
        auto emit = [&](bool real, int pert, int to_vertex) {
            int at = static_cast<int>(nd.verts.size()) - 1;
            nd.edges.push_back(SpEdge{at, at + 1, real, pert});
            nd.verts.push_back(to_vertex);
        };
        if (e.payload == -1) {
            emit(true, -1, t);
            return;
        }
        SpNode& child = nodes[e.payload];
        if (child.kind == SpNode::Kind::P) {
            emit(false, e.payload, t);
            assert(dangling[e.payload] != -1);
            child.edges[dangling[e.payload]].pertinent = sigma;
            dangling[e.payload] = -1;
            return;
        }
        // S-node payload: splice its cycle minus the unresolved virtual edge.
        int d = dangling[e.payload];
        assert(d != -1);
        int L = child.cycle_len();
        int p0 = child.verts[d], p1 = child.verts[(d + 1) % L];
        (void)p0;
        assert((p0 == s && p1 == t) || (p0 == t && p1 == s));
        for (int j = 0; j + 1 < L; ++j) {
            int epos, vnext;
            if (p1 == s) {  // forward: positions d+1, d+2, ...
                epos = (d + 1 + j) % L;
                vnext = child.verts[(epos + 1) % L];
            } else {  // reverse: positions d, d-1, ...
                epos = (d - 1 - j + 2 * L) % L;
                vnext = child.verts[epos];
            }
            const SpEdge& f = child.edges[epos];
            if (!f.real) repoint_backlink(f.pertinent, e.payload, sigma);
            emit(f.real, f.real ? -1 : f.pertinent, vnext);
        }
        assert(nd.verts.back() == t);
        alive[e.payload] = 0;
    }

    // Merge the bundle of all live work edges between a and b into a P-node.
    void reduce_parallel(int a, int b) {
        std::vector<int> bundle;
        for (int id : wg.live_inc(a))
            if (wg.other(id, a) == b) bundle.push_back(id);
        assert(bundle.size() >= 2);
        std::sort(bundle.begin(), bundle.end());
        int pi = new_node(SpNode::Kind::P);
        nodes[pi].verts = {a, b};
        for (int id : bundle) {
            const auto& e = wg.we[id];
            if (e.payload == -1) {
                nodes[pi].edges.push_back(SpEdge{0, 1, true, -1});
            } else if (nodes[e.payload].kind == SpNode::Kind::S) {
                nodes[pi].edges.push_back(SpEdge{0, 1, false, e.payload});
                assert(dangling[e.payload] != -1);
                nodes[e.payload].edges[dangling[e.payload]].pertinent = pi;
                dangling[e.payload] = -1;
            } else {
                // absorb a nested P bundle
                SpNode& child = nodes[e.payload];
                int d = dangling[e.payload];
                for (int i = 0; i < static_cast<int>(child.edges.size()); ++i) {
                    if (i == d) continue;
                    const SpEdge& f = child.edges[i];
                    if (!f.real) repoint_backlink(f.pertinent, e.payload, pi);
                    nodes[pi].edges.push_back(SpEdge{0, 1, f.real, f.real ? -1 : f.pertinent});
                }
                alive[e.payload] = 0;
            }
            wg.kill(id);
        }
        dangling[pi] = static_cast<int>(nodes[pi].edges.size());
        nodes[pi].edges.push_back(SpEdge{0, 1, false, -1});
        wg.add(a, b, pi);
    }

    // Replace the maximal degree-2 run through v by an S-node.
    void reduce_series(int v) {
        // walk to both ends of the run
        auto walk = [&](int start_edge, int from) {
            std::vector<int> verts{from}, edges;
            int e = start_edge, cur = from;
            while (true) {
                edges.push_back(e);
                cur = wg.other(e, cur);
                verts.push_back(cur);
                if (wg.deg[cur] != 2) break;
                auto li = wg.live_inc(cur);
                assert(li.size() == 2);
                e = li[0] == e ? li[1] : li[0];
            }
            return std::make_pair(verts, edges);
        };
        auto li = wg.live_inc(v);
        assert(li.size() == 2);
        auto [lv, le] = walk(li[0], v);
        auto [rv, re] = walk(li[1], v);
        // stitch: reverse(left) + right, centered on v
        std::vector<int> pverts(lv.rbegin(), lv.rend());
        pverts.insert(pverts.end(), rv.begin() + 1, rv.end());
        std::vector<int> pedges(le.rbegin(), le.rend());
        pedges.insert(pedges.end(), re.begin(), re.end());
        int a = pverts.front(), b = pverts.back();
        assert(a != b && wg.deg[a] != 2 && wg.deg[b] != 2);

        int sigma = new_node(SpNode::Kind::S);
        nodes[sigma].verts.push_back(a);
        for (size_t i = 0; i < pedges.size(); ++i)
            expand_into_cycle(sigma, wg.we[pedges[i]], pverts[i], pverts[i + 1]);
        // close the cycle with the unresolved virtual edge (b, a)
        int last = static_cast<int>(nodes[sigma].verts.size()) - 1;
        dangling[sigma] = static_cast<int>(nodes[sigma].edges.size());
        nodes[sigma].edges.push_back(SpEdge{last, 0, false, -1});

        for (int id : pedges) wg.kill(id);
        wg.add(a, b, sigma);
    }

    // The remaining work graph is a single cycle: one final S-node, no
    // unresolved virtual edge.
    void finalize_cycle(int start) {
        int sigma = new_node(SpNode::Kind::S);
        nodes[sigma].verts.push_back(start);
        int cur = start;
        int e = wg.live_inc(start)[0];
        while (true) {
            int nxt = wg.other(e, cur);
            bool closing = nxt == start;
            expand_into_cycle(sigma, wg.we[e], cur, nxt);
            int dead = e;
            if (!closing) {
                auto li = wg.live_inc(nxt);
                assert(li.size() == 2);
                e = li[0] == e ? li[1] : li[0];
            }
            wg.kill(dead);
            cur = nxt;
            if (closing) break;
        }
        // expand_into_cycle appended the start vertex again at the end; fold
        // the final edge back onto position 0.
        auto& nd = nodes[sigma];
        assert(nd.verts.back() == start);
        nd.verts.pop_back();
        nd.edges.back().b = 0;
        assert(nd.verts.size() == nd.edges.size());
    }

    // Exactly one work edge is left; its node becomes the tree as-is after
    // dropping the unresolved virtual edge (a bundle keeps >= 3 edges).
    void finalize_single_edge(int id) {
        int nu = wg.we[id].payload;
        assert(nu != -1 && nodes[nu].kind == SpNode::Kind::P);
        int d = dangling[nu];
        assert(d != -1);
        nodes[nu].edges.erase(nodes[nu].edges.begin() + d);
        dangling[nu] = -1;
        assert(nodes[nu].edges.size() >= 3);
        wg.kill(id);
    }

    SpTree run() {
        int n = block.vertex_count();
        while (true) {
            if (wg.live_edges == 1) {
                for (int id = 0; id < static_cast<int>(wg.we.size()); ++id)
                    if (wg.we[id].alive) {
                        finalize_single_edge(id);
                        break;
                    }
                break;
            }
            bool all_deg2 = true;
            int deg2 = -1, live_verts = 0;
            for (int v = 0; v < n; ++v) {
                if (wg.deg[v] == 0) continue;
                ++live_verts;
                if (wg.deg[v] == 2 && deg2 == -1) deg2 = v;
                if (wg.deg[v] != 2) all_deg2 = false;
            }
            if (all_deg2) {
                assert(live_verts >= 3);
                int start = 0;
                while (wg.deg[start] == 0) ++start;
                finalize_cycle(start);
                break;
            }
            // a parallel bundle first, otherwise a series run
            int pa = -1, pb = -1;
            for (int v = 0; v < n && pa == -1; ++v) {
                if (wg.deg[v] == 0) continue;
                std::map<int, int> seen;
                for (int id : wg.live_inc(v)) {
                    int w = wg.other(id, v);
                    if (w > v && ++seen[w] == 2) {
                        pa = v;
                        pb = w;
                        break;
                    }
                }
            }
            if (pa != -1) {
                reduce_parallel(pa, pb);
                continue;
            }
            if (deg2 == -1)
                throw PreconditionError("build_sp_tree: input is not series-parallel");
            reduce_series(deg2);
        }

        // compact dead nodes and derive tree adjacency
        SpTree t;
        std::vector<int> remap(nodes.size(), -1);
        for (size_t i = 0; i < nodes.size(); ++i)
            if (alive[i]) {
                remap[i] = static_cast<int>(t.nodes.size());
                t.nodes.push_back(std::move(nodes[i]));
            }
        for (auto& nd : t.nodes) {
            for (auto& e : nd.edges)
                if (!e.real) {
                    assert(e.pertinent != -1 && remap[e.pertinent] != -1);
                    e.pertinent = remap[e.pertinent];
                    nd.adj.push_back(e.pertinent);
                }
            std::sort(nd.adj.begin(), nd.adj.end());
            assert(std::adjacent_find(nd.adj.begin(), nd.adj.end()) == nd.adj.end());
        }
#ifndef NDEBUG
        for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
            const auto& nd = t.nodes[i];
            if (nd.kind == SpNode::Kind::S) assert(nd.cycle_len() >= 3);
            if (nd.kind == SpNode::Kind::P) assert(nd.edges.size() >= 3 || t.nodes.size() == 1);
            for (int j : nd.adj) {
                assert(t.nodes[j].kind != nd.kind);
                assert(t.edge_to_neighbor(j, i) != -1);
            }
        }
#endif
        return t;
    }
};

}  // namespace

SpTree build_sp_tree(const Graph& block) {
    if (!is_biconnected(block))
        throw PreconditionError("build_sp_tree requires a biconnected graph");
    Builder b(block);
    return b.run();
}

void remap_vertices(SpTree& t, const std::vector<int>& vmap) {
    for (auto& nd : t.nodes)
        for (auto& v : nd.verts) v = vmap[v];
}

Graph merge_back(const SpTree& t, int n) {
    Graph g(n);
    for (const auto& nd : t.nodes)
        for (const auto& e : nd.edges)
            if (e.real) {
                bool fresh = g.add_edge(nd.verts[e.a], nd.verts[e.b]);
                assert(fresh);
                (void)fresh;
            }
    return g;
}

std::vector<int> toward_table(const SpTree& t, int graph_n) {
    int k = static_cast<int>(t.nodes.size());
    std::vector<int> tab(static_cast<size_t>(k) * graph_n, kTowardOutside);
    auto at = [&](int node, int v) -> int& { return tab[static_cast<size_t>(node) * graph_n + v]; };
    for (int v = 0; v < graph_n; ++v) {
        std::queue<int> q;
        for (int i = 0; i < k; ++i)
            if (t.nodes[i].pos_of(v) != -1) {
                at(i, v) = kTowardSelf;
                q.push(i);
            }
        if (q.empty()) continue;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : t.nodes[x].adj)
                if (at(y, v) == kTowardOutside) {
                    at(y, v) = x;
                    q.push(y);
                }
        }
    }
    return tab;
}

RootedSpTree root_sp(const SpTree& t, int u, int v) {
    auto [node, edge] = t.find_real_edge(u, v);
    if (node == -1)
        throw PreconditionError("root_sp: {u,v} is not a real edge of any skeleton");
    RootedSpTree rt;
    rt.tree = &t;
    rt.root_node = node;
    rt.root_edge = edge;
    rt.parent.assign(t.nodes.size(), -1);
    rt.ref.assign(t.nodes.size(), -1);
    std::vector<char> seen(t.nodes.size(), 0);
    std::queue<int> q;
    q.push(node);
    seen[node] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : t.nodes[x].adj)
            if (!seen[y]) {
                seen[y] = 1;
                rt.parent[y] = x;
                rt.ref[y] = t.edge_to_neighbor(y, x);
                q.push(y);
            }
    }
    return rt;
}

std::vector<int> cs_children(const RootedSpTree& rt, int node, int edge_idx) {
    const SpTree& t = rt.base();
    const SpEdge& e = t.nodes[node].edges[edge_idx];
    if (e.real) throw PreconditionError("cs_children: edge is real");
    int pert = e.pertinent;
    if (t.nodes[pert].kind == SpNode::Kind::S) return {pert};
    std::vector<int> out;
    for (int y : t.nodes[pert].adj)
        if (y != rt.parent[pert] && y != node) out.push_back(y);
    return out;
}

std::pair<int, int> p_s(const RootedSpTree& rt, int node, int orig_vertex) {
    const SpTree& t = rt.base();
    if (node == rt.root_node) throw PreconditionError("p_s: node is the root");
    int r = rt.ref[node];
    const SpEdge& re = t.nodes[node].edges[r];
    if (t.nodes[node].verts[re.a] != orig_vertex && t.nodes[node].verts[re.b] != orig_vertex)
        throw PreconditionError("p_s: vertex is not an endpoint of the reference edge");
    int up = rt.parent[node];
    while (up != -1 && t.nodes[up].kind != SpNode::Kind::S) up = rt.parent[up];
    if (up == -1) throw PreconditionError("p_s: no ancestor S-node");
    int pos = t.nodes[up].pos_of(orig_vertex);
    assert(pos != -1);
    return {up, pos};
}

std::pair<int, int> next_step(const SpNode& s_node, int pos, int came_from_pos) {
    int L = s_node.cycle_len();
    assert(s_node.kind == SpNode::Kind::S && L >= 3);
    int fwd = (pos + 1) % L, bwd = (pos - 1 + L) % L;
    if (came_from_pos == fwd) return {bwd, bwd};           // edge index bwd joins bwd,pos
    if (came_from_pos == bwd) return {pos, fwd};           // edge index pos joins pos,fwd
    throw PreconditionError("next_step: came_from is not adjacent to pos");
}

std::pair<int, int> next_start(const SpNode& s_node, int start_edge, int pos) {
    const SpEdge& e = s_node.edges[start_edge];
    int other = e.a == pos ? e.b : e.a;
    assert(e.a == pos || e.b == pos);
    return next_step(s_node, pos, other);
}

bool is_outerplanar(const Graph& g) {
    if (!is_series_parallel(g))  // also checks connectivity
        throw PreconditionError("is_outerplanar requires a series-parallel graph");
    if (g.vertex_count() < 3) return true;
    auto dec = decompose_blocks(g);
    for (size_t i = 0; i < dec.blocks.size(); ++i) {
        Graph local(static_cast<int>(dec.blocks[i].size()));
        std::map<int, int> lid;
        for (size_t j = 0; j < dec.blocks[i].size(); ++j) lid[dec.blocks[i][j]] = static_cast<int>(j);
        for (auto [u, v] : dec.block_edges[i]) local.add_edge(lid[u], lid[v]);
        SpTree t = build_sp_tree(local);
        for (int p : t.p_node_ids())
            if (t.nodes[p].adj.size() > 2) return false;
    }
    return true;
}

std::string sp_tree_dot(const SpTree& t) {
    std::ostringstream os;
    os << "graph sp_tree {\n  compound=true;\n";
    for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
        const auto& nd = t.nodes[i];
        os << "  subgraph cluster" << i << " {\n    label=\""
           << (nd.kind == SpNode::Kind::S ? "S" : "P") << i << "\";\n";
        for (size_t p = 0; p < nd.verts.size(); ++p)
            os << "    n" << i << "_" << p << " [label=\"" << nd.verts[p] << "\"];\n";
        for (const auto& e : nd.edges) {
            os << "    n" << i << "_" << e.a << " -- n" << i << "_" << e.b;
            if (!e.real) os << " [style=dashed, label=\"->" << e.pertinent << "\"]";
            os << ";\n";
        }
        os << "  }\n";
    }
    for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i)
        for (int j : t.nodes[i].adj)
            if (i < j)
                os << "  n" << i << "_0 -- n" << j << "_0 [ltail=cluster" << i << ", lhead=cluster"
                   << j << ", style=dotted];\n";
    os << "}\n";
    return os.str();
}

}  // namespace bbpmcs
