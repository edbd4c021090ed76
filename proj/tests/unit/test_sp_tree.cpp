#include <doctest.h>

#include <algorithm>
#include <set>

#include "bbpmcs/sp_tree.hpp"
#include "generators.hpp"

using namespace bbpmcs;
namespace ts = bbpmcs::testsupport;

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

// a,b adjacent plus the paths a-c-b and a-d-b
Graph diamond() { return from_edges(4, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}}); }
Graph c4() { return from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
Graph k23() { return from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

bool same_scaffold(const SpTree& t, const Graph& g, int n) {
    Graph back = merge_back(t, n);
    if (back.edge_count() != g.edge_count()) return false;
    for (auto [u, v] : g.edges())
        if (!back.has_edge(u, v)) return false;
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("sp_tree");

TEST_CASE("a plain cycle is one S-node with every edge real") {
    SpTree t = build_sp_tree(c4());
    REQUIRE(t.nodes.size() == 1);
    CHECK(t.nodes[0].kind == SpNode::Kind::S);
    CHECK(t.nodes[0].cycle_len() == 4);
    for (const auto& e : t.nodes[0].edges) CHECK(e.real);
    CHECK(same_scaffold(t, c4(), 4));
}

TEST_CASE("diamond: one P-node with three parallel edges and two S-children") {
    SpTree t = build_sp_tree(diamond());
    REQUIRE(t.p_node_ids().size() == 1);
    REQUIRE(t.s_node_ids().size() == 2);
    const SpNode& p = t.nodes[t.p_node_ids()[0]];
    CHECK(p.edges.size() == 3);
    int real = 0, virt = 0;
    for (const auto& e : p.edges) e.real ? ++real : ++virt;
    CHECK(real == 1);
    CHECK(virt == 2);
    CHECK((std::set<int>{p.verts[0], p.verts[1]} == std::set<int>{0, 1}));
    for (int s : t.s_node_ids()) {
        const SpNode& nd = t.nodes[s];
        CHECK(nd.cycle_len() == 3);
        int sreal = 0, svirt = 0;
        for (const auto& e : nd.edges) e.real ? ++sreal : ++svirt;
        CHECK(sreal == 2);
        CHECK(svirt == 1);
        int vi = t.edge_to_neighbor(s, t.p_node_ids()[0]);
        REQUIRE(vi != -1);
        std::set<int> ends{nd.verts[nd.edges[vi].a], nd.verts[nd.edges[vi].b]};
        CHECK((ends == std::set<int>{0, 1}));
    }
    CHECK(same_scaffold(t, diamond(), 4));
}

TEST_CASE("block with a potential separator decomposes into one P with three S") {
    // cycle u-v-w-z plus the path u-y-w: {v,z} is a potential separator,
    // u stays connected to w through y
    Graph g = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}});
    SpTree t = build_sp_tree(g);
    CHECK(t.p_node_ids().size() == 1);
    CHECK(t.s_node_ids().size() == 3);
    const SpNode& p = t.nodes[t.p_node_ids()[0]];
    CHECK(p.adj.size() == 3);
    CHECK((std::set<int>{p.verts[0], p.verts[1]} == std::set<int>{0, 2}));
    CHECK(same_scaffold(t, g, 5));
}

TEST_CASE("build_sp_tree rejects non-biconnected input") {
    CHECK_THROWS_AS(build_sp_tree(from_edges(3, {{0, 1}, {1, 2}})), PreconditionError);
    Graph k4 = from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(build_sp_tree(k4), PreconditionError);
}

TEST_CASE("rooting the diamond") {
    SpTree t = build_sp_tree(diamond());
    int p = t.p_node_ids()[0];

    // rooted at the shared real edge: the P-node is the root, both S-nodes
    // are children referencing their virtual {0,1} edge
    RootedSpTree rt = root_sp(t, 0, 1);
    CHECK(rt.root_node == p);
    for (int s : t.s_node_ids()) {
        CHECK(rt.parent[s] == p);
        int r = rt.ref[s];
        REQUIRE(r != -1);
        CHECK_FALSE(t.nodes[s].edges[r].real);
    }

    // rooted at a side edge: that S-node is the root, the P-node its child
    RootedSpTree rs = root_sp(t, 0, 2);
    CHECK(t.nodes[rs.root_node].kind == SpNode::Kind::S);
    CHECK(rs.parent[p] == rs.root_node);

    CHECK_THROWS_AS(root_sp(t, 2, 3), PreconditionError);  // not an edge anywhere
}

TEST_CASE("cS lists the S-children behind a virtual edge") {
    SpTree t = build_sp_tree(diamond());
    int p = t.p_node_ids()[0];
    RootedSpTree rt = root_sp(t, 0, 1);  // root is the P-node
    for (int s : t.s_node_ids()) {
        int vi = t.edge_to_neighbor(s, p);
        auto kids = cs_children(rt, s, vi);
        // the one S-node behind that edge is the sibling
        REQUIRE(kids.size() == 1);
        CHECK(kids[0] != s);
        CHECK(t.nodes[kids[0]].kind == SpNode::Kind::S);
    }

    SpTree tk = build_sp_tree(k23());
    RootedSpTree rk = root_sp(tk, 0, 2);  // inside one S-node
    int root = rk.root_node;
    int vi = tk.edge_to_neighbor(root, tk.p_node_ids()[0]);
    auto kids = cs_children(rk, root, vi);
    CHECK(kids.size() == 2);  // the other two S-nodes
    for (int k : kids) CHECK(k != root);

    // a virtual edge whose pertinent node is an S-node: singleton
    int pn = tk.p_node_ids()[0];
    int pe = tk.edge_to_neighbor(pn, kids[0]);
    CHECK(cs_children(rk, pn, pe) == std::vector<int>{kids[0]});
}

TEST_CASE("pS climbs to the next S-node toward the root") {
    SpTree t = build_sp_tree(diamond());
    RootedSpTree rs = root_sp(t, 0, 2);  // root S-node contains 0,2,1
    int root = rs.root_node;
    int other = -1;
    for (int s : t.s_node_ids())
        if (s != root) other = s;
    REQUIRE(other != -1);
    // vertex 1 is an endpoint of ref(other); its representative climbs to the root S-node
    auto [up, pos] = p_s(rs, other, 1);
    CHECK(up == root);
    CHECK(t.nodes[up].verts[pos] == 1);
    auto [up0, pos0] = p_s(rs, other, 0);
    CHECK(up0 == root);
    CHECK(t.nodes[up0].verts[pos0] == 0);

    CHECK_THROWS_AS(p_s(rs, root, 0), PreconditionError);   // root has no reference edge
    CHECK_THROWS_AS(p_s(rs, other, 3), PreconditionError);  // not on the reference edge
}

TEST_CASE("next walks around an S-node cycle") {
    SpTree t = build_sp_tree(c4());
    const SpNode& s = t.nodes[0];
    // walk the full cycle from position 1 away from position 0
    int came = 0, pos = 1;
    std::vector<int> seen{s.verts[pos]};
    for (int step = 0; step < 3; ++step) {
        auto [e, nxt] = next_step(s, pos, came);
        const SpEdge& ed = s.edges[e];
        CHECK((std::set<int>{ed.a, ed.b} == std::set<int>{pos, nxt}));
        came = pos;
        pos = nxt;
        seen.push_back(s.verts[pos]);
    }
    CHECK(seen.size() == 4);
    CHECK(std::set<int>(seen.begin(), seen.end()).size() == 4);

    // start form: direction fixed away from the start edge's other endpoint
    auto [e0, p0] = next_start(s, 0, s.edges[0].b);
    CHECK(p0 != s.edges[0].a);
    CHECK(e0 != 0);

    CHECK_THROWS_AS(next_step(s, 0, 2), PreconditionError);  // not adjacent on a 4-cycle
}

TEST_CASE("triangle-with-tail skeletons stay minimal (no S-S adjacency)") {
    // b-x-a path, two a-c paths, b-c edge: forces an S-absorbing-S splice
    Graph g = from_edges(6, {{1, 3}, {3, 0}, {0, 4}, {4, 2}, {0, 5}, {5, 2}, {1, 2}});
    SpTree t = build_sp_tree(g);
    for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i)
        for (int j : t.nodes[i].adj) CHECK(t.nodes[i].kind != t.nodes[j].kind);
    CHECK(same_scaffold(t, g, 6));
}

TEST_CASE("merge-back reproduces every biconnected SP block (SP4)") {
    for (int n = 3; n <= 8; ++n) {
        auto blocks = ts::all_biconnected_sp_blocks(n);
        for (const Graph& g : blocks) {
            SpTree t = build_sp_tree(g);
            CHECK(same_scaffold(t, g, g.vertex_count()));
        }
    }
    ts::Rng rng(6060);
    for (int iter = 0; iter < 50; ++iter) {
        Graph g = ts::random_biconnected_sp_block(rng, 10 + static_cast<int>(rng() % 30));
        SpTree t = build_sp_tree(g);
        CHECK(same_scaffold(t, g, g.vertex_count()));
    }
}

TEST_CASE("virtual P-edges are 2-separators; real edge count matches the block") {
    ts::Rng rng(7171);
    for (int iter = 0; iter < 40; ++iter) {
        Graph g = ts::random_biconnected_sp_block(rng, 4 + static_cast<int>(rng() % 9));
        SpTree t = build_sp_tree(g);
        int reals = 0;
        for (const auto& nd : t.nodes)
            for (const auto& e : nd.edges)
                if (e.real) ++reals;
        CHECK(reals == g.edge_count());
        for (const auto& nd : t.nodes) {
            if (nd.kind != SpNode::Kind::P) continue;
            int u = nd.verts[0], v = nd.verts[1];
            // deleting {u,v} disconnects the block
            int n = g.vertex_count();
            std::vector<char> seen(n, 0);
            seen[u] = seen[v] = 1;
            int comps = 0;
            for (int s = 0; s < n; ++s) {
                if (seen[s]) continue;
                ++comps;
                std::vector<int> st{s};
                seen[s] = 1;
                while (!st.empty()) {
                    int x = st.back();
                    st.pop_back();
                    for (int y : g.neighbors(x))
                        if (!seen[y]) {
                            seen[y] = 1;
                            st.push_back(y);
                        }
                }
            }
            CHECK(comps >= 2);
        }
    }
}

TEST_CASE("toward tables give the first hop to each vertex") {
    SpTree t = build_sp_tree(k23());
    auto tab = toward_table(t, 5);
    for (int nd = 0; nd < static_cast<int>(t.nodes.size()); ++nd)
        for (int v = 0; v < 5; ++v) {
            int hop = tab[static_cast<size_t>(nd) * 5 + v];
            if (t.nodes[nd].pos_of(v) != -1) {
                CHECK(hop == kTowardSelf);
            } else {
                REQUIRE(hop >= 0);
                CHECK(std::find(t.nodes[nd].adj.begin(), t.nodes[nd].adj.end(), hop) !=
                      t.nodes[nd].adj.end());
            }
        }
}

TEST_SUITE_END();
