#include <doctest.h>

#include <algorithm>
#include <set>

#include "bbpmcs/bc_tree.hpp"
#include "generators.hpp"

using namespace bbpmcs;
namespace ts = bbpmcs::testsupport;

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

int bridge_node(const BcTree& t, int u, int v) {
    for (int b : t.bridge_node_ids())
        if (t.nodes[b].bridge == std::make_pair(std::min(u, v), std::max(u, v))) return b;
    return -1;
}

}  // namespace

TEST_SUITE_BEGIN("bc_tree");

TEST_CASE("bc tree shapes of the basic graphs") {
    // P3: two bridge B-nodes joined through the middle C-node
    Graph p3 = from_edges(3, {{0, 1}, {1, 2}});
    BcTree t = build_bc_tree(p3);
    CHECK(t.bridge_node_ids().size() == 2);
    CHECK(t.block_node_ids().empty());
    CHECK(t.is_cutvertex(1));
    CHECK_FALSE(t.is_cutvertex(0));
    int c = t.cnode_of[1];
    CHECK(t.nodes[c].adj.size() == 2);

    // K3: a single block B-node, no C-nodes
    Graph k3 = from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
    t = build_bc_tree(k3);
    CHECK(t.nodes.size() == 1);
    CHECK(t.nodes[0].kind == BcNode::Kind::Block);

    // bowtie: two block B-nodes joined through one C-node
    Graph bow = from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    t = build_bc_tree(bow);
    CHECK(t.block_node_ids().size() == 2);
    CHECK(t.bridge_node_ids().empty());
    CHECK(t.is_cutvertex(2));
    CHECK(t.nodes.size() == 3);
}

TEST_CASE("build_bc_tree rejects single vertices and disconnected graphs") {
    CHECK_THROWS_AS(build_bc_tree(Graph(1)), PreconditionError);
    Graph disc(4);
    disc.add_edge(0, 1);
    disc.add_edge(2, 3);
    CHECK_THROWS_AS(build_bc_tree(disc), PreconditionError);
}

TEST_CASE("rooting and cB children") {
    Graph bow = from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    BcTree t = build_bc_tree(bow);
    int left = -1, right = -1;
    for (int b : t.block_node_ids()) {
        if (t.nodes[b].block_vertices == std::vector<int>{0, 1, 2}) left = b;
        if (t.nodes[b].block_vertices == std::vector<int>{2, 3, 4}) right = b;
    }
    REQUIRE(left != -1);
    REQUIRE(right != -1);
    RootedBcTree rt = root_bc(t, left);
    // the right block is a grandchild through the C-node of vertex 2
    int c = t.cnode_of[2];
    CHECK(rt.parent[c] == left);
    CHECK(rt.parent[right] == c);
    CHECK(cb_children(rt, 2) == std::vector<int>{right});
    CHECK(cb_children(rt, 0).empty());  // not a cutvertex

    // single-block tree rooted at that block: no children
    Graph k3 = from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
    BcTree tk = build_bc_tree(k3);
    RootedBcTree rk = root_bc(tk, 0);
    CHECK(rk.parent == std::vector<int>{-1});

    CHECK_THROWS_AS(root_bc(t, c), PreconditionError);  // C-node cannot be the root
}

TEST_CASE("cB on a path and a star") {
    Graph p4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    BcTree t = build_bc_tree(p4);
    RootedBcTree rt = root_bc(t, bridge_node(t, 0, 1));
    CHECK(cb_children(rt, 1) == std::vector<int>{bridge_node(t, 1, 2)});

    Graph star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    BcTree ts_ = build_bc_tree(star);
    RootedBcTree rs = root_bc(ts_, bridge_node(ts_, 0, 1));
    auto kids = cb_children(rs, 0);
    std::vector<int> expect{bridge_node(ts_, 0, 2), bridge_node(ts_, 0, 3)};
    std::sort(expect.begin(), expect.end());
    CHECK(kids == expect);
}

TEST_CASE("bc tree structural invariants on random graphs") {
    ts::Rng rng(31337);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 2 + static_cast<int>(rng() % 14);
        Graph g = ts::random_sp_graph(rng, n);
        BcTree t = build_bc_tree(g);
        CHECK(t.nodes.size() <= 2 * static_cast<size_t>(n));
        // bipartite between B- and C-nodes; edges iff the cutvertex lies in
        // the skeleton
        for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i)
            for (int j : t.nodes[i].adj) {
                CHECK(t.nodes[i].is_b_node() != t.nodes[j].is_b_node());
                const BcNode& b = t.nodes[i].is_b_node() ? t.nodes[i] : t.nodes[j];
                const BcNode& c = t.nodes[i].is_b_node() ? t.nodes[j] : t.nodes[i];
                auto sk = b.skeleton_vertices();
                CHECK(std::find(sk.begin(), sk.end(), c.cutvertex) != sk.end());
            }
        // tree: connected with |nodes|-1 edges
        size_t tree_edges = 0;
        for (const auto& nd : t.nodes) tree_edges += nd.adj.size();
        CHECK(tree_edges == 2 * (t.nodes.size() - 1));
    }
}

TEST_CASE("rooted subtrees below a cutvertex match direct split graphs") {
    // union of skeleton vertices strictly below v equals the vertex set
    // obtained by deleting v and discarding the root component, plus v
    ts::Rng rng(202);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 3 + static_cast<int>(rng() % 10);
        Graph g = ts::random_sp_graph(rng, n);
        BcTree t = build_bc_tree(g);
        auto bnodes = t.b_node_ids();
        int root = bnodes[rng() % bnodes.size()];
        RootedBcTree rt = root_bc(t, root);
        for (int v = 0; v < n; ++v) {
            if (!t.is_cutvertex(v)) continue;
            if (rt.parent[t.cnode_of[v]] == -1) continue;
            // collect skeleton vertices of all B-nodes in child subtrees of v
            std::set<int> below;
            std::vector<int> stack = cb_children(rt, v);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int w : t.nodes[x].skeleton_vertices()) below.insert(w);
                for (int y : t.nodes[x].adj)
                    if (rt.parent[y] == x) stack.push_back(y);
            }
            // direct: delete v, keep components not containing the root side
            std::set<int> direct{v};
            {
                std::vector<int> comp(n, -1);
                int cc = 0;
                for (int s = 0; s < n; ++s) {
                    if (s == v || comp[s] != -1) continue;
                    std::vector<int> st{s};
                    comp[s] = cc;
                    while (!st.empty()) {
                        int x = st.back();
                        st.pop_back();
                        for (int y : g.neighbors(x))
                            if (y != v && comp[y] == -1) {
                                comp[y] = cc;
                                st.push_back(y);
                            }
                    }
                    ++cc;
                }
                int root_vertex = t.nodes[root].skeleton_vertices()[0];
                if (root_vertex == v) root_vertex = t.nodes[root].skeleton_vertices()[1];
                for (int x = 0; x < n; ++x)
                    if (x != v && comp[x] != comp[root_vertex]) direct.insert(x);
            }
            CHECK(below == direct);
        }
    }
}

TEST_CASE("dot dump names the node kinds") {
    Graph bow = from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    BcTree t = build_bc_tree(bow);
    std::string dot = bc_tree_dot(t, bow);
    CHECK(dot.find("shape=circle") != std::string::npos);
    CHECK(dot.find("fillcolor=lightgray") != std::string::npos);
}

TEST_SUITE_END();
