#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "bbpmcs/bc_tree.hpp"
#include "bbpmcs/graph.hpp"
#include "bbpmcs/matching.hpp"
#include "bbpmcs/sp_tree.hpp"
#include "bbpmcs/weight.hpp"

namespace bbpmcs {

struct SolveOptions {
    bool use_memo = true;   // disable to cross-check memoization transparency
    bool fast_path = true;  // outerplanar shortcut (skip MwbM on singleton sides)
    bool trace = false;     // one stderr line per memo-table write
};

struct SolveResult {
    int size = 0;
    bool outerplanar_fast_path = false;
};

// Size of a block-and-bridge-preserving maximum common connected induced
// subgraph of two connected series-parallel graphs.
SolveResult bbp_mcs(const Graph& g, const Graph& h, const SolveOptions& opts = {});

// The decomposition bundle and the recursions of the algorithm, exposed so
// tests can drive the split-graph procedures directly.
class BbpSolver {
public:
    // One side of a split-graph walk: the walk sits at cycle position `pos`
    // of S-node `node` (arrived from adjacent position `came_from`) and must
    // return to original vertex `stop`. Together with the tree structure
    // this identifies the split graph independent of any rooting, which is
    // what lets memo entries be shared across start configurations.
    struct Side {
        int stop;
        int gnode;  // graph-global S-node id
        int pos;
        int came_from;
    };
    // One side of an Edge evaluation: skeleton edge `edge` of `gnode`,
    // oriented so that original vertex u maps to the other side's u.
    struct EdgeSide {
        int gnode;
        int edge;
        int u, v;
    };

    BbpSolver(const Graph& g, const Graph& h, const SolveOptions& opts = {});

    int solve();

    // Algorithm 2: BBP-MCS size between the split graphs, excluding the two
    // base vertices on each side; -inf when the base mapping cannot be
    // completed into a biconnected common subgraph.
    Weight series(Side a, Side b);
    // Algorithm 3: the part behind a pair of skeleton edges.
    Weight edge_match(EdgeSide a, EdgeSide b);
    // Algorithm 4: the parts beyond a cutvertex pair, excluding the branch
    // through B-nodes excl_a / excl_b. 0 unless both are cutvertices.
    Weight cut_match(int u, int excl_a, int u2, int excl_b);

    bool outerplanar_pair() const { return outerplanar_pair_; }

    // Decomposition access (tests, diagnostics).
    struct BlockSp {
        int bnode;                // B-node id in the BC-tree
        SpTree tree;              // skeleton verts hold original vertex ids
        std::vector<int> toward;  // node x graph_n first-hop table
    };
    struct PerGraph {
        const Graph* graph;
        BcTree bc;
        std::vector<BlockSp> blocks;
        std::vector<int> block_of_bnode;  // B-node id -> index into blocks, -1
        std::vector<int> node_offset;     // block idx -> first global node id
        std::vector<std::pair<int, int>> node_loc;  // global id -> (block idx, local)

        int n() const { return graph->vertex_count(); }
        const SpNode& node(int gnode) const;
        const BlockSp& block_of(int gnode) const { return blocks[node_loc[gnode].first]; }
        int global_id(int block_idx, int local) const { return node_offset[block_idx] + local; }
        int toward_stop(int gnode, int v) const;
    };
    const PerGraph& left() const { return G_; }
    const PerGraph& right() const { return H_; }

    std::int64_t series_calls = 0;  // instrumentation for scaling checks

private:
    struct SeriesKey {
        int a[8];
        bool operator==(const SeriesKey& o) const;
    };
    struct EdgeKey {
        int a[6];
        bool operator==(const EdgeKey& o) const;
    };
    struct CutKey {
        int a[4];
        bool operator==(const CutKey& o) const;
    };
    template <typename K>
    struct KeyHash {
        size_t operator()(const K& k) const;
    };

    Weight series_impl(const Side& a, const Side& b);
    Weight cut_match_impl(int u, int excl_a, int u2, int excl_b);
    std::vector<int> cs_list(const PerGraph& pg, int gnode, int edge_idx) const;

    PerGraph G_, H_;
    SolveOptions opts_;
    bool outerplanar_pair_ = false;
    std::unordered_map<SeriesKey, Weight, KeyHash<SeriesKey>> series_memo_;
    std::unordered_map<EdgeKey, Weight, KeyHash<EdgeKey>> edge_memo_;
    std::unordered_map<CutKey, Weight, KeyHash<CutKey>> cut_memo_;
};

}  // namespace bbpmcs
