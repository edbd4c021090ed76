#include "bbpmcs/solver.hpp"

#include <algorithm>
#include <cassert>
#include <iostream>

namespace bbpmcs {

namespace {

uint64_t mix(uint64_t h, uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

bool BbpSolver::SeriesKey::operator==(const SeriesKey& o) const {
    return std::equal(a, a + 8, o.a);
}
bool BbpSolver::EdgeKey::operator==(const EdgeKey& o) const {
    return std::equal(a, a + 6, o.a);
}
bool BbpSolver::CutKey::operator==(const CutKey& o) const {
    return std::equal(a, a + 4, o.a);
}

template <typename K>
size_t BbpSolver::KeyHash<K>::operator()(const K& k) const {
    uint64_t h = 0x243f6a8885a308d3ULL;
    for (int x : k.a) h = mix(h, static_cast<uint64_t>(static_cast<uint32_t>(x)));
    return static_cast<size_t>(h);
}

const SpNode& BbpSolver::PerGraph::node(int gnode) const {
    auto [bi, local] = node_loc[gnode];
    return blocks[bi].tree.nodes[local];
}

int BbpSolver::PerGraph::toward_stop(int gnode, int v) const {
    auto [bi, local] = node_loc[gnode];
    return blocks[bi].toward[static_cast<size_t>(local) * n() + v];
}

namespace {

BbpSolver::PerGraph decompose(const Graph& g) {
    BbpSolver::PerGraph pg;
    pg.graph = &g;
    pg.bc = build_bc_tree(g);
    pg.block_of_bnode.assign(pg.bc.nodes.size(), -1);
    for (int b : pg.bc.block_node_ids()) {
        BbpSolver::BlockSp bs;
        bs.bnode = b;
        std::vector<int> vmap;
        Graph local = block_skeleton(pg.bc.nodes[b], vmap);
        bs.tree = build_sp_tree(local);
        remap_vertices(bs.tree, vmap);
        bs.toward = toward_table(bs.tree, g.vertex_count());
        pg.block_of_bnode[b] = static_cast<int>(pg.blocks.size());
        pg.blocks.push_back(std::move(bs));
    }
    int off = 0;
    for (size_t bi = 0; bi < pg.blocks.size(); ++bi) {
        pg.node_offset.push_back(off);
        for (size_t l = 0; l < pg.blocks[bi].tree.nodes.size(); ++l)
            pg.node_loc.emplace_back(static_cast<int>(bi), static_cast<int>(l));
        off += static_cast<int>(pg.blocks[bi].tree.nodes.size());
    }
    return pg;
}

bool all_p_nodes_small(const BbpSolver::PerGraph& pg) {
    for (const auto& bs : pg.blocks)
        for (int p : bs.tree.p_node_ids())
            if (bs.tree.nodes[p].adj.size() > 2) return false;
    return true;
}

}  // namespace

BbpSolver::BbpSolver(const Graph& g, const Graph& h, const SolveOptions& opts)
    : G_(decompose(g)), H_(decompose(h)), opts_(opts) {
    outerplanar_pair_ = opts_.fast_path && all_p_nodes_small(G_) && all_p_nodes_small(H_);
}

// S-node children behind a virtual skeleton edge, excluding the node the
// edge lives in. The pertinent node of an S-skeleton edge is always a
// P-node, so this is exactly cS of the rooted view for every reachable
// state, without needing the rooting.
std::vector<int> BbpSolver::cs_list(const PerGraph& pg, int gnode, int edge_idx) const {
    auto [bi, local] = pg.node_loc[gnode];
    const SpTree& t = pg.blocks[bi].tree;
    const SpEdge& e = t.nodes[local].edges[edge_idx];
    assert(!e.real);
    const SpNode& pert = t.nodes[e.pertinent];
    assert(pert.kind == SpNode::Kind::P);
    std::vector<int> out;
    for (int y : pert.adj)
        if (y != local) out.push_back(pg.global_id(bi, y));
    return out;
}

Weight BbpSolver::series(Side a, Side b) {
    ++series_calls;
    SeriesKey key{{a.stop, a.gnode, a.pos, a.came_from, b.stop, b.gnode, b.pos, b.came_from}};
    if (opts_.use_memo) {
        auto it = series_memo_.find(key);
        if (it != series_memo_.end()) return it->second;
    }
    Weight r = series_impl(a, b);
    if (opts_.use_memo) {
        series_memo_.emplace(key, r);
        if (opts_.trace)
            std::cerr << "series[" << a.stop << "," << a.gnode << "," << a.pos << "," << a.came_from
                      << "|" << b.stop << "," << b.gnode << "," << b.pos << "," << b.came_from
                      << "]=" << r << "\n";
    }
    return r;
}

Weight BbpSolver::series_impl(const Side& a, const Side& b) {
    const SpNode& sa = G_.node(a.gnode);
    const SpNode& sb = H_.node(b.gnode);
    auto [eia, napos] = next_step(sa, a.pos, a.came_from);
    auto [eib, nbpos] = next_step(sb, b.pos, b.came_from);
    const SpEdge& ea = sa.edges[eia];
    const SpEdge& eb = sb.edges[eib];
    int wa = sa.verts[napos], wb = sb.verts[nbpos];

    // Parent S-node: the next edge is the reference edge, i.e. the virtual
    // edge toward the stop vertex. Continue at the representatives in the
    // next S-node on that path.
    int twa = G_.toward_stop(a.gnode, a.stop);
    if (twa != kTowardSelf && !ea.real) {
        auto [bi, local] = G_.node_loc[a.gnode];
        (void)local;
        if (ea.pertinent == twa) {
            const BlockSp& bs = G_.blocks[bi];
            int alpha = bs.toward[static_cast<size_t>(ea.pertinent) * G_.n() + a.stop];
            assert(alpha >= 0);
            const SpNode& up = bs.tree.nodes[alpha];
            assert(up.kind == SpNode::Kind::S);
            Side a2{a.stop, G_.global_id(bi, alpha), up.pos_of(sa.verts[a.pos]), up.pos_of(wa)};
            assert(a2.pos != -1 && a2.came_from != -1);
            return series(a2, b);
        }
    }
    int twb = H_.toward_stop(b.gnode, b.stop);
    if (twb != kTowardSelf && !eb.real) {
        auto [bi, local] = H_.node_loc[b.gnode];
        (void)local;
        if (eb.pertinent == twb) {
            const BlockSp& bs = H_.blocks[bi];
            int alpha = bs.toward[static_cast<size_t>(eb.pertinent) * H_.n() + b.stop];
            assert(alpha >= 0);
            const SpNode& up = bs.tree.nodes[alpha];
            assert(up.kind == SpNode::Kind::S);
            Side b2{b.stop, H_.global_id(bi, alpha), up.pos_of(sb.verts[b.pos]), up.pos_of(wb)};
            assert(b2.pos != -1 && b2.came_from != -1);
            return series(a, b2);
        }
    }

    bool adone = wa == a.stop, bdone = wb == b.stop;
    if (adone && bdone)  // completed skeleton
        return edge_match(EdgeSide{a.gnode, eia, sa.verts[a.pos], wa},
                          EdgeSide{b.gnode, eib, sb.verts[b.pos], wb});
    if (adone != bdone)  // incompletable mapping
        return Weight::neg_inf();

    int bnode_a = G_.block_of(a.gnode).bnode;
    int bnode_b = H_.block_of(b.gnode).bnode;
    Weight m = edge_match(EdgeSide{a.gnode, eia, sa.verts[a.pos], wa},
                          EdgeSide{b.gnode, eib, sb.verts[b.pos], wb}) +
               cut_match(wa, bnode_a, wb, bnode_b) +
               series(Side{a.stop, a.gnode, napos, a.pos}, Side{b.stop, b.gnode, nbpos, b.pos}) +
               Weight(1);

    // Consider potential separators: when a side's next edge is not a graph
    // edge the walk may instead continue inside a child S-node behind it.
    bool a_in = G_.graph->has_edge(sa.verts[a.pos], wa);
    bool b_in = H_.graph->has_edge(sb.verts[b.pos], wb);
    if (!a_in || !b_in) {
        std::vector<Side> ma, mb;
        if (a_in) {
            ma.push_back(a);
        } else {
            for (int eta : cs_list(G_, a.gnode, eia)) {
                const SpNode& nd = G_.node(eta);
                ma.push_back(Side{a.stop, eta, nd.pos_of(sa.verts[a.pos]), nd.pos_of(wa)});
            }
        }
        if (b_in) {
            mb.push_back(b);
        } else {
            for (int eta : cs_list(H_, b.gnode, eib)) {
                const SpNode& nd = H_.node(eta);
                mb.push_back(Side{b.stop, eta, nd.pos_of(sb.verts[b.pos]), nd.pos_of(wb)});
            }
        }
        for (const Side& a2 : ma)
            for (const Side& b2 : mb) m = max(m, series(a2, b2));
    }
    return m;
}

Weight BbpSolver::edge_match(EdgeSide a, EdgeSide b) {
    bool a_in = G_.graph->has_edge(a.u, a.v);
    bool b_in = H_.graph->has_edge(b.u, b.v);
    if (a_in != b_in) return Weight::neg_inf();  // subgraph not induced

    const SpEdge& ea = G_.node(a.gnode).edges[a.edge];
    const SpEdge& eb = H_.node(b.gnode).edges[b.edge];
    if (ea.real || eb.real) return 0;  // valid mapping, nothing behind it

    EdgeKey key{{a.gnode, a.edge, a.u, b.gnode, b.edge, b.u}};
    if (opts_.use_memo) {
        auto it = edge_memo_.find(key);
        if (it != edge_memo_.end()) return it->second;
    }

    auto ma = cs_list(G_, a.gnode, a.edge);
    auto mb = cs_list(H_, b.gnode, b.edge);
    std::int64_t p;
    auto child_weight = [&](int eta_a, int eta_b) {
        const SpNode& na = G_.node(eta_a);
        const SpNode& nb = H_.node(eta_b);
        return series(Side{a.u, eta_a, na.pos_of(a.v), na.pos_of(a.u)},
                      Side{b.u, eta_b, nb.pos_of(b.v), nb.pos_of(b.u)});
    };
    if (outerplanar_pair_ && ma.size() == 1 && mb.size() == 1) {
        // outerplanar shortcut: the bipartite graph is a K2, no MwbM needed
        Weight w = child_weight(ma[0], mb[0]);
        p = w.is_neg_inf() ? 0 : std::max<std::int64_t>(0, w.value());
    } else {
        BipartiteWeights bw(static_cast<int>(ma.size()), static_cast<int>(mb.size()));
        for (size_t i = 0; i < ma.size(); ++i)
            for (size_t j = 0; j < mb.size(); ++j)
                bw.at(static_cast<int>(i), static_cast<int>(j)) = child_weight(ma[i], mb[j]);
        p = max_weight_matching(bw);
    }

    Weight r;
    if (p != 0 || (a_in && b_in))
        r = Weight(p);
    else
        r = Weight::neg_inf();  // not biconnected: no path joins the bases
    if (opts_.use_memo) {
        edge_memo_.emplace(key, r);
        if (opts_.trace)
            std::cerr << "edge[" << a.gnode << "," << a.edge << "," << a.u << "|" << b.gnode << ","
                      << b.edge << "," << b.u << "]=" << r << "\n";
    }
    return r;
}

Weight BbpSolver::cut_match(int u, int excl_a, int u2, int excl_b) {
    if (!G_.bc.is_cutvertex(u) || !H_.bc.is_cutvertex(u2)) return 0;
    CutKey key{{u, excl_a, u2, excl_b}};
    if (opts_.use_memo) {
        auto it = cut_memo_.find(key);
        if (it != cut_memo_.end()) return it->second;
    }
    Weight r = cut_match_impl(u, excl_a, u2, excl_b);
    if (opts_.use_memo) {
        cut_memo_.emplace(key, r);
        if (opts_.trace)
            std::cerr << "cut[" << u << "," << excl_a << "|" << u2 << "," << excl_b << "]=" << r
                      << "\n";
    }
    return r;
}

Weight BbpSolver::cut_match_impl(int u, int excl_a, int u2, int excl_b) {
    std::vector<int> ma, mb;
    for (int x : G_.bc.nodes[G_.bc.cnode_of[u]].adj)
        if (x != excl_a) ma.push_back(x);
    for (int x : H_.bc.nodes[H_.bc.cnode_of[u2]].adj)
        if (x != excl_b) mb.push_back(x);

    BipartiteWeights bw(static_cast<int>(ma.size()), static_cast<int>(mb.size()));
    for (size_t i = 0; i < ma.size(); ++i) {
        const BcNode& na = G_.bc.nodes[ma[i]];
        for (size_t j = 0; j < mb.size(); ++j) {
            const BcNode& nb = H_.bc.nodes[mb[j]];
            Weight w = Weight::neg_inf();  // non BBP matching: bridge vs block
            if (na.kind == BcNode::Kind::Bridge && nb.kind == BcNode::Kind::Bridge) {
                int va = na.bridge.first == u ? na.bridge.second : na.bridge.first;
                int vb = nb.bridge.first == u2 ? nb.bridge.second : nb.bridge.first;
                w = cut_match(va, ma[i], vb, mb[j]) + Weight(1);
            } else if (na.kind == BcNode::Kind::Block && nb.kind == BcNode::Kind::Block) {
                // best start over S-nodes with a real edge incident to the base
                int bia = G_.block_of_bnode[ma[i]];
                int bib = H_.block_of_bnode[mb[j]];
                const SpTree& ta = G_.blocks[bia].tree;
                const SpTree& tb = H_.blocks[bib].tree;
                for (int la : ta.s_node_ids()) {
                    int pa = ta.nodes[la].pos_of(u);
                    if (pa == -1) continue;
                    int L = ta.nodes[la].cycle_len();
                    for (int qa : {(pa + 1) % L, (pa - 1 + L) % L}) {
                        int ya = ta.nodes[la].verts[qa];
                        if (!G_.graph->has_edge(u, ya)) continue;
                        for (int lb : tb.s_node_ids()) {
                            int pb = tb.nodes[lb].pos_of(u2);
                            if (pb == -1) continue;
                            int Lb = tb.nodes[lb].cycle_len();
                            for (int qb : {(pb + 1) % Lb, (pb - 1 + Lb) % Lb}) {
                                int yb = tb.nodes[lb].verts[qb];
                                if (!H_.graph->has_edge(u2, yb)) continue;
                                Weight cand =
                                    series(Side{u, G_.global_id(bia, la), qa, pa},
                                           Side{u2, H_.global_id(bib, lb), qb, pb}) +
                                    cut_match(ya, ma[i], yb, mb[j]) + Weight(1);
                                w = max(w, cand);
                            }
                        }
                    }
                }
            }
            bw.at(static_cast<int>(i), static_cast<int>(j)) = w;
        }
    }
    return Weight(max_weight_matching(bw));
}

int BbpSolver::solve() {
    Weight mcs = Weight::neg_inf();
    auto blocks_a = G_.bc.block_node_ids();
    auto blocks_b = H_.bc.block_node_ids();
    for (int ba : blocks_a) {
        int bia = G_.block_of_bnode[ba];
        const SpTree& ta = G_.blocks[bia].tree;
        for (int bb : blocks_b) {
            int bib = H_.block_of_bnode[bb];
            const SpTree& tb = H_.blocks[bib].tree;
            for (int la : ta.s_node_ids()) {
                const SpNode& na = ta.nodes[la];
                int L = na.cycle_len();
                for (int lb : tb.s_node_ids()) {
                    const SpNode& nb = tb.nodes[lb];
                    int Lb = nb.cycle_len();
                    for (int i = 0; i < L; ++i) {
                        // oriented start edges (u, v): u at position i side
                        for (auto [pu, pv] : {std::pair{i, (i + 1) % L}, std::pair{(i + 1) % L, i}}) {
                            int ua = na.verts[pu], va = na.verts[pv];
                            if (!G_.graph->has_edge(ua, va)) continue;
                            for (int j = 0; j < Lb; ++j) {
                                for (auto [qu, qv] :
                                     {std::pair{j, (j + 1) % Lb}, std::pair{(j + 1) % Lb, j}}) {
                                    int ub = nb.verts[qu], vb = nb.verts[qv];
                                    if (!H_.graph->has_edge(ub, vb)) continue;
                                    Weight p = series(Side{ua, G_.global_id(bia, la), pv, pu},
                                                      Side{ub, H_.global_id(bib, lb), qv, qu}) +
                                               cut_match(ua, ba, ub, bb) +
                                               cut_match(va, ba, vb, bb);
                                    mcs = max(mcs, p);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    for (int ba : G_.bc.bridge_node_ids()) {
        auto [ua, va] = G_.bc.nodes[ba].bridge;
        for (int bb : H_.bc.bridge_node_ids()) {
            auto [ub, vb] = H_.bc.nodes[bb].bridge;
            Weight p = cut_match(ua, ba, ub, bb) + cut_match(va, ba, vb, bb);
            Weight q = cut_match(ua, ba, vb, bb) + cut_match(va, ba, ub, bb);
            mcs = max(mcs, max(p, q));
        }
    }
    Weight r = max(Weight(1), mcs + Weight(2));
    return static_cast<int>(r.value());
}

SolveResult bbp_mcs(const Graph& g, const Graph& h, const SolveOptions& opts) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw PreconditionError("bbp_mcs requires non-empty graphs");
    if (!is_connected(g) || !is_connected(h))
        throw PreconditionError("bbp_mcs requires connected graphs");
    if (!is_series_parallel(g) || !is_series_parallel(h))
        throw PreconditionError("bbp_mcs requires series-parallel graphs");
    if (g.vertex_count() == 1 || h.vertex_count() == 1) {
        // a single vertex can always be mapped
        SolveResult r;
        r.size = 1;
        return r;
    }
    BbpSolver solver(g, h, opts);
    SolveResult r;
    r.size = solver.solve();
    r.outerplanar_fast_path = solver.outerplanar_pair();
    return r;
}

}  // namespace bbpmcs
