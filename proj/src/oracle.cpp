#include "bbpmcs/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace bbpmcs {

namespace {

// Pairwise block co-membership, bridge lookup and block membership flags of
// one graph, for the BBP conditions.
struct BlockInfo {
    std::vector<std::vector<int>> blocks;
    std::vector<std::pair<int, int>> bridges;
    std::vector<char> in_some_block;

    explicit BlockInfo(const Graph& g) : in_some_block(g.vertex_count(), 0) {
        if (g.vertex_count() >= 2 && is_connected(g)) {
            auto d = decompose_blocks(g);
            blocks = std::move(d.blocks);
            bridges = std::move(d.bridges);
        }
        for (const auto& b : blocks)
            for (int v : b) in_some_block[v] = 1;
    }
    bool same_block(int u, int v) const {
        for (const auto& b : blocks)
            if (std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v))
                return true;
        return false;
    }
    bool is_bridge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(bridges.begin(), bridges.end(), std::make_pair(u, v));
    }
};

bool bbp_holds(const Graph& g, const BlockInfo& big, const BlockInfo& bih,
               const std::vector<int>& gdom, const std::vector<int>& to_h) {
    // Common subgraph on local ids 0..k-1 for gdom.
    int k = static_cast<int>(gdom.size());
    Graph f(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(gdom[i], gdom[j])) f.add_edge(i, j);
    BlockInfo bif(f);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (!bif.in_some_block[i] || !bif.in_some_block[j] || bif.same_block(i, j)) continue;
            // (BBP1) different blocks of the common subgraph must not share a
            // block of either input
            if (big.same_block(gdom[i], gdom[j])) return false;
            if (bih.same_block(to_h[gdom[i]], to_h[gdom[j]])) return false;
        }
    for (auto [i, j] : bif.bridges) {
        // (BBP2) bridges stay bridges in both inputs
        if (!big.is_bridge(gdom[i], gdom[j])) return false;
        if (!bih.is_bridge(to_h[gdom[i]], to_h[gdom[j]])) return false;
    }
    return true;
}

struct BruteSearch {
    const Graph& g;
    const Graph& h;
    bool bbp;
    std::int64_t budget;
    bool exceeded = false;
    int best = 0;
    BlockInfo big, bih;
    std::vector<int> to_h;      // g vertex -> h vertex or -1
    std::vector<char> h_used;
    std::vector<int> gdom;      // mapped g vertices in insertion order

    BruteSearch(const Graph& g, const Graph& h, bool bbp, std::int64_t budget)
        : g(g), h(h), bbp(bbp), budget(budget), big(g), bih(h),
          to_h(g.vertex_count(), -1), h_used(h.vertex_count(), 0) {}

    void consider_current() {
        int k = static_cast<int>(gdom.size());
        if (k <= best) return;
        if (!bbp || bbp_holds(g, big, bih, gdom, to_h)) best = k;
    }

    // Extends the mapping with vertices adjacent to the current domain, so
    // every enumerated subgraph is connected. `banned` marks g-vertices
    // decided to stay outside; candidates are tried in ascending order with
    // all smaller candidates banned in the recursive call, so each vertex
    // set is enumerated exactly once.
    void extend(std::vector<char>& banned) {
        if (exceeded) return;
        if (--budget < 0) {
            exceeded = true;
            return;
        }
        // upper bound: everything not banned on the g side, all free on h
        int g_possible = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (to_h[v] == -1 && !banned[v]) ++g_possible;
        int bound = static_cast<int>(gdom.size()) +
                    std::min(g_possible, h.vertex_count() - static_cast<int>(gdom.size()));
        if (bound <= best) return;

        std::vector<int> cands;
        for (int v : gdom)
            for (int x : g.neighbors(v))
                if (to_h[x] == -1 && !banned[x]) cands.push_back(x);
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

        for (size_t ci = 0; ci < cands.size(); ++ci) {
            int x = cands[ci];
            for (int y = 0; y < h.vertex_count(); ++y) {
                if (h_used[y]) continue;
                bool ok = true;
                for (int v : gdom)
                    if (g.has_edge(x, v) != h.has_edge(y, to_h[v])) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                to_h[x] = y;
                h_used[y] = 1;
                gdom.push_back(x);
                consider_current();
                for (size_t cj = 0; cj < ci; ++cj) banned[cands[cj]] = 1;
                extend(banned);
                for (size_t cj = 0; cj < ci; ++cj) banned[cands[cj]] = 0;
                gdom.pop_back();
                h_used[y] = 0;
                to_h[x] = -1;
                if (exceeded) return;
            }
        }
    }

    OracleResult run() {
        for (int a = 0; a < g.vertex_count() && !exceeded; ++a) {
            // a is the minimum mapped g-vertex of every subgraph in this pass
            std::vector<char> banned(g.vertex_count(), 0);
            for (int v = 0; v < a; ++v) banned[v] = 1;
            for (int b = 0; b < h.vertex_count() && !exceeded; ++b) {
                to_h[a] = b;
                h_used[b] = 1;
                gdom.push_back(a);
                consider_current();
                extend(banned);
                gdom.pop_back();
                h_used[b] = 0;
                to_h[a] = -1;
            }
        }
        OracleResult r;
        r.budget_exceeded = exceeded;
        r.size = best;
        return r;
    }
};

}  // namespace

OracleResult mcs_brute(const Graph& g, const Graph& h, std::int64_t budget) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0) return {false, 0};
    BruteSearch s(g, h, false, budget);
    return s.run();
}

OracleResult bbp_mcs_brute(const Graph& g, const Graph& h, std::int64_t budget) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw PreconditionError("bbp_mcs_brute requires non-empty graphs");
    if (!is_connected(g) || !is_connected(h))
        throw PreconditionError("bbp_mcs_brute requires connected graphs");
    BruteSearch s(g, h, true, budget);
    return s.run();
}

bool is_bbp(const Graph& g, const Graph& h, const std::vector<std::pair<int, int>>& mapping) {
    // validate: injective both ways, in range, induced-consistent, connected
    std::vector<int> to_h(g.vertex_count(), -1);
    std::vector<char> used_h(h.vertex_count(), 0);
    std::vector<int> gdom;
    for (auto [x, y] : mapping) {
        g.check_vertex(x);
        h.check_vertex(y);
        if (to_h[x] != -1 || used_h[y])
            throw PreconditionError("is_bbp: mapping is not injective");
        to_h[x] = y;
        used_h[y] = 1;
        gdom.push_back(x);
    }
    if (gdom.empty()) throw PreconditionError("is_bbp: empty mapping");
    for (size_t i = 0; i < gdom.size(); ++i)
        for (size_t j = i + 1; j < gdom.size(); ++j)
            if (g.has_edge(gdom[i], gdom[j]) != h.has_edge(to_h[gdom[i]], to_h[gdom[j]]))
                throw PreconditionError("is_bbp: mapping is not an induced common subgraph");
    {
        Graph f(static_cast<int>(gdom.size()));
        for (size_t i = 0; i < gdom.size(); ++i)
            for (size_t j = i + 1; j < gdom.size(); ++j)
                if (g.has_edge(gdom[i], gdom[j])) f.add_edge(static_cast<int>(i), static_cast<int>(j));
        if (!is_connected(f)) throw PreconditionError("is_bbp: common subgraph is not connected");
    }
    BlockInfo big(g), bih(h);
    std::sort(gdom.begin(), gdom.end());
    return bbp_holds(g, big, bih, gdom, to_h);
}

}  // namespace bbpmcs
