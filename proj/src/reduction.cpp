#include "bbpmcs/reduction.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

#include <json.hpp>

namespace bbpmcs {

std::int64_t NmwtsInstance::sigma_s() const {
    std::int64_t s = 0;
    for (auto v : s_x) s += v;
    for (auto v : s_y) s += v;
    return s;
}

std::int64_t NmwtsInstance::sigma_b() const {
    std::int64_t s = 0;
    for (auto v : b) s += v;
    return s;
}

void NmwtsInstance::validate() const {
    if (b.empty() || s_x.size() != b.size() || s_y.size() != b.size())
        throw PreconditionError("NMwTS instance needs |X| = |Y| = |b| >= 1");
    for (auto v : s_x)
        if (v < 1) throw PreconditionError("NMwTS values must be positive");
    for (auto v : s_y)
        if (v < 1) throw PreconditionError("NMwTS values must be positive");
    for (auto v : b)
        if (v < 1) throw PreconditionError("NMwTS targets must be positive");
}

NmwtsInstance NmwtsInstance::scaled_by_3() const {
    NmwtsInstance out = *this;
    for (auto& v : out.s_x) v *= 3;
    for (auto& v : out.s_y) v *= 3;
    for (auto& v : out.b) v *= 3;
    return out;
}

NmwtsInstance NmwtsInstance::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid NMwTS JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("s_x") || !j.contains("s_y") || !j.contains("b"))
        throw ParseError("NMwTS JSON must contain \"s_x\", \"s_y\" and \"b\" arrays");
    NmwtsInstance inst;
    try {
        inst.s_x = j["s_x"].get<std::vector<std::int64_t>>();
        inst.s_y = j["s_y"].get<std::vector<std::int64_t>>();
        inst.b = j["b"].get<std::vector<std::int64_t>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid NMwTS JSON: ") + e.what());
    }
    return inst;
}

std::string NmwtsInstance::to_json_text() const {
    nlohmann::ordered_json j;
    j["s_x"] = s_x;
    j["s_y"] = s_y;
    j["b"] = b;
    return j.dump();
}

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

struct GraphBuilder {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;

    int add(const std::string& name) {
        names.push_back(name);
        return static_cast<int>(names.size()) - 1;
    }
    void edge(int u, int v) { edges.emplace_back(u, v); }
    Graph finish() const {
        Graph g(static_cast<int>(names.size()));
        for (auto [u, v] : edges) g.add_edge(u, v);
        g.vertex_names = names;
        return g;
    }
};

struct GadgetHandles {
    int v = -1, vprime = -1, w = -1, wprime = -1;
    std::vector<int> side1, side2;  // cycle interiors from v to vprime
};

// Cycle with 2*sigma+2 vertices; both v-vprime paths have length sigma+1.
GadgetHandles append_cycle(GraphBuilder& gb, int v, std::int64_t sigma, const std::string& pfx) {
    GadgetHandles h;
    h.v = v;
    for (std::int64_t k = 1; k <= sigma; ++k) h.side1.push_back(gb.add(pfx + ".p" + std::to_string(k)));
    h.vprime = gb.add(pfx + ".vprime");
    for (std::int64_t k = 1; k <= sigma; ++k) h.side2.push_back(gb.add(pfx + ".q" + std::to_string(k)));
    int prev = v;
    for (int x : h.side1) {
        gb.edge(prev, x);
        prev = x;
    }
    gb.edge(prev, h.vprime);
    prev = h.vprime;
    for (auto it = h.side2.rbegin(); it != h.side2.rend(); ++it) {
        gb.edge(prev, *it);
        prev = *it;
    }
    gb.edge(prev, v);
    return h;
}

void append_anchors(GraphBuilder& gb, GadgetHandles& h, const std::string& pfx) {
    h.wprime = gb.add(pfx + ".wprime");
    h.w = gb.add(pfx + ".w");
    gb.edge(h.vprime, h.wprime);
    gb.edge(h.wprime, h.w);
}

// Two chords making a length-5 v-w path on each side while keeping the
// gadget outerplanar and the chord endpoints at degree 3. Chords stay on
// their own cycle side: a chord joining the two sides would close a K4
// minor with the hub once the gadget sits inside the full graph, and sides
// shorter than 3 leave no room, hence the x3 value scaling for tiny
// instances.
void append_chords(GraphBuilder& gb, const GadgetHandles& h, std::int64_t sigma) {
    if (sigma < 3)
        throw PreconditionError(
            "D gadget infeasible for this instance; multiply all values and the vector b by 3");
    // shortcut v - p1 - p_sigma - vprime - wprime - w on each side
    gb.edge(h.side1.front(), h.side1.back());
    gb.edge(h.side2.front(), h.side2.back());
}

// A K3 on {v, vprime, z} plus a pendant w on vprime. Returns w.
int append_k_gadget(GraphBuilder& gb, int v, const std::string& pfx, std::vector<int>* track) {
    int vprime = gb.add(pfx + ".vprime");
    int z = gb.add(pfx + ".z");
    int w = gb.add(pfx + ".w");
    gb.edge(v, vprime);
    gb.edge(vprime, z);
    gb.edge(z, v);
    gb.edge(vprime, w);
    if (track) {
        track->push_back(vprime);
        track->push_back(z);
        track->push_back(w);
    }
    return w;
}

}  // namespace

BuiltGadget build_gadget(GadgetKind kind, std::int64_t sigma_s) {
    GraphBuilder gb;
    BuiltGadget out;
    switch (kind) {
        case GadgetKind::B: {
            if (sigma_s < 1) throw PreconditionError("B gadget needs sigma_s >= 1");
            int v = gb.add("v");
            auto h = append_cycle(gb, v, sigma_s, "B");
            out.roles = {{"v", v}, {"w", h.vprime}};
            break;
        }
        case GadgetKind::C:
        case GadgetKind::D: {
            if (sigma_s < 1) throw PreconditionError("gadget needs sigma_s >= 1");
            int v = gb.add("v");
            auto h = append_cycle(gb, v, sigma_s, "C");
            append_anchors(gb, h, "C");
            if (kind == GadgetKind::D) append_chords(gb, h, sigma_s);
            out.roles = {{"v", v}, {"vprime", h.vprime}, {"w", h.w}, {"wprime", h.wprime}};
            break;
        }
        case GadgetKind::K: {
            int v = gb.add("v");
            std::vector<int> t;
            int w = append_k_gadget(gb, v, "K", &t);
            out.roles = {{"v", v}, {"vprime", t[0]}, {"z", t[1]}, {"w", w}};
            break;
        }
        case GadgetKind::P: {
            int v = gb.add("v");
            int mid = gb.add("mid");
            int w = gb.add("w");
            gb.edge(v, mid);
            gb.edge(mid, w);
            out.roles = {{"v", v}, {"mid", mid}, {"w", w}};
            break;
        }
    }
    out.graph = gb.finish();
    return out;
}

HardInstance build_instance(const NmwtsInstance& raw, std::int64_t vertex_cap) {
    raw.validate();
    HardInstance out;
    // footnote rule: when the D gadget cannot host its chords, all values
    // and the target vector are multiplied by 3
    NmwtsInstance inst = raw;
    if (inst.sigma_s() < 3) {
        inst = inst.scaled_by_3();
        out.scaled_by_3 = true;
    }
    const int n = inst.n();
    const std::int64_t sig = inst.sigma_s();
    const std::int64_t sigb = inst.sigma_b();
    std::int64_t expect_g = 4 * n * sig + 7 * n + 3 * sig + 3 * n;
    std::int64_t expect_h = 4 * n * sig + 7 * n + 3 * sigb + 3 * n;
    if (expect_g > vertex_cap || expect_h > vertex_cap)
        throw PreconditionError("instance exceeds the generation size cap");

    // One base gadget: the hub vertex plus n chordless (C) and n chorded (D)
    // cycles hanging on it, with n-1 anchor paths chaining one family.
    // The paths attach at chord-free cycle vertices so every vertex except
    // the hub keeps degree <= 3.
    auto build_side = [&](bool is_g) {
        GraphBuilder gb;
        std::map<std::string, int>& roles = is_g ? out.roles_g : out.roles_h;
        int hub = gb.add(is_g ? "xbar" : "ybar");
        roles[is_g ? "xbar" : "ybar"] = hub;
        std::vector<GadgetHandles> cg(n), dg(n);
        for (int i = 0; i < n; ++i) {
            std::string pfx = "C" + std::to_string(i + 1);
            cg[i] = append_cycle(gb, hub, sig, pfx);
            append_anchors(gb, cg[i], pfx);
            roles["c_" + std::to_string(i + 1)] = cg[i].w;
            roles["cprime_" + std::to_string(i + 1)] = cg[i].wprime;
        }
        for (int i = 0; i < n; ++i) {
            std::string pfx = "D" + std::to_string(n + i + 1);
            dg[i] = append_cycle(gb, hub, sig, pfx);
            append_anchors(gb, dg[i], pfx);
            append_chords(gb, dg[i], sig);
            roles["c_" + std::to_string(n + i + 1)] = dg[i].w;
            roles["cprime_" + std::to_string(n + i + 1)] = dg[i].wprime;
        }
        // Anchor paths chain the chordless family. The chorded cycles
        // cannot host them: the length-5 requirement forces each chord to
        // span its whole side, and any attachment inside a chord span
        // closes a K4 minor with the hub, losing series-parallelness.
        std::vector<GadgetHandles>& chained = cg;
        for (int i = 0; i + 1 < n; ++i) {
            int a = chained[i].side2[1];
            int b = chained[i + 1].side1[1];
            int mid = gb.add((is_g ? "g" : "h") + std::string(".anchormid") + std::to_string(i + 1));
            gb.edge(a, mid);
            gb.edge(mid, b);
            roles["anchormid_" + std::to_string(i + 1)] = mid;
        }
        int base_count = static_cast<int>(gb.names.size());

        if (is_g) {
            // xy-paths: x-chain from c_i, separating path, y-chain from c_{n+i}
            for (int i = 0; i < n; ++i) {
                std::vector<int> track;
                int cur = cg[i].w;
                for (std::int64_t j = 1; j <= inst.s_x[i]; ++j) {
                    cur = append_k_gadget(
                        gb, cur, "x" + std::to_string(j) + "_" + std::to_string(i + 1), &track);
                    roles["x_" + std::to_string(j) + "_" + std::to_string(i + 1)] = cur;
                }
                int s1 = gb.add("sep1_" + std::to_string(i + 1));
                int s2 = gb.add("sep2_" + std::to_string(i + 1));
                int s3 = gb.add("sep3_" + std::to_string(i + 1));
                track.insert(track.end(), {s1, s2, s3});
                gb.edge(cur, s1);
                gb.edge(s1, s2);
                gb.edge(s2, s3);
                roles["sep_" + std::to_string(i + 1)] = s2;
                int ycur = dg[i].w;
                std::vector<int> ytrack;
                for (std::int64_t j = 1; j <= inst.s_y[i]; ++j) {
                    ycur = append_k_gadget(
                        gb, ycur, "y" + std::to_string(j) + "_" + std::to_string(i + 1), &ytrack);
                    roles["y_" + std::to_string(j) + "_" + std::to_string(i + 1)] = ycur;
                }
                gb.edge(s3, ycur);
                track.insert(track.end(), ytrack.begin(), ytrack.end());
                out.xy_path_vertices.push_back(std::move(track));
            }
            out.base_g_vertices = base_count;
            out.g = gb.finish();
        } else {
            // b-paths: a chain of b_i + 1 K gadgets, far end tied to c_{n+i}
            for (int i = 0; i < n; ++i) {
                std::vector<int> track;
                int cur = cg[i].w;
                for (std::int64_t j = 1; j <= inst.b[i] + 1; ++j) {
                    cur = append_k_gadget(
                        gb, cur, "v" + std::to_string(j) + "_" + std::to_string(i + 1), &track);
                    roles["v_" + std::to_string(j) + "_" + std::to_string(i + 1)] = cur;
                }
                gb.edge(cur, dg[i].w);
                out.b_path_vertices.push_back(std::move(track));
            }
            out.base_h_vertices = base_count;
            out.h = gb.finish();
        }
    };
    build_side(true);
    build_side(false);
    return out;
}

namespace {

// All simple paths of exactly `len` edges from s to t.
std::vector<std::vector<std::pair<int, int>>> paths_of_length(const Graph& g, int s, int t, int len) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    std::vector<char> used(g.vertex_count(), 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (left == 0) {
            if (v == t) out.push_back(cur);
            return;
        }
        for (int w : g.neighbors(v)) {
            if (used[w]) continue;
            used[w] = 1;
            cur.emplace_back(std::min(v, w), std::max(v, w));
            rec(w, left - 1);
            cur.pop_back();
            used[w] = 0;
        }
    };
    used[s] = 1;
    rec(s, len);
    return out;
}

// Two length-5 v-w paths that share nothing but the two anchor-tail edges
// (every v-w path ends with vprime - wprime - w).
bool has_disjoint_five_paths(const Graph& g, int v, int w, int wprime) {
    std::set<std::pair<int, int>> tail{{std::min(wprime, w), std::max(wprime, w)}};
    for (int x : g.neighbors(wprime))
        if (x != w) tail.insert({std::min(wprime, x), std::max(wprime, x)});
    auto paths = paths_of_length(g, v, w, 5);
    for (size_t i = 0; i < paths.size(); ++i)
        for (size_t j = i + 1; j < paths.size(); ++j) {
            std::set<std::pair<int, int>> pi(paths[i].begin(), paths[i].end());
            bool ok = true;
            for (auto& e : paths[j])
                if (pi.count(e) && !tail.count(e)) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
    return false;
}

// Induced subgraph on the path vertices plus its two anchors, with one
// additional edge joining the anchors in place of the rest of the graph
// (it is incident to the far anchor, the one vertex of degree one).
Graph path_with_anchor_ring(const Graph& g, std::vector<int> verts, int a1, int a2) {
    verts.push_back(a1);
    verts.push_back(a2);
    Graph out(static_cast<int>(verts.size()));
    std::map<int, int> lid;
    for (size_t i = 0; i < verts.size(); ++i) lid[verts[i]] = static_cast<int>(i);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    out.add_edge(lid.at(a1), lid.at(a2));
    return out;
}

}  // namespace

Graph xy_path_graph(const HardInstance& hi, int i) {
    int n = static_cast<int>(hi.xy_path_vertices.size());
    if (i < 0 || i >= n) throw PreconditionError("xy_path_graph: index out of range");
    return path_with_anchor_ring(hi.g, hi.xy_path_vertices[i],
                                 hi.roles_g.at("c_" + std::to_string(i + 1)),
                                 hi.roles_g.at("c_" + std::to_string(n + i + 1)));
}

Graph b_path_graph(const HardInstance& hi, int j) {
    int n = static_cast<int>(hi.b_path_vertices.size());
    if (j < 0 || j >= n) throw PreconditionError("b_path_graph: index out of range");
    return path_with_anchor_ring(hi.h, hi.b_path_vertices[j],
                                 hi.roles_h.at("c_" + std::to_string(j + 1)),
                                 hi.roles_h.at("c_" + std::to_string(n + j + 1)));
}

VerifyReport verify_instance(const HardInstance& hi, const NmwtsInstance& raw) {
    VerifyReport rep;
    NmwtsInstance inst = hi.scaled_by_3 ? raw.scaled_by_3() : raw;
    const int n = inst.n();
    const std::int64_t sig = inst.sigma_s(), sigb = inst.sigma_b();
    auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
        rep.checks.push_back({name, pass, detail});
    };

    check("g_biconnected", is_biconnected(hi.g));
    check("h_biconnected", is_biconnected(hi.h));
    check("g_series_parallel", is_connected(hi.g) && is_series_parallel(hi.g));
    check("h_series_parallel", is_connected(hi.h) && is_series_parallel(hi.h));

    std::int64_t base_expect = 4 * n * sig + 7 * n;
    check("base_gadget_size", hi.base_g_vertices == base_expect && hi.base_h_vertices == base_expect,
          "got " + std::to_string(hi.base_g_vertices) + "/" + std::to_string(hi.base_h_vertices) +
              ", expected " + std::to_string(base_expect));
    std::int64_t g_expect = base_expect + 3 * sig + 3 * n;
    std::int64_t h_expect = base_expect + 3 * sigb + 3 * n;
    check("g_vertex_count", hi.g.vertex_count() == g_expect,
          "got " + std::to_string(hi.g.vertex_count()) + ", expected " + std::to_string(g_expect));
    check("h_vertex_count", hi.h.vertex_count() == h_expect,
          "got " + std::to_string(hi.h.vertex_count()) + ", expected " + std::to_string(h_expect));

    auto degree_profile = [&](const Graph& g, int hub) {
        if (g.degree(hub) != 4 * n) return false;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (v != hub && g.degree(v) > 3) return false;
        return true;
    };
    check("g_degree_profile", degree_profile(hi.g, hi.roles_g.at("xbar")),
          "hub degree must be 4n, all others <= 3");
    check("h_degree_profile", degree_profile(hi.h, hi.roles_h.at("ybar")),
          "hub degree must be 4n, all others <= 3");

    bool dpaths = true;
    for (int i = 0; i < n && dpaths; ++i) {
        std::string cd = "c_" + std::to_string(n + i + 1);
        std::string cpd = "cprime_" + std::to_string(n + i + 1);
        dpaths = has_disjoint_five_paths(hi.g, hi.roles_g.at("xbar"), hi.roles_g.at(cd),
                                         hi.roles_g.at(cpd)) &&
                 has_disjoint_five_paths(hi.h, hi.roles_h.at("ybar"), hi.roles_h.at(cd),
                                         hi.roles_h.at(cpd));
    }
    check("d_gadget_five_paths", dpaths);
    return rep;
}

bool nmwts_brute(const NmwtsInstance& inst) {
    inst.validate();
    const int n = inst.n();
    if (n > 8) throw PreconditionError("nmwts_brute handles n <= 8 only");
    std::vector<char> ux(n, 0), uy(n, 0);
    std::function<bool(int)> rec = [&](int t) -> bool {
        if (t == n) return true;
        std::set<std::pair<std::int64_t, std::int64_t>> tried;
        for (int i = 0; i < n; ++i) {
            if (ux[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (uy[j] || inst.s_x[i] + inst.s_y[j] != inst.b[t]) continue;
                if (!tried.insert({inst.s_x[i], inst.s_y[j]}).second) continue;
                ux[i] = uy[j] = 1;
                if (rec(t + 1)) return true;
                ux[i] = uy[j] = 0;
            }
        }
        return false;
    };
    return rec(0);
}

Lemma4Outcome lemma4_check(const NmwtsInstance& inst, int i, int j, std::int64_t budget) {
    HardInstance hi = build_instance(inst);
    Graph p = xy_path_graph(hi, i);
    Graph q = b_path_graph(hi, j);
    OracleResult r = mcs_brute(p, q, budget);
    if (r.budget_exceeded) return Lemma4Outcome::Inconclusive;
    int expect = std::min(p.vertex_count(), q.vertex_count()) - 1;
    return r.size == expect ? Lemma4Outcome::Holds : Lemma4Outcome::Fails;
}

}  // namespace bbpmcs
