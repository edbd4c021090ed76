#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bbpmcs/graph.hpp"
#include "bbpmcs/oracle.hpp"

namespace bbpmcs {

// Numerical Matching with Target Sums: partition X u Y into pairs (one
// element of each) so that pair i sums to b[i].
struct NmwtsInstance {
    std::vector<std::int64_t> s_x, s_y, b;

    int n() const { return static_cast<int>(b.size()); }
    std::int64_t sigma_s() const;  // sum of values over X and Y
    std::int64_t sigma_b() const;
    void validate() const;  // equal sizes >= 1, every value >= 1
    NmwtsInstance scaled_by_3() const;

    static NmwtsInstance from_json_text(const std::string& text);
    std::string to_json_text() const;
};

enum class GadgetKind { B, C, D, K, P };

struct BuiltGadget {
    Graph graph;
    std::map<std::string, int> roles;  // v, vprime, w, wprime as applicable
};

// Standalone gadget. sigma_s sizes the cycle of kinds B/C/D; the D gadget
// needs sigma_s >= 2 (otherwise the error tells the caller to scale the
// instance values and target vector by 3).
BuiltGadget build_gadget(GadgetKind kind, std::int64_t sigma_s);

struct HardInstance {
    Graph g, h;
    std::map<std::string, int> roles_g, roles_h;
    bool scaled_by_3 = false;  // footnote rule applied because sigma_s < 3
    int base_g_vertices = 0;   // |V(B_G)|: vertices of g before the xy-paths
    int base_h_vertices = 0;
    std::vector<std::vector<int>> xy_path_vertices;  // per i: new vertices of the i-th xy-path
    std::vector<std::vector<int>> b_path_vertices;   // per i: new vertices of the i-th b-path
};

// The two reduction graphs of an instance. Instances too small to host the
// D-gadget chords are scaled by 3 first (the construction's footnote rule).
// Throws when the projected size exceeds the cap.
HardInstance build_instance(const NmwtsInstance& inst, std::int64_t vertex_cap = 1'000'000);

struct VerifyCheck {
    std::string name;
    bool pass;
    std::string detail;
};
struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
};

// Structural lemma checks on generated graphs: biconnectivity,
// series-parallelness, the vertex-count formulas, the degree profile and
// the D-gadget path property.
VerifyReport verify_instance(const HardInstance& hi, const NmwtsInstance& inst);

// pre: n <= 8.
bool nmwts_brute(const NmwtsInstance& inst);

// Extract the i-th xy-path of g (resp. j-th b-path of h) as the induced
// subgraph on its vertices and its two anchors, plus one edge joining the
// anchors in place of the rest of the graph.
Graph xy_path_graph(const HardInstance& hi, int i);
Graph b_path_graph(const HardInstance& hi, int j);

enum class Lemma4Outcome { Holds, Fails, Inconclusive };

// MCS of the i-th xy-path against the j-th b-path equals
// min(|V(P)|, |V(P')|) - 1. Inconclusive when the oracle budget runs out.
Lemma4Outcome lemma4_check(const NmwtsInstance& inst, int i, int j,
                           std::int64_t budget = kDefaultOracleBudget);

}  // namespace bbpmcs
