#include <doctest.h>

#include <set>

#include "bbpmcs/reduction.hpp"
#include "generators.hpp"

using namespace bbpmcs;
namespace ts = bbpmcs::testsupport;

TEST_SUITE_BEGIN("reduction");

TEST_CASE("gadget shapes") {
    // B with sigma 2: a 6-cycle with v and w antipodal
    BuiltGadget b = build_gadget(GadgetKind::B, 2);
    CHECK(b.graph.vertex_count() == 6);
    CHECK(b.graph.edge_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(b.graph.degree(v) == 2);

    // K: 4 vertices, 4 edges, degrees (2,3,2,1)
    BuiltGadget kg = build_gadget(GadgetKind::K, 0);
    CHECK(kg.graph.vertex_count() == 4);
    CHECK(kg.graph.edge_count() == 4);
    std::multiset<int> degs;
    for (int v = 0; v < 4; ++v) degs.insert(kg.graph.degree(v));
    CHECK(degs == std::multiset<int>{1, 2, 2, 3});

    // C with sigma 2: the 6-cycle plus anchor and prime anchor
    BuiltGadget c = build_gadget(GadgetKind::C, 2);
    CHECK(c.graph.vertex_count() == 8);
    CHECK(c.graph.degree(c.roles.at("w")) == 1);
    CHECK(c.graph.degree(c.roles.at("wprime")) == 2);
    CHECK(c.graph.has_edge(c.roles.at("vprime"), c.roles.at("wprime")));

    // P: path of length 2 between its degree-1 endpoints
    BuiltGadget p = build_gadget(GadgetKind::P, 0);
    CHECK(p.graph.vertex_count() == 3);
    CHECK(p.graph.degree(p.roles.at("v")) == 1);
    CHECK(p.graph.degree(p.roles.at("w")) == 1);
}

TEST_CASE("D gadget keeps outerplanarity and the five-edge paths") {
    for (std::int64_t sigma : {3, 4, 6, 9}) {
        BuiltGadget d = build_gadget(GadgetKind::D, sigma);
        CHECK(d.graph.edge_count() == d.graph.vertex_count() + 2);  // cycle + tail + 2 chords
        CHECK(is_outerplanar(d.graph));
        CHECK(d.graph.degree(d.roles.at("v")) == 2);  // chords never touch the hub corner
    }
    // too small for side-interior chords: the footnote scaling applies
    CHECK_THROWS_WITH_AS(build_gadget(GadgetKind::D, 2), doctest::Contains("multiply"),
                         PreconditionError);
    CHECK_THROWS_AS(build_gadget(GadgetKind::D, 1), PreconditionError);
}

TEST_CASE("nmwts_brute") {
    CHECK(nmwts_brute({{1}, {1}, {2}}));
    CHECK_FALSE(nmwts_brute({{1}, {1}, {3}}));
    CHECK(nmwts_brute({{1, 2}, {3, 4}, {4, 6}}));
    CHECK_FALSE(nmwts_brute({{1, 2}, {3, 4}, {4, 7}}));
    CHECK(nmwts_brute({{1, 1, 1, 1, 1, 1, 1, 1},
                       {1, 1, 1, 1, 1, 1, 1, 1},
                       {2, 2, 2, 2, 2, 2, 2, 2}}));
    NmwtsInstance big;
    big.s_x.assign(9, 1);
    big.s_y.assign(9, 1);
    big.b.assign(9, 2);
    CHECK_THROWS_AS(nmwts_brute(big), PreconditionError);
}

TEST_CASE("instance JSON round trip") {
    NmwtsInstance inst = NmwtsInstance::from_json_text(R"({"s_x":[1,2],"s_y":[3,4],"b":[4,6]})");
    CHECK(inst.n() == 2);
    CHECK(inst.sigma_s() == 10);
    CHECK(inst.sigma_b() == 10);
    NmwtsInstance again = NmwtsInstance::from_json_text(inst.to_json_text());
    CHECK(again.s_x == inst.s_x);
    CHECK_THROWS_AS(NmwtsInstance::from_json_text("{}"), ParseError);
    NmwtsInstance bad{{1}, {1}, {0}};
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
}

TEST_CASE("vertex counts match the size formulas") {
    // sigma_s = 2 cannot host the D chords, so the builder applies the
    // footnote scaling: values become (3,3), b becomes (6), sigma = 6
    NmwtsInstance inst{{1}, {1}, {2}};
    HardInstance hi = build_instance(inst);
    CHECK(hi.scaled_by_3);
    CHECK(hi.base_g_vertices == 31);  // 4n*sigma + 7n with n=1, sigma=6
    CHECK(hi.base_h_vertices == 31);
    CHECK(hi.g.vertex_count() == 52);  // + 3*sigma + 3n
    CHECK(hi.h.vertex_count() == 52);  // + 3*sigma_b + 3n

    NmwtsInstance inst2{{1, 2}, {2, 1}, {3, 3}};
    HardInstance hi2 = build_instance(inst2);
    CHECK_FALSE(hi2.scaled_by_3);
    std::int64_t sig = inst2.sigma_s();
    CHECK(hi2.base_g_vertices == 4 * 2 * sig + 7 * 2);
    CHECK(hi2.g.vertex_count() == 4 * 2 * sig + 7 * 2 + 3 * sig + 3 * 2);
    CHECK(hi2.h.vertex_count() == 4 * 2 * sig + 7 * 2 + 3 * inst2.sigma_b() + 3 * 2);
    // equal graph sizes iff the value sums agree
    CHECK((hi2.g.vertex_count() == hi2.h.vertex_count()) == (sig == inst2.sigma_b()));
}

TEST_CASE("hub degree is 4n and everything else stays <= 3") {
    NmwtsInstance inst{{1, 2}, {1, 1}, {2, 3}};
    HardInstance hi = build_instance(inst);
    CHECK(hi.g.degree(hi.roles_g.at("xbar")) == 8);
    CHECK(hi.h.degree(hi.roles_h.at("ybar")) == 8);
    for (int v = 0; v < hi.g.vertex_count(); ++v)
        if (v != hi.roles_g.at("xbar")) CHECK(hi.g.degree(v) <= 3);
}

TEST_CASE("verify_instance passes on generated instances and catches corruption") {
    NmwtsInstance inst{{1}, {1}, {2}};
    HardInstance hi = build_instance(inst);
    VerifyReport rep = verify_instance(hi, inst);
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
    REQUIRE(rep.all_pass());

    // delete one anchor-tail edge: biconnectivity must fail
    HardInstance corrupt = hi;
    Graph g2(hi.g.vertex_count());
    int w = hi.roles_g.at("c_2"), wp = hi.roles_g.at("cprime_2");
    for (auto [u, v] : hi.g.edges())
        if (!(u == std::min(w, wp) && v == std::max(w, wp))) g2.add_edge(u, v);
    REQUIRE(g2.edge_count() == hi.g.edge_count() - 1);
    corrupt.g = g2;
    VerifyReport rep2 = verify_instance(corrupt, inst);
    CHECK_FALSE(rep2.all_pass());
}

TEST_CASE("build_instance rejects oversized requests") {
    NmwtsInstance inst{{1000000}, {1000000}, {2000000}};
    CHECK_THROWS_AS(build_instance(inst, 1000), PreconditionError);
}

TEST_CASE("scaling by three") {
    NmwtsInstance inst{{1}, {2}, {3}};
    NmwtsInstance scaled = inst.scaled_by_3();
    CHECK(scaled.s_x == std::vector<std::int64_t>{3});
    CHECK(scaled.b == std::vector<std::int64_t>{9});
    CHECK(nmwts_brute(inst) == nmwts_brute(scaled));
}

TEST_CASE("lemma 4 path property on small instances") {
    NmwtsInstance inst{{1}, {1}, {2}};
    CHECK(lemma4_check(inst, 0, 0) == Lemma4Outcome::Holds);
    NmwtsInstance wide{{1}, {1}, {5}};
    CHECK(lemma4_check(wide, 0, 0) == Lemma4Outcome::Holds);
    NmwtsInstance two{{1, 2}, {2, 1}, {3, 3}};
    CHECK(lemma4_check(two, 0, 1) == Lemma4Outcome::Holds);
    CHECK(lemma4_check(inst, 0, 0, 5) == Lemma4Outcome::Inconclusive);
}

TEST_CASE("generated graphs stay verified over random instances") {
    ts::Rng rng(91919);
    for (int iter = 0; iter < 6; ++iter) {
        int n = 1 + static_cast<int>(rng() % 3);
        NmwtsInstance inst;
        for (int i = 0; i < n; ++i) {
            inst.s_x.push_back(1 + static_cast<int>(rng() % 4));
            inst.s_y.push_back(1 + static_cast<int>(rng() % 4));
            inst.b.push_back(1 + static_cast<int>(rng() % 8));
        }
        HardInstance hi = build_instance(inst);
        VerifyReport rep = verify_instance(hi, inst);
        INFO(inst.to_json_text());
        CHECK(rep.all_pass());
    }
}

TEST_SUITE_END();
