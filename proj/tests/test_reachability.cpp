#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dicke/entropy.hpp"
#include "dicke/reachability.hpp"
#include "dicke/state.hpp"

using namespace dicke;

TEST_CASE("generator sets") {
    auto pauli = generator_set("pauli", 3, {});
    REQUIRE(pauli.size() == 9);  // X,Y,Z per qubit
    for (auto& g : pauli) CHECK_FALSE(g.directed);
    CHECK(pauli[0].label == "X1");
    std::set<std::string> labels;
    for (auto& g : pauli) labels.insert(g.label);
    CHECK(labels.count("Y2") == 1);
    CHECK(labels.count("Z3") == 1);

    auto c1 = generator_set("c1", 2, {2});
    REQUIRE(c1.size() == 2);
    CHECK(c1[0].label == "H2");
    CHECK_FALSE(c1[0].directed);
    CHECK(c1[1].label == "P2");
    CHECK(c1[1].directed);  // P is not an involution

    auto hc12 = generator_set("hc12", 3, {1, 3});
    REQUIRE(hc12.size() == 4);
    std::vector<std::string> want{"H1", "H3", "C13", "C31"};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(hc12[i].label == want[i]);
        CHECK_FALSE(hc12[i].directed);
    }

    auto c2 = generator_set("c2", 2, {1, 2});
    REQUIRE(c2.size() == 6);
    CHECK(c2[2].label == "P1");
    CHECK(c2[2].directed);

    CHECK_THROWS(generator_set("nope", 2, {1, 2}));
    CHECK_THROWS(generator_set("hc12", 2, {1}));    // needs two targets
    CHECK_THROWS(generator_set("hc12", 2, {1, 3})); // target out of range
    CHECK_THROWS(generator_set("hc12", 2, {1, 1})); // targets must differ
}

TEST_CASE("Pauli orbit of |D^3_1>") {
    auto g = build_orbit(make_dicke(3, 1), "pauli", {});
    CHECK(g.vertices.size() == 32);
    CHECK(g.keys.size() == 32);
    CHECK(g.edges.size() == 32 * 9);  // one out-edge per (vertex, generator)
    std::set<std::string> distinct(g.keys.begin(), g.keys.end());
    CHECK(distinct.size() == 32);
    CHECK(g.keys[0] == canonical_key(make_dicke(3, 1)));
    std::set<std::pair<std::pair<int, int>, int>> seen;
    for (auto& e : g.edges) {
        CHECK(e.from >= 0);
        CHECK(e.from < 32);
        CHECK(e.to >= 0);
        CHECK(e.to < 32);
        CHECK(e.gen >= 0);
        CHECK(e.gen < 9);
        seen.insert({{e.from, e.to}, e.gen});
    }
    // undirected generators: the reverse edge is present under the same label
    for (auto& e : g.edges)
        CHECK(seen.count({{e.to, e.from}, e.gen}) == 1);
}

TEST_CASE("hc12 orbit sizes") {
    CHECK(build_orbit(make_dicke(2, 1), "hc12", {1, 2}).vertices.size() == 24);
    CHECK(build_orbit(make_dicke(3, 1), "hc12", {1, 2}).vertices.size() == 288);
    CHECK_THROWS(build_orbit(make_dicke(3, 1), "hc12", {1, 2}, 100));  // cap hit
}

TEST_CASE("Pauli images share one entropy class (local unitaries)") {
    auto g = build_orbit(make_dicke(3, 1), "pauli", {});
    auto c = classify_vertices(g);
    CHECK(c.base == 2.0);
    REQUIRE(c.class_vectors.size() == 1);
    CHECK(c.vertex_class.size() == 32);
    CHECK(c.class_colors == std::vector<std::string>{"red"});
    for (int cl : c.vertex_class) CHECK(cl == 0);
    // the class vector is (S_1,S_2,S_12) of |D^3_1> itself
    double s = dicke_entropy(3, 1, 1, 2.0);
    REQUIRE(c.class_vectors[0].entries.size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(c.class_vectors[0].entries[i] == doctest::Approx(s).epsilon(1e-12));
    auto census = entropy_census(c);
    CHECK(census.count == 1);
    CHECK(census.values[0] == doctest::Approx(s).epsilon(1e-12));
}

TEST_CASE("classification of the two-qubit Clifford orbit of |D^3_1>") {
    auto g = build_orbit(make_dicke(3, 1), "hc12", {1, 2});
    auto c = classify_vertices(g);
    REQUIRE(c.class_vectors.size() == 5);
    CHECK(c.vertex_class.size() == 288);
    CHECK(c.vertex_class[0] == 0);  // seed defines class 0
    std::vector<std::string> palette{"red", "blue", "green", "yellow", "magenta"};
    CHECK(c.class_colors == palette);
    std::vector<int> pop(5, 0);
    for (int cl : c.vertex_class) {
        REQUIRE(cl >= 0);
        REQUIRE(cl < 5);
        ++pop[cl];
    }
    CHECK(std::count(pop.begin(), pop.end(), 64) == 4);
    CHECK(std::count(pop.begin(), pop.end(), 32) == 1);
}

TEST_CASE("census of distinct nonzero entropies") {
    auto g = build_orbit(make_dicke(3, 1), "hc12", {1, 2});
    auto census = entropy_census(classify_vertices(g));
    CHECK(census.count == 4);
    CHECK(census.stable);
    CHECK(std::is_sorted(census.values.begin(), census.values.end()));
    CHECK(census.values.front() == doctest::Approx(0.5500477596).epsilon(1e-8));
    CHECK(census.values.back() == doctest::Approx(1.0).epsilon(1e-12));

    // a two-qubit orbit passes through product states: zeros are excluded
    auto g2 = build_orbit(make_dicke(2, 1), "hc12", {1, 2});
    auto cls2 = classify_vertices(g2);
    CHECK(cls2.class_vectors.size() == 2);
    auto c2 = entropy_census(cls2);
    CHECK(c2.count == 1);
    CHECK(c2.values[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("conjectured census size") {
    CHECK(conjectured_census(2) == 1);
    CHECK(conjectured_census(3) == 4);
    CHECK(conjectured_census(4) == 6);
    CHECK(conjectured_census(10) == 21);
}

TEST_CASE("exports and JSON round-trip") {
    auto g = build_orbit(make_dicke(2, 1), "hc12", {1, 2});
    auto c = classify_vertices(g);
    std::string dot = export_dot(g, &c);
    CHECK(dot.rfind("digraph reachability", 0) == 0);
    CHECK(dot.find("dir=none") != std::string::npos);
    CHECK(dot.find("fillcolor") != std::string::npos);
    std::string gml = export_graphml(g, &c);
    CHECK(gml.find("<graphml") != std::string::npos);
    CHECK(gml.find("directed=\"false\"") != std::string::npos);  // H/CNOT edges
    CHECK(gml.find("<data key=\"d2\">red</data>") != std::string::npos);

    std::string js = export_graph_json(g, &c);
    auto back = graph_from_json(js);
    CHECK(back.n == g.n);
    CHECK(back.group == g.group);
    CHECK(back.vertices.size() == g.vertices.size());
    CHECK(back.edges.size() == g.edges.size());
    CHECK(back.keys == g.keys);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        CHECK(back.edges[i].from == g.edges[i].from);
        CHECK(back.edges[i].to == g.edges[i].to);
        CHECK(back.edges[i].gen == g.edges[i].gen);
    }
}

TEST_CASE("graph invariants separate the non-isomorphic 288-vertex orbits") {
    auto dicke_graph = build_orbit(make_dicke(3, 1), "hc12", {1, 2});
    PureState stab = PureState::basis(3, 0);
    apply_word(stab, "H1.P1.H2.C23");  // |+i> (x) Bell pair
    auto stab_graph = build_orbit(stab, "hc12", {1, 2});
    REQUIRE(dicke_graph.vertices.size() == 288);
    REQUIRE(stab_graph.vertices.size() == 288);
    auto why = distinguish_graphs(dicke_graph, stab_graph);
    REQUIRE(why.has_value());
    CHECK(*why == "edge_count");
    CHECK_FALSE(distinguish_graphs(dicke_graph, dicke_graph).has_value());
    // a vertex relabeling of the same graph must stay indistinguishable
    auto relabeled = stab_graph;
    std::reverse(relabeled.keys.begin(), relabeled.keys.end());
    std::reverse(relabeled.vertices.begin(), relabeled.vertices.end());
    int last = int(relabeled.vertices.size()) - 1;
    for (auto& e : relabeled.edges) {
        e.from = last - e.from;
        e.to = last - e.to;
    }
    CHECK_FALSE(distinguish_graphs(stab_graph, relabeled).has_value());
}

TEST_CASE("scan rows render as CSV") {
    std::vector<ScanRow> rows{{3, 1, "hc12", 288, 5, 4, true},
                              {4, 1, "hc12", 288, 5, 6, false}};
    std::string csv = scan_rows_to_csv(rows);
    CHECK(csv.rfind("n,k,group,orbit_size,num_classes,num_entropies,census_stable",
                    0) == 0);
    CHECK(csv.find("3,1,hc12,288,5,4,1") != std::string::npos);
    CHECK(csv.find("4,1,hc12,288,5,6,0") != std::string::npos);
}
