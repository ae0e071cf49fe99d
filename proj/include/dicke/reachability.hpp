// reachability.hpp -- gate-orbit graphs of exact states under a named
// generator set, entropy-vector classification of the vertices, and the
// census of distinct entanglement entropies.
//
// Vertices are states up to a global w^k (canonical keys), discovered
// breadth-first with the generators applied in their listed order, so vertex
// numbering, edges and every export are deterministic.  Each vertex carries
// one out-edge per generator (self-loops included); self-inverse generators
// (H, CNOT, X, Y, Z) give undirected edges, P gives directed ones.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dicke/entropy.hpp"
#include "dicke/state.hpp"

namespace dicke {

struct GateGen {
    std::string label;
    Gate gate = Gate::H;
    int a = 0, b = 0;
    bool directed = false;
};

// "pauli" (X/Y/Z on every qubit), "c1" (H,P on targets[0]),
// "c2" / "hc12" on targets[0], targets[1]
std::vector<GateGen> generator_set(const std::string& name, int n,
                                   const std::vector<int>& targets);

struct OrbitEdge {
    int from = 0, to = 0;
    int gen = 0;  // index into gens
};

struct ReachabilityGraph {
    int n = 0;
    std::string group;
    std::vector<GateGen> gens;
    std::vector<PureState> vertices;  // discovery order; [0] is the seed
    std::vector<std::string> keys;
    std::vector<OrbitEdge> edges;  // one per (vertex, generator)
};

ReachabilityGraph build_orbit(const PureState& seed, const std::string& group,
                              const std::vector<int>& targets, std::size_t cap = 1000000);

struct Classification {
    double base = 2.0;
    double tolerance = 1e-9;
    std::vector<int> vertex_class;           // per vertex, by first appearance
    std::vector<EntropyVector> class_vectors;  // reduced form
    std::vector<std::string> class_colors;   // fixed palette, cycled
};

// reduced-form entropy vector per vertex (min-side eigenproblems), classes
// deduplicated at `tol` per component in order of first appearance
Classification classify_vertices(const ReachabilityGraph& g, double base = 2.0,
                                 double tol = 1e-9);

struct EntropyCensus {
    std::vector<double> values;  // distinct nonzero entropies, ascending
    std::size_t count = 0;
    std::size_t audit_count = 0;  // recount at tol/2
    bool stable = true;           // count == audit_count
};

// distinct nonzero scalar entropies across all class-vector components;
// exact zeros are excluded from the count
EntropyCensus entropy_census(const Classification& c, double tol = 1e-9);

// conjectured census size for the hc12 orbit of |D^N_1>: floor((5N-7)/2)
std::int64_t conjectured_census(int n);

std::string export_dot(const ReachabilityGraph& g, const Classification* c = nullptr);
std::string export_graphml(const ReachabilityGraph& g, const Classification* c = nullptr);
std::string export_graph_json(const ReachabilityGraph& g, const Classification* c = nullptr);
ReachabilityGraph graph_from_json(const std::string& text);

// multiset invariants strong enough to separate the graphs compared here;
// returns the name of the first invariant that differs, nullopt if all agree
std::optional<std::string> distinguish_graphs(const ReachabilityGraph& a,
                                              const ReachabilityGraph& b);

struct ScanRow {
    int n = 0, k = 0;
    std::string group;
    std::size_t orbit_size = 0;
    std::size_t num_classes = 0;
    std::size_t num_entropies = 0;
    bool census_stable = true;
};

std::string scan_rows_to_csv(const std::vector<ScanRow>& rows);

}  // namespace dicke
