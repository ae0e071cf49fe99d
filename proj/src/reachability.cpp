#include "dicke/reachability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace dicke {

namespace {

const char* kPalette[6] = {"red", "blue", "green", "yellow", "magenta", "cyan"};

void check_target(int q, int n) {
    if (q < 1 || q > n) throw std::invalid_argument("generator target out of range");
}

std::string gate_name(Gate g) {
    switch (g) {
        case Gate::H: return "H";
        case Gate::P: return "P";
        case Gate::X: return "X";
        case Gate::Y: return "Y";
        case Gate::Z: return "Z";
        case Gate::CNOT: return "C";
    }
    throw std::logic_error("bad gate");
}

Gate gate_from_name(const std::string& s) {
    if (s == "H") return Gate::H;
    if (s == "P") return Gate::P;
    if (s == "X") return Gate::X;
    if (s == "Y") return Gate::Y;
    if (s == "Z") return Gate::Z;
    if (s == "C") return Gate::CNOT;
    throw std::invalid_argument("bad gate name: " + s);
}

}  // namespace

std::vector<GateGen> generator_set(const std::string& name, int n,
                                   const std::vector<int>& targets) {
    std::vector<GateGen> gens;
    auto one = [&](Gate g, int a, int b, bool dir) {
        GateGen gg;
        gg.gate = g;
        gg.a = a;
        gg.b = b;
        gg.directed = dir;
        gg.label = gate_name(g) + std::to_string(a);
        if (g == Gate::CNOT) gg.label += std::to_string(b);
        gens.push_back(gg);
    };
    if (name == "pauli") {
        for (int q = 1; q <= n; ++q) {
            one(Gate::X, q, 0, false);
            one(Gate::Y, q, 0, false);
            one(Gate::Z, q, 0, false);
        }
        return gens;
    }
    std::vector<int> t = targets;
    if (name == "c1") {
        if (t.empty()) t = {1};
        if (t.size() != 1) throw std::invalid_argument("c1 takes one target qubit");
        check_target(t[0], n);
        one(Gate::H, t[0], 0, false);
        one(Gate::P, t[0], 0, true);
        return gens;
    }
    if (t.empty()) t = {1, 2};
    if (t.size() != 2 || t[0] == t[1])
        throw std::invalid_argument(name + " takes two distinct target qubits");
    check_target(t[0], n);
    check_target(t[1], n);
    if (name == "c2") {
        one(Gate::H, t[0], 0, false);
        one(Gate::H, t[1], 0, false);
        one(Gate::P, t[0], 0, true);
        one(Gate::P, t[1], 0, true);
        one(Gate::CNOT, t[0], t[1], false);
        one(Gate::CNOT, t[1], t[0], false);
        return gens;
    }
    if (name == "hc12") {
        one(Gate::H, t[0], 0, false);
        one(Gate::H, t[1], 0, false);
        one(Gate::CNOT, t[0], t[1], false);
        one(Gate::CNOT, t[1], t[0], false);
        return gens;
    }
    throw std::invalid_argument("unknown generator set: " + name);
}

ReachabilityGraph build_orbit(const PureState& seed, const std::string& group,
                              const std::vector<int>& targets, std::size_t cap) {
    ReachabilityGraph g;
    g.n = seed.n;
    g.group = group;
    g.gens = generator_set(group, seed.n, targets);

    PureState root = seed;
    reduce(root);
    g.vertices.push_back(root);
    g.keys.push_back(canonical_key(root));
    std::unordered_map<std::string, int> index;
    index.emplace(g.keys[0], 0);

    for (std::size_t head = 0; head < g.vertices.size(); ++head) {
        for (std::size_t gi = 0; gi < g.gens.size(); ++gi) {
            PureState next = g.vertices[head];
            const GateGen& gg = g.gens[gi];
            apply_gate(next, gg.gate, gg.a, gg.b);
            std::string key = canonical_key(next);
            auto it = index.find(key);
            int to;
            if (it == index.end()) {
                if (g.vertices.size() >= cap)
                    throw std::runtime_error("orbit exceeds vertex cap");
                to = int(g.vertices.size());
                g.vertices.push_back(next);
                g.keys.push_back(key);
                index.emplace(std::move(key), to);
            } else {
                to = it->second;
            }
            g.edges.push_back({int(head), to, int(gi)});
        }
    }
    return g;
}

Classification classify_vertices(const ReachabilityGraph& g, double base, double tol) {
    Classification c;
    c.base = base;
    c.tolerance = tol;
    c.vertex_class.reserve(g.vertices.size());
    for (const PureState& v : g.vertices) {
        EntropyVector ev = state_entropy_vector(v, base, VectorForm::Reduced, true);
        int cls = -1;
        for (std::size_t j = 0; j < c.class_vectors.size(); ++j) {
            const auto& ref = c.class_vectors[j].entries;
            bool same = ref.size() == ev.entries.size();
            for (std::size_t t = 0; same && t < ref.size(); ++t)
                same = std::fabs(ref[t] - ev.entries[t]) <= tol;
            if (same) {
                cls = int(j);
                break;
            }
        }
        if (cls < 0) {
            cls = int(c.class_vectors.size());
            c.class_vectors.push_back(std::move(ev));
            c.class_colors.push_back(kPalette[cls % 6]);
        }
        c.vertex_class.push_back(cls);
    }
    return c;
}

namespace {

std::size_t count_distinct_nonzero(std::vector<double> vals, double tol) {
    std::sort(vals.begin(), vals.end());
    std::size_t count = 0;
    double last = -1.0;
    for (double v : vals) {
        if (v <= tol) continue;  // zero entropies are not counted
        if (count == 0 || v - last > tol) {
            ++count;
            last = v;
        }
    }
    return count;
}

}  // namespace

EntropyCensus entropy_census(const Classification& c, double tol) {
    std::vector<double> vals;
    for (const EntropyVector& ev : c.class_vectors)
        for (double v : ev.entries) vals.push_back(v);
    EntropyCensus out;
    out.count = count_distinct_nonzero(vals, tol);
    out.audit_count = count_distinct_nonzero(vals, tol / 2);
    out.stable = out.count == out.audit_count;
    std::sort(vals.begin(), vals.end());
    double last = -1.0;
    bool first = true;
    for (double v : vals) {
        if (v <= tol) continue;
        if (first || v - last > tol) {
            out.values.push_back(v);
            last = v;
            first = false;
        }
    }
    return out;
}

std::int64_t conjectured_census(int n) { return (std::int64_t(5) * n - 7) / 2; }

namespace {

// undirected generator edges appear once from each endpoint; keep from <= to
bool emit_edge(const ReachabilityGraph& g, const OrbitEdge& e) {
    if (g.gens[e.gen].directed) return true;
    return e.from <= e.to;
}

}  // namespace

std::string export_dot(const ReachabilityGraph& g, const Classification* c) {
    std::ostringstream os;
    os << "digraph reachability {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        os << "  " << v;
        if (c) {
            os << " [style=filled fillcolor=" << c->class_colors[c->vertex_class[v]]
               << " class=" << c->vertex_class[v] << "]";
        }
        os << ";\n";
    }
    for (const OrbitEdge& e : g.edges) {
        if (!emit_edge(g, e)) continue;
        os << "  " << e.from << " -> " << e.to << " [label=\"" << g.gens[e.gen].label
           << "\"";
        if (!g.gens[e.gen].directed) os << " dir=none";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string export_graphml(const ReachabilityGraph& g, const Classification* c) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    os << "  <key id=\"d0\" for=\"edge\" attr.name=\"gate\" attr.type=\"string\"/>\n";
    if (c) {
        os << "  <key id=\"d1\" for=\"node\" attr.name=\"class\" attr.type=\"int\"/>\n";
        os << "  <key id=\"d2\" for=\"node\" attr.name=\"color\" attr.type=\"string\"/>\n";
    }
    os << "  <graph id=\"reachability\" edgedefault=\"directed\">\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        os << "    <node id=\"n" << v << "\"";
        if (c) {
            os << ">\n      <data key=\"d1\">" << c->vertex_class[v] << "</data>\n";
            os << "      <data key=\"d2\">" << c->class_colors[c->vertex_class[v]]
               << "</data>\n    </node>\n";
        } else {
            os << "/>\n";
        }
    }
    for (const OrbitEdge& e : g.edges) {
        if (!emit_edge(g, e)) continue;
        os << "    <edge source=\"n" << e.from << "\" target=\"n" << e.to << "\"";
        if (!g.gens[e.gen].directed) os << " directed=\"false\"";
        os << ">\n      <data key=\"d0\">" << g.gens[e.gen].label
           << "</data>\n    </edge>\n";
    }
    os << "  </graph>\n</graphml>\n";
    return os.str();
}

std::string export_graph_json(const ReachabilityGraph& g, const Classification* c) {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    j["group"] = g.group;
    j["generators"] = nlohmann::ordered_json::array();
    for (const GateGen& gg : g.gens) {
        nlohmann::ordered_json jg;
        jg["label"] = gg.label;
        jg["gate"] = gate_name(gg.gate);
        jg["a"] = gg.a;
        if (gg.gate == Gate::CNOT) jg["b"] = gg.b;
        jg["directed"] = gg.directed;
        j["generators"].push_back(jg);
    }
    j["vertices"] = nlohmann::ordered_json::array();
    for (const PureState& v : g.vertices)
        j["vertices"].push_back(nlohmann::ordered_json::parse(state_to_json(v)));
    j["edges"] = nlohmann::ordered_json::array();
    for (const OrbitEdge& e : g.edges)
        j["edges"].push_back({e.from, e.to, e.gen});
    if (c) {
        nlohmann::ordered_json jc;
        jc["base"] = c->base;
        jc["vertex_class"] = c->vertex_class;
        jc["class_colors"] = c->class_colors;
        jc["class_vectors"] = nlohmann::ordered_json::array();
        for (const EntropyVector& ev : c->class_vectors) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (double v : ev.entries) row.push_back(v);
            jc["class_vectors"].push_back(row);
        }
        j["classes"] = jc;
    }
    return j.dump(2) + "\n";
}

ReachabilityGraph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ReachabilityGraph g;
    g.n = j.at("n").get<int>();
    g.group = j.at("group").get<std::string>();
    for (const auto& jg : j.at("generators")) {
        GateGen gg;
        gg.label = jg.at("label").get<std::string>();
        gg.gate = gate_from_name(jg.at("gate").get<std::string>());
        gg.a = jg.at("a").get<int>();
        gg.b = jg.value("b", 0);
        gg.directed = jg.at("directed").get<bool>();
        g.gens.push_back(gg);
    }
    for (const auto& jv : j.at("vertices")) {
        PureState s = state_from_json(jv.dump());
        g.keys.push_back(canonical_key(s));
        g.vertices.push_back(std::move(s));
    }
    for (const auto& je : j.at("edges"))
        g.edges.push_back({je.at(0).get<int>(), je.at(1).get<int>(), je.at(2).get<int>()});
    return g;
}

namespace {

using Hist = std::map<std::string, std::size_t>;

// per-vertex multiset of generator labels that fix the vertex
std::vector<std::string> loop_signatures(const ReachabilityGraph& g) {
    std::vector<std::vector<std::string>> loops(g.vertices.size());
    for (const OrbitEdge& e : g.edges)
        if (e.from == e.to) loops[e.from].push_back(g.gens[e.gen].label);
    std::vector<std::string> sig(g.vertices.size());
    for (std::size_t v = 0; v < sig.size(); ++v) {
        std::sort(loops[v].begin(), loops[v].end());
        std::string s;
        for (const auto& l : loops[v]) s += l + ",";
        sig[v] = s;
    }
    return sig;
}

Hist to_hist(const std::vector<std::string>& sig) {
    Hist h;
    for (const auto& s : sig) ++h[s];
    return h;
}

// one round of label-aware neighborhood refinement
std::vector<std::string> refine(const ReachabilityGraph& g,
                                const std::vector<std::string>& col) {
    std::vector<std::vector<std::string>> nbr(g.vertices.size());
    for (const OrbitEdge& e : g.edges) {
        // undirected generators store both edge copies, so one entry per record
        nbr[e.from].push_back(g.gens[e.gen].label + ">" + col[e.to]);
        if (g.gens[e.gen].directed)
            nbr[e.to].push_back(g.gens[e.gen].label + "<" + col[e.from]);
    }
    std::vector<std::string> out(g.vertices.size());
    for (std::size_t v = 0; v < out.size(); ++v) {
        std::sort(nbr[v].begin(), nbr[v].end());
        std::string s = col[v] + "|";
        for (const auto& t : nbr[v]) s += t + ";";
        out[v] = s;
    }
    return out;
}

}  // namespace

namespace {

// relabel both colorings with one shared dense id map so signatures stay
// short across rounds and stay comparable between the two graphs
std::size_t compress_jointly(std::vector<std::string>& ca, std::vector<std::string>& cb) {
    std::set<std::string> all(ca.begin(), ca.end());
    all.insert(cb.begin(), cb.end());
    std::map<std::string, std::string> id;
    std::size_t next = 0;
    for (const std::string& s : all) id[s] = "c" + std::to_string(next++);
    for (std::string& s : ca) s = id[s];
    for (std::string& s : cb) s = id[s];
    return all.size();
}

}  // namespace

std::optional<std::string> distinguish_graphs(const ReachabilityGraph& a,
                                              const ReachabilityGraph& b) {
    if (a.vertices.size() != b.vertices.size()) return "vertex_count";
    std::size_t ea = 0, eb = 0;
    for (const OrbitEdge& e : a.edges) ea += emit_edge(a, e);
    for (const OrbitEdge& e : b.edges) eb += emit_edge(b, e);
    if (ea != eb) return "edge_count";
    std::vector<std::string> ca = loop_signatures(a), cb = loop_signatures(b);
    if (to_hist(ca) != to_hist(cb)) return "self_loop_labels";
    std::size_t prev = compress_jointly(ca, cb);
    for (std::size_t round = 1; round <= a.vertices.size(); ++round) {
        ca = refine(a, ca);
        cb = refine(b, cb);
        if (to_hist(ca) != to_hist(cb))
            return "refinement_round_" + std::to_string(round);
        std::size_t colors = compress_jointly(ca, cb);
        if (colors == prev) break;  // coloring stabilized
        prev = colors;
    }
    return std::nullopt;
}

std::string scan_rows_to_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "n,k,group,orbit_size,num_classes,num_entropies,census_stable\n";
    for (const ScanRow& r : rows) {
        os << r.n << "," << r.k << "," << r.group << "," << r.orbit_size << ","
           << r.num_classes << "," << r.num_entropies << ","
           << (r.census_stable ? 1 : 0) << "\n";
    }
    return os.str();
}

}  // namespace dicke
