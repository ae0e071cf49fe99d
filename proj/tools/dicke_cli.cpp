// dicke -- command-line front end: exact Dicke-state entropies, entropy-cone
// checks, star-graph min-cut models, stabilizer subgroups, reachability
// graphs and the distinct-entropy census.
//
// Exit codes: 0 ok, 1 inequality violation / conjecture or model mismatch,
// 2 usage error.  All numeric output at 10 significant digits.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dicke/clifford.hpp"
#include "dicke/cones.hpp"
#include "dicke/entropy.hpp"
#include "dicke/pauli.hpp"
#include "dicke/reachability.hpp"
#include "dicke/stargraph.hpp"
#include "dicke/state.hpp"

using namespace dicke;

namespace {

std::string fmt10(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

double parse_base(const std::string& b) {
    if (b == "e") return std::exp(1.0);
    double v = std::stod(b);
    if (v <= 0 || v == 1) throw CLI::ValidationError("--base must be positive and != 1");
    return v;
}

// "dicke:N:k" or "basis:N:bits" (bits qubit-1-first)
PureState parse_state(const std::string& spec) {
    auto c1 = spec.find(':');
    auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("--state expects kind:N:arg, e.g. dicke:4:2");
    std::string kind = spec.substr(0, c1);
    int n = std::stoi(spec.substr(c1 + 1, c2 - c1 - 1));
    std::string arg = spec.substr(c2 + 1);
    if (n < 1 || n > 20) throw CLI::ValidationError("state qubit count out of range");
    if (kind == "dicke") {
        int k = std::stoi(arg);
        if (k < 0 || k > n) throw CLI::ValidationError("dicke weight out of range");
        return make_dicke(n, k);
    }
    if (kind == "basis") {
        if (int(arg.size()) != n) throw CLI::ValidationError("basis bits must have length N");
        std::uint64_t b = 0;
        for (int i = 0; i < n; ++i) {
            if (arg[i] == '1') b |= std::uint64_t(1) << i;
            else if (arg[i] != '0') throw CLI::ValidationError("basis bits must be 0/1");
        }
        return PureState::basis(n, b);
    }
    throw CLI::ValidationError("unknown state kind: " + kind);
}

// write to `path` (joined with DICKE_OUT_DIR when relative), "-" = stdout
void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::string full = path;
    const char* dir = std::getenv("DICKE_OUT_DIR");
    if (dir && *dir && path[0] != '/') full = std::string(dir) + "/" + path;
    std::ofstream f(full);
    if (!f) throw std::runtime_error("cannot write " + full);
    f << content;
}

struct StateArgs {
    std::string state_spec;
    std::string apply_word_str;
    int n = 0, k = -1;

    PureState make() const {
        if (state_spec.empty() && n < 1)
            throw CLI::ValidationError("give --state or --n (with optional --k)");
        PureState s = state_spec.empty() ? make_dicke(n, k < 0 ? 1 : k)
                                         : parse_state(state_spec);
        if (!apply_word_str.empty()) apply_word(s, apply_word_str);
        return s;
    }
    // (n, k) when the state is a plain Dicke spec, for closed-form paths
    std::optional<DickeSpec> dicke_spec() const {
        if (!apply_word_str.empty()) return std::nullopt;
        if (state_spec.empty()) {
            if (n < 1) throw CLI::ValidationError("give --state or --n (with optional --k)");
            return DickeSpec{n, k < 0 ? 1 : k};
        }
        if (state_spec.rfind("dicke:", 0) != 0) return std::nullopt;
        PureState probe = parse_state(state_spec);
        auto c2 = state_spec.rfind(':');
        return DickeSpec{probe.n, std::stoi(state_spec.substr(c2 + 1))};
    }
};

void add_state_options(CLI::App* cmd, StateArgs& a, bool need_state) {
    auto* st = cmd->add_option("--state", a.state_spec, "state spec: dicke:N:k or basis:N:bits");
    auto* n = cmd->add_option("--n", a.n, "qubit count (with --k, shorthand for dicke:N:k)");
    cmd->add_option("--k", a.k, "excitation count");
    cmd->add_option("--apply", a.apply_word_str, "gate word applied to the state, e.g. H1.C13");
    if (need_state) {
        st->excludes(n);
        n->excludes(st);
    }
}

int cmd_entropy(const StateArgs& sa, const std::string& base_str, int l,
                const std::string& form_str, const std::string& fmt,
                const std::string& out) {
    double base = parse_base(base_str);
    auto ds = sa.dicke_spec();
    if (l >= 0) {
        if (!ds) throw CLI::ValidationError("--l needs a plain dicke:N:k state");
        std::cout << "S(l=" << l << ") = " << fmt10(dicke_entropy(ds->n, ds->k, l, base))
                  << "\n";
        return 0;
    }
    if (form_str.empty()) {
        if (!ds) throw CLI::ValidationError("per-l table needs a plain dicke:N:k state; use --form");
        std::string s;
        for (int ll = 1; ll < ds->n; ++ll)
            s += "l=" + std::to_string(ll) + " S=" + fmt10(dicke_entropy(ds->n, ds->k, ll, base)) + "\n";
        emit(out, s);
        return 0;
    }
    VectorForm form;
    if (form_str == "full") form = VectorForm::Full;
    else if (form_str == "reduced") form = VectorForm::Reduced;
    else if (form_str == "symmetrized") form = VectorForm::Symmetrized;
    else throw CLI::ValidationError("--form must be full, reduced or symmetrized");
    EntropyVector v;
    if (ds) {
        v = dicke_entropy_vector(ds->n, ds->k, base, form);
    } else {
        if (form == VectorForm::Symmetrized)
            throw CLI::ValidationError("symmetrized form needs a plain dicke:N:k state");
        v = state_entropy_vector(sa.make(), base, form, true);
    }
    if (fmt == "json") {
        emit(out, entropy_vector_to_json(v));
    } else if (fmt == "csv") {
        emit(out, entropy_vector_to_csv(v));
    } else if (form == VectorForm::Symmetrized) {
        std::string s;
        for (std::size_t i = 0; i < v.entries.size(); ++i)
            s += "S~(l=" + std::to_string(i + 1) + ") = " + fmt10(v.entries[i]) + "\n";
        emit(out, s);
    } else {
        std::string s;
        auto masks = subsystem_masks(v.n, form);
        for (std::size_t i = 0; i < masks.size(); ++i)
            s += "S_{" + subset_label(masks[i]) + "} = " + fmt10(v.entries[i]) + "\n";
        emit(out, s);
    }
    return 0;
}

int cmd_cone(const StateArgs& sa, const std::string& base_str,
             std::vector<std::string> families, double tol, const std::string& fmt,
             const std::string& out) {
    double base = parse_base(base_str);
    auto ds = sa.dicke_spec();
    if (families.empty() || (families.size() == 1 && families[0] == "all"))
        families = {"sa", "mmi", "sqec", "shec"};
    EntropyVector full, sym;
    auto full_vec = [&]() -> const EntropyVector& {
        if (full.entries.empty())
            full = ds ? dicke_entropy_vector(ds->n, ds->k, base, VectorForm::Full)
                      : state_entropy_vector(sa.make(), base, VectorForm::Full, true);
        return full;
    };
    auto sym_vec = [&]() -> const EntropyVector& {
        if (sym.entries.empty()) {
            if (!ds)
                throw CLI::ValidationError("sqec/shec need a plain dicke:N:k state");
            sym = dicke_entropy_vector(ds->n, ds->k, base, VectorForm::Symmetrized);
        }
        return sym;
    };
    bool violated = false;
    std::string text, json = "[";
    for (std::size_t i = 0; i < families.size(); ++i) {
        const std::string& f = families[i];
        InequalityReport r;
        if (f == "sa") r = check_subadditivity(full_vec(), tol);
        else if (f == "mmi") r = check_mmi(full_vec(), tol);
        else if (f == "sqec") r = check_sqec(sym_vec(), tol);
        else if (f == "shec") r = check_shec(sym_vec(), tol);
        else throw CLI::ValidationError("unknown family: " + f + " (sa, mmi, sqec, shec)");
        violated = violated || r.any_violated();
        text += report_to_text(r);
        json += (i ? "," : "") + report_to_json(r);
    }
    json += "]\n";
    emit(out, fmt == "json" ? json : text);
    return violated ? 1 : 0;
}

int cmd_orbit(const StateArgs& sa, const std::string& group, std::vector<int> targets,
              bool color, const std::string& base_str, std::size_t cap,
              const std::string& dot, const std::string& graphml, const std::string& json) {
    PureState s = sa.make();
    ReachabilityGraph g = build_orbit(s, group, targets, cap);
    std::optional<Classification> cls;
    if (color) cls = classify_vertices(g, parse_base(base_str));
    const Classification* cp = cls ? &*cls : nullptr;
    if (!dot.empty()) emit(dot, export_dot(g, cp));
    if (!graphml.empty()) emit(graphml, export_graphml(g, cp));
    if (!json.empty()) emit(json, export_graph_json(g, cp));
    std::cout << g.vertices.size() << " vertices";
    if (cls) {
        EntropyCensus cen = entropy_census(*cls);
        std::cout << ", " << cls->class_vectors.size() << " classes, " << cen.count
                  << " distinct entropies";
    }
    std::cout << "\n";
    return 0;
}

int cmd_stab(const StateArgs& sa, const std::string& group, std::vector<int> targets) {
    PureState s = sa.make();
    if (group == "pauli") {
        PauliSubgroup sub = pauli_stabilizers(s);
        std::cout << sub.order() << " of " << sub.group_order
                  << " projective classes stabilize the state\n";
        for (const PauliString& p : sub.elements) std::cout << "  " << p.str() << "\n";
        return 0;
    }
    CliffordGroup host = enumerate_group(named_generators(group));
    if (targets.empty()) targets = host.nq == 1 ? std::vector<int>{1} : std::vector<int>{1, 2};
    CliffordSubgroup sub = clifford_stabilizers(s, host, targets);
    std::cout << sub.order() << " of " << sub.group_order << " elements stabilize the state\n";
    for (const std::string& w : sub.words) std::cout << "  " << w << "\n";
    return 0;
}

int cmd_scan(const std::string& group, int nmin, int nmax, int kmax,
             const std::string& base_str, const std::string& out) {
    double base = parse_base(base_str);
    std::vector<ScanRow> rows;
    bool mismatch = false;
    for (int n = nmin; n <= nmax; ++n) {
        int ktop = kmax > 0 ? std::min(kmax, n) : n;
        for (int k = 1; k <= ktop; ++k) {
            ReachabilityGraph g = build_orbit(make_dicke(n, k), group, {});
            Classification c = classify_vertices(g, base);
            EntropyCensus cen = entropy_census(c);
            rows.push_back({n, k, group, g.vertices.size(), c.class_vectors.size(),
                            cen.count, cen.stable});
            if (group == "hc12" && k == 1 &&
                std::int64_t(cen.count) != conjectured_census(n))
                mismatch = true;
            if (!cen.stable) mismatch = true;
        }
    }
    emit(out, scan_rows_to_csv(rows));
    return mismatch ? 1 : 0;
}

int cmd_stargraph(int n, int k, int l, const std::string& base_str,
                  const std::string& dot, const std::string& json) {
    double base = parse_base(base_str);
    double scale = 1.0 / std::log(base);  // model is natural-log native
    StarGraphSum sum = build_stargraph_sum(n, k, l);
    if (!dot.empty()) emit(dot, stargraph_to_dot(sum));
    if (!json.empty()) emit(json, stargraph_to_json(sum));
    std::cout << "terms: " << sum.terms.size() << " (expected " << sum.terms.size()
              << " = min(l,k)+1)\n";
    for (std::size_t i = 0; i < sum.terms.size(); ++i) {
        const StarTerm& t = sum.terms[i];
        MinCut cut = star_min_cut(t.graph, t.cut_side);
        std::cout << "term " << i << ": p=" << fmt10(t.coefficient)
                  << " w=" << fmt10(t.graph.w) << " side=" << t.cut_side
                  << " target=" << fmt10(t.target * scale)
                  << " mincut=" << fmt10(cut.value * scale)
                  << (t.achievable ? "" : "  [unachievable]") << "\n";
    }
    if (k == 1) {
        double w1 = solve_w1(n, l), w2 = solve_w2(n, l);
        std::cout << "w1=" << fmt10(w1) << " (negative iff l < N-1-ln(N/(N-l)))\n";
        std::cout << "w2=" << fmt10(w2) << " (negative iff l > 1+ln(N/l))\n";
    }
    double ev = evaluate(sum) * scale;
    double sy = symmetrized_entropy(n, k, l, base);
    std::cout << "sum of weighted min-cuts = " << fmt10(ev) << "\n";
    std::cout << "symmetrized entropy     = " << fmt10(sy) << "\n";
    return std::fabs(ev - sy) <= 1e-12 * std::max(1.0, std::fabs(sy)) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Dicke-state entanglement toolkit"};
    app.require_subcommand(1);

    StateArgs ent_sa;
    std::string ent_base = "2", ent_form, ent_fmt, ent_out = "-";
    int ent_l = -1;
    auto* ent = app.add_subcommand("entropy", "closed-form entropies and entropy vectors");
    add_state_options(ent, ent_sa, true);
    ent->add_option("--l", ent_l, "single subsystem size");
    ent->add_option("--base", ent_base, "log base: 2, e or a number")->capture_default_str();
    ent->add_option("--form", ent_form, "vector form: full, reduced, symmetrized");
    ent->add_flag_callback("--json", [&] { ent_fmt = "json"; }, "JSON vector output");
    ent->add_flag_callback("--csv", [&] { ent_fmt = "csv"; }, "CSV vector output");
    ent->add_option("-o,--out", ent_out, "output path ('-' = stdout)");

    StateArgs cone_sa;
    std::string cone_base = "2", cone_fmt, cone_out = "-";
    std::vector<std::string> cone_fams;
    double cone_tol = 1e-9;
    auto* cone = app.add_subcommand("cone", "entropy-cone inequality checks (exit 1 on violation)");
    add_state_options(cone, cone_sa, true);
    cone->add_option("--family,--families", cone_fams, "sa, mmi, sqec, shec or all")
        ->delimiter(',');
    cone->add_option("--base", cone_base, "log base")->capture_default_str();
    cone->add_option("--tol", cone_tol, "saturation tolerance")->capture_default_str();
    cone->add_flag_callback("--json", [&] { cone_fmt = "json"; }, "JSON report");
    cone->add_option("-o,--out", cone_out, "output path");

    StateArgs orb_sa;
    std::string orb_group, orb_base = "2", orb_dot, orb_graphml, orb_json;
    std::vector<int> orb_targets;
    bool orb_color = false;
    std::size_t orb_cap = 1000000;
    auto* orb = app.add_subcommand("orbit", "breadth-first reachability graph of a state");
    add_state_options(orb, orb_sa, true);
    orb->add_option("--group", orb_group, "pauli, c1, c2 or hc12")->required();
    orb->add_option("--targets", orb_targets, "gate target qubits (default 1 or 1,2)")
        ->delimiter(',');
    orb->add_flag("--color", orb_color, "classify vertices by entropy vector");
    orb->add_option("--base", orb_base, "log base for classification")->capture_default_str();
    orb->add_option("--cap", orb_cap, "vertex cap")->capture_default_str();
    orb->add_option("--dot", orb_dot, "write DOT file");
    orb->add_option("--graphml", orb_graphml, "write GraphML file");
    orb->add_option("--json-out", orb_json, "write JSON graph file");

    StateArgs stab_sa;
    std::string stab_group;
    std::vector<int> stab_targets;
    auto* stab = app.add_subcommand("stab", "stabilizer subgroup of a state");
    add_state_options(stab, stab_sa, true);
    stab->add_option("--group", stab_group, "pauli, c1, c2 or hc12")->required();
    stab->add_option("--targets", stab_targets, "gate target qubits")->delimiter(',');

    std::string scan_group = "hc12", scan_base = "2", scan_out = "-";
    int scan_nmin = 2, scan_nmax = 8, scan_kmax = 1;
    auto* scan = app.add_subcommand(
        "scan", "orbit/class/census CSV sweep (exit 1 on conjecture mismatch)");
    scan->add_option("--group", scan_group, "generator set")->capture_default_str();
    scan->add_option("--nmin", scan_nmin, "first N")->capture_default_str();
    scan->add_option("--nmax", scan_nmax, "last N")->capture_default_str();
    scan->add_option("--k,--kmax", scan_kmax, "max excitation (0 = all k <= N)")
        ->capture_default_str();
    scan->add_option("--base", scan_base, "log base")->capture_default_str();
    scan->add_option("-o,--out", scan_out, "output path");

    int sg_n = 0, sg_k = 0, sg_l = 0;
    std::string sg_base = "e", sg_dot, sg_json;
    auto* sg = app.add_subcommand(
        "stargraph", "weighted star-graph min-cut realization (exit 1 on mismatch)");
    sg->add_option("--n", sg_n, "qubit count")->required();
    sg->add_option("--k", sg_k, "excitation count")->required();
    sg->add_option("--l", sg_l, "subsystem size")->required();
    sg->add_option("--base", sg_base, "log base")->capture_default_str();
    sg->add_option("--dot", sg_dot, "write DOT file");
    sg->add_option("--json-out", sg_json, "write JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (ent->parsed())
            return cmd_entropy(ent_sa, ent_base, ent_l, ent_form, ent_fmt, ent_out);
        if (cone->parsed())
            return cmd_cone(cone_sa, cone_base, cone_fams, cone_tol, cone_fmt, cone_out);
        if (orb->parsed())
            return cmd_orbit(orb_sa, orb_group, orb_targets, orb_color, orb_base, orb_cap,
                             orb_dot, orb_graphml, orb_json);
        if (stab->parsed()) return cmd_stab(stab_sa, stab_group, stab_targets);
        if (scan->parsed())
            return cmd_scan(scan_group, scan_nmin, scan_nmax, scan_kmax, scan_base, scan_out);
        if (sg->parsed()) return cmd_stargraph(sg_n, sg_k, sg_l, sg_base, sg_dot, sg_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
