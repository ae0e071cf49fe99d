#include "dicke/stargraph.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "dicke/entropy.hpp"

namespace dicke {

MinCut star_min_cut(const StarGraph& g, int l) {
    if (l < 0 || l > g.n_parties) throw std::invalid_argument("star_min_cut: bad l");
    double a = double(l);
    double b = double(g.n_parties - 1 - l) + g.w;
    if (b < a) return {b, false};
    return {a, true};  // tie goes to the l-side
}

double solve_w1(int n, int l) {
    if (n < 2 || l < 1 || l >= n) throw std::invalid_argument("solve_w1: bad (n,l)");
    return double(l) + std::log(double(n) / (n - l)) - double(n - 1);
}

double solve_w2(int n, int l) {
    if (n < 2 || l < 1 || l >= n) throw std::invalid_argument("solve_w2: bad (n,l)");
    return std::log(double(n) / l) - double(l) + 1.0;
}

double wstate_startilde(int n, int l) {
    if (n < 2 || l < 1 || l >= n) throw std::invalid_argument("wstate_startilde: bad (n,l)");
    StarGraph g1{n, solve_w1(n, l)};
    StarGraph g2{n, solve_w2(n, l)};
    return (double(n - l) * star_min_cut(g1, l).value +
            double(l) * star_min_cut(g2, n - l).value) /
           double(n);
}

StarGraphSum build_stargraph_sum(int n, int k, int l) {
    if (n < 2 || k < 0 || k > n || l < 1 || l >= n)
        throw std::invalid_argument("build_stargraph_sum: bad (n,k,l)");
    StarGraphSum sum;
    sum.n = n;
    sum.k = k;
    sum.l = l;
    double nk = double(binom(n, k));
    for (int i = 0; i <= std::min(l, k); ++i) {
        std::uint64_t c = binom(l, i) * binom(n - l, k - i);
        if (c == 0) continue;
        StarTerm t;
        t.coefficient = double(c) / nk;
        t.target = std::log(nk / double(c));  // -ln p_i
        // terms with most excitations on the complement cut out the l-side,
        // mirroring the k=1 construction (i=0 -> w1 on side l, i=1 -> w2 on
        // side n-l); switch sides if only the other side can reach the target
        int side = (2 * i <= k) ? l : n - l;
        int other = n - side;
        if (t.target > double(side) && t.target <= double(other)) side = other;
        t.cut_side = side;
        t.achievable = t.target <= double(side);
        t.graph = StarGraph{n, t.target - double(n - 1 - side)};
        sum.terms.push_back(t);
    }
    return sum;
}

double evaluate(const StarGraphSum& sum) {
    double s = 0.0;
    for (const auto& t : sum.terms) s += t.coefficient * star_min_cut(t.graph, t.cut_side).value;
    return s;
}

std::string stargraph_to_dot(const StarGraphSum& sum) {
    std::string out = "graph stars {\n";
    char buf[160];
    for (std::size_t t = 0; t < sum.terms.size(); ++t) {
        const auto& term = sum.terms[t];
        std::snprintf(buf, sizeof buf,
                      "  subgraph cluster_%zu {\n    label=\"p=%.10g cut_side=%d\";\n",
                      t, term.coefficient, term.cut_side);
        out += buf;
        std::snprintf(buf, sizeof buf, "    v%zu [shape=point];\n", t);
        out += buf;
        for (int p = 1; p <= sum.n; ++p) {
            std::snprintf(buf, sizeof buf, "    v%zu -- \"P%d_%zu\" [label=\"1\"];\n", t, p, t);
            out += buf;
        }
        std::snprintf(buf, sizeof buf, "    v%zu -- \"O_%zu\" [label=\"%.10g\"];\n", t, t,
                      term.graph.w);
        out += buf;
        out += "  }\n";
    }
    out += "}\n";
    return out;
}

std::string stargraph_to_json(const StarGraphSum& sum) {
    nlohmann::ordered_json j;
    j["n"] = sum.n;
    j["k"] = sum.k;
    j["l"] = sum.l;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& t : sum.terms) {
        nlohmann::ordered_json e;
        e["coefficient"] = t.coefficient;
        e["weight"] = t.graph.w;
        e["cut_side"] = t.cut_side;
        e["target"] = t.target;
        e["achievable"] = t.achievable;
        e["min_cut"] = star_min_cut(t.graph, t.cut_side).value;
        arr.push_back(std::move(e));
    }
    j["terms"] = std::move(arr);
    j["evaluate"] = evaluate(sum);
    return j.dump();
}

}  // namespace dicke
