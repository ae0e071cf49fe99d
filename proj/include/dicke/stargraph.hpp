// stargraph.hpp -- weighted star graphs whose min-cuts realize Dicke
// entanglement entropies (natural log throughout).
//
// A StarGraph has one internal vertex, N unit legs to the parties and one
// leg of weight w to the purifier O.  The min-cut for an l-party subsystem
// follows the rule
//
//   cut(l) = min{ l, N - 1 - l + w }
//
// with exact ties resolved to the l-side.  For |D^N_1> the two solved
// weights are
//
//   w1 = l + ln(N/(N-l)) - (N-1)      (w1 < 0  iff  l < N-1 - ln(N/(N-l)))
//   w2 = ln(N/l) - l + 1              (w2 < 0  iff  l > 1 + ln(N/l))
//
// and S~_l = (1/N) [ (N-l) cut_{w1}(l) + l cut_{w2}(N-l) ].
//
// For general k, S~_l (which equals S_l for Dicke states) is realized as one
// graph per hypergeometric term p_i = C(l,i)C(N-l,k-i)/C(N,k): coefficient
// p_i, target cut value -ln p_i, cut side l for terms with 2i <= k and N-l
// otherwise (falling back to the side that can reach the target when only
// one can).  Each weight solves the min rule for its target exactly; when a
// target exceeds both available sides -- which first happens at
// (N,k,l) = (8,4,4) -- no unit-leg star graph can realize the term and the
// term is marked unachievable (evaluate() then honestly under-counts).
#pragma once

#include <string>
#include <vector>

namespace dicke {

struct StarGraph {
    int n_parties = 0;
    double w = 0.0;  // weight of the purifier leg; the other n legs are unit
};

struct MinCut {
    double value = 0.0;
    bool l_side = true;  // which side of the min was selected (tie -> l-side)
};

MinCut star_min_cut(const StarGraph& g, int l);

double solve_w1(int n, int l);
double solve_w2(int n, int l);
// the two-graph k=1 realization of S~_l; equals wstate_entropy exactly
double wstate_startilde(int n, int l);

struct StarTerm {
    double coefficient = 0.0;  // p_i
    StarGraph graph;
    int cut_side = 0;       // l or n-l: the subsystem size the cut isolates
    double target = 0.0;    // -ln p_i, what the min-cut should produce
    bool achievable = true; // false iff target exceeds both cut sides
};

struct StarGraphSum {
    int n = 0, k = 0, l = 0;
    std::vector<StarTerm> terms;  // one per i = 0..min(l,k)
};

StarGraphSum build_stargraph_sum(int n, int k, int l);
// sum of coefficient * min-cut over the terms
double evaluate(const StarGraphSum& sum);

std::string stargraph_to_dot(const StarGraphSum& sum);
std::string stargraph_to_json(const StarGraphSum& sum);

}  // namespace dicke
