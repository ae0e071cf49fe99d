// clifford.hpp -- exact Clifford-gate matrices over Z[w] and breadth-first
// enumeration of the finite groups they generate, projectively (global w^k
// phases quotiented).
//
// Words are printed "H2.C12.H2" and compose like matrix products: the
// rightmost factor acts first.  Generator sets by name:
//   c1   = <H1, P1>                 24 projective elements on 1 qubit
//   c2   = <H1, H2, P1, P2, C12, C21>   11520 projective elements
//   hc12 = <H1, H2, C12, C21>       1152 projective elements
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dicke/ring.hpp"
#include "dicke/state.hpp"

namespace dicke {

struct CliffordMatrix {
    int nq = 0;         // qubits the matrix acts on (1 or 2 here)
    int denom_exp = 0;  // matrix = entries / sqrt(2)^denom_exp
    std::vector<RingAmplitude> m;  // row-major, dim = 2^nq

    int dim() const { return 1 << nq; }
    static CliffordMatrix identity(int nq);
};

CliffordMatrix h_matrix(int q, int nq);
CliffordMatrix p_matrix(int q, int nq);
CliffordMatrix cnot_matrix(int control, int target, int nq);

// a*b with joint sqrt(2) factors stripped
CliffordMatrix matmul(const CliffordMatrix& a, const CliffordMatrix& b);
// global-phase-quotient canonical key (min over w^k of a fixed serialization)
std::string matrix_key(const CliffordMatrix& m);
// apply to the (1-based, distinct) target qubits of a larger state
void apply_matrix(PureState& s, const CliffordMatrix& m, const std::vector<int>& targets);

struct CliffordGroup {
    int nq = 0;
    std::vector<std::string> gen_labels;
    std::vector<CliffordMatrix> elements;  // BFS order from the identity
    std::vector<std::string> words;        // shortest-first word per element
    std::unordered_map<std::string, int> index;  // matrix_key -> element id

    std::size_t order() const { return elements.size(); }
};

// named generator set ("c1", "c2", "hc12") as label/matrix pairs
std::vector<std::pair<std::string, CliffordMatrix>> named_generators(const std::string& name);

CliffordGroup enumerate_group(const std::vector<std::pair<std::string, CliffordMatrix>>& gens,
                              std::size_t cap = 200000);

struct CliffordSubgroup {
    std::size_t group_order = 0;
    std::vector<int> element_ids;      // into the host group, ascending
    std::vector<std::string> words;

    std::size_t order() const { return element_ids.size(); }
};

// all elements of `group`, acting on `targets` of s, fixing s up to w^m
CliffordSubgroup clifford_stabilizers(const PureState& s, const CliffordGroup& group,
                                      const std::vector<int>& targets);

}  // namespace dicke
