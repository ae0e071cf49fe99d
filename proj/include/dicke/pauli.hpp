// pauli.hpp -- exact N-qubit Pauli strings and stabilizer-subgroup scans.
//
// A PauliString is i^phase * (tensor product of letters), with the letter on
// qubit q encoded by bits x_q, z_q: (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y, and
// Y = i X Z as a matrix.  Products track the exact phase; the projective
// Pauli group on n qubits (phases quotiented) has 4^n classes.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dicke/ring.hpp"
#include "dicke/state.hpp"

namespace dicke {

struct PauliString {
    int n = 0;
    std::uint32_t x = 0;
    std::uint32_t z = 0;
    int phase = 0;  // exponent of i, 0..3

    bool operator==(const PauliString&) const = default;
    bool is_identity_class() const { return x == 0 && z == 0; }
    // signed string, e.g. "+X1 Z3", "-Z1 Z2 Z3", identity class "1"
    std::string str() const;
};

// exact product a*b (a applied after b)
PauliString pauli_mul(const PauliString& a, const PauliString& b);
// exact action on a state (permutation of amplitudes with i-power phases)
PureState pauli_apply(const PauliString& p, const PureState& s);

struct PauliSubgroup {
    int n = 0;
    std::uint64_t group_order = 0;  // 4^n projective classes in the host group
    std::vector<PauliString> elements;  // exact phases; identity first

    std::uint64_t order() const { return elements.size(); }
};

// scans all 4^n projective classes (n <= 8) for g|psi> = w^m |psi>; records
// each stabilizing class with the exact phase that fixes |psi> on the nose
PauliSubgroup pauli_stabilizers(const PureState& s);

// closure under projective products (bit xor) -- sanity check for subgroups
bool closed_under_product(const PauliSubgroup& g);

// number of n-qubit stabilizer states: 2^n * prod_{k=0}^{n-1} (2^(n-k) + 1)
BigInt stabilizer_state_count(int n);

}  // namespace dicke
