// entropy.hpp -- Dicke states |D^N_k> and their closed-form entanglement
// entropies.
//
// For any l-qubit subsystem the reduced density matrix of |D^N_k> has one
// nonzero eigenvalue per excitation count i:
//
//   p_i = C(l,i) C(N-l,k-i) / C(N,k),  i = 0..min(l,k)
//
// so S_l = -sum_i p_i log p_i, with vanishing coefficients skipped.  Two
// decoupled evaluators split off the log C(N,k) term via Vandermonde's
// identity; both must agree with the main formula to 1e-12 relative.
//
// Subsystem ordering convention used everywhere: ascending cardinality, then
// lexicographic on sorted qubit indices; the purifier is the highest-index
// qubit, so reduced-form vectors run over the non-empty subsets of qubits
// 1..N-1 in that same order.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dicke/state.hpp"

namespace dicke {

struct DickeSpec {
    int n = 0;
    int k = 0;
};

// exact binomial coefficient; throws if it would overflow 64 bits
std::uint64_t binom(int n, int k);

// |D^N_k>: uniform superposition of all weight-k basis states, exact
PureState make_dicke(int n, int k);

// S_l for an l-qubit subsystem of |D^N_k>; S_0 = S_N = 0.  base e.g. 2, e.
double dicke_entropy(int n, int k, int l, double base);
// decoupled form valid for l >= k
double dicke_entropy_reduced_lgek(int n, int k, int l, double base);
// decoupled form valid for l < k
double dicke_entropy_reduced_lltk(int n, int k, int l, double base);
// k = 1 special case: S_l = (l/N) log(N/l) + ((N-l)/N) log(N/(N-l))
double wstate_entropy(int n, int l, double base);
// binomial-weighted symmetrization; collapses to S_l for Dicke states
double symmetrized_entropy(int n, int k, int l, double base);

enum class VectorForm { Full, Reduced, Symmetrized };

struct EntropyVector {
    int n = 0;
    double base = 2.0;
    VectorForm form = VectorForm::Full;
    std::vector<double> entries;
};

// canonical subsystem mask order for full (all 2^n - 1 non-empty subsets) or
// reduced (non-empty subsets of qubits 1..n-1) vectors
std::vector<std::uint64_t> subsystem_masks(int n, VectorForm form);
// "1", "1,3", ... 1-based qubit indices of a mask
std::string subset_label(std::uint64_t mask);

EntropyVector dicke_entropy_vector(int n, int k, double base, VectorForm form);
// brute-force vector from an explicit state (exact partial trace + eigen).
// minside uses S_I = S_complement to keep the eigenproblems small.
EntropyVector state_entropy_vector(const PureState& s, double base, VectorForm form,
                                   bool minside = false);

std::string entropy_vector_to_json(const EntropyVector& v);
std::string entropy_vector_to_csv(const EntropyVector& v);

}  // namespace dicke
