// state.hpp -- exact N-qubit pure states
//
//   state = (1 / (sqrt(2)^denom_exp * sqrt(norm_square))) * sum_b amps[b] |b>
//
// with amps in Z[w].  Qubit i (1-based) is bit i-1 of the basis index, so
// |b> for b = 0b001 on three qubits is |100> in qubit-1-first notation.
// Exact norm invariant: sum_b |amps[b]|^2 == 2^denom_exp * norm_square.
//
// A state is reduced when the amplitudes are not all jointly divisible by
// sqrt(2) or denom_exp is already 0.  Gates keep states reduced, which makes
// the representation unique (up to a global w^k) within a fixed norm_square,
// and that is what canonical_key quotients away: the minimum over the eight
// global phases w^k of a fixed serialization of (n, denom_exp, norm_square,
// amps).
#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "dicke/ring.hpp"

namespace dicke {

enum class Gate { H, P, X, Y, Z, CNOT };

struct PureState {
    int n = 0;
    int denom_exp = 0;
    std::uint64_t norm_square = 1;
    std::vector<RingAmplitude> amps;

    std::uint64_t dim() const { return std::uint64_t(1) << n; }
    static PureState basis(int n, std::uint64_t b);
    // normalized floating-point amplitudes
    std::vector<std::complex<double>> to_amplitudes() const;
};

// strips joint sqrt(2) factors into denom_exp; no-op on reduced states
void reduce(PureState& s);
bool is_reduced(const PureState& s);
// exact check of the norm invariant
bool norm_ok(const PureState& s);

// gates; qubits are 1-based.  CNOT takes (control, target), distinct.
void apply_h(PureState& s, int q);
void apply_p(PureState& s, int q);
void apply_x(PureState& s, int q);
void apply_y(PureState& s, int q);
void apply_z(PureState& s, int q);
void apply_cnot(PureState& s, int control, int target);
void apply_gate(PureState& s, Gate g, int a, int b = 0);

// sequential gate word, e.g. "H1.C13.P2" applied left to right
void apply_word(PureState& s, const std::string& word);

// global-phase-quotient canonical key; equal keys <=> equal states up to w^k
// (states compared within the same norm_square, as along any gate orbit)
std::string canonical_key(const PureState& s);
// true iff b == w^m * a for some m (exact); if so *m_out holds m
bool equal_up_to_phase(const PureState& a, const PureState& b, int* m_out = nullptr);

// JSON (de)serialization; coefficients as decimal strings
std::string state_to_json(const PureState& s);
PureState state_from_json(const std::string& text);

// exact partial trace onto the qubits in `mask` (bit i-1 = qubit i), then a
// single conversion to floating point.  Returns the 2^|mask| square matrix
// row-major.
std::vector<std::complex<double>> reduced_density_matrix(const PureState& s,
                                                         std::uint64_t mask);

// von Neumann entropy of the reduced density matrix on `mask`; 0*log 0 := 0,
// eigenvalues in [-1e-12, 0] clamp to 0.  base: e.g. 2 or std::exp(1).
double subsystem_entropy(const PureState& s, std::uint64_t mask, double base);

// same value by purity (S_I = S_complement), but diagonalizes whichever side
// is smaller -- used where many subsystems of large states are needed
double subsystem_entropy_minside(const PureState& s, std::uint64_t mask, double base);

}  // namespace dicke
