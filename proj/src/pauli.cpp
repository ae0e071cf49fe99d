#include "dicke/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace dicke {

namespace {

// phase table for single-letter products L1*L2 = i^t L3 (letters as matrices,
// Y = i X Z); indexed [x1 + 2*z1][x2 + 2*z2], letter code x + 2z
// rows/cols: 0=I, 1=X, 2=Z, 3=Y
constexpr int kMulPhase[4][4] = {
    {0, 0, 0, 0},  // I * {I,X,Z,Y}
    {0, 0, 3, 1},  // X*Z = -iY, X*Y = iZ
    {0, 1, 0, 3},  // Z*X = iY,  Z*Y = -iX
    {0, 3, 1, 0},  // Y*X = -iZ, Y*Z = iX
};

}  // namespace

std::string PauliString::str() const {
    static const char* sign[4] = {"+", "+i", "-", "-i"};
    if (is_identity_class()) {
        if (phase == 0) return "1";
        return std::string(sign[phase]) + "1";
    }
    std::string s = sign[phase];
    bool first = true;
    for (int q = 0; q < n; ++q) {
        int xq = (x >> q) & 1, zq = (z >> q) & 1;
        if (!xq && !zq) continue;
        if (!first) s += ' ';
        first = false;
        s += xq ? (zq ? 'Y' : 'X') : 'Z';
        s += std::to_string(q + 1);
    }
    return s;
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
    if (a.n != b.n) throw std::invalid_argument("pauli_mul: size mismatch");
    PauliString r;
    r.n = a.n;
    r.x = a.x ^ b.x;
    r.z = a.z ^ b.z;
    int t = a.phase + b.phase;
    for (int q = 0; q < a.n; ++q) {
        int la = ((a.x >> q) & 1) + 2 * ((a.z >> q) & 1);
        int lb = ((b.x >> q) & 1) + 2 * ((b.z >> q) & 1);
        t += kMulPhase[la][lb];
    }
    r.phase = t & 3;
    return r;
}

PureState pauli_apply(const PauliString& p, const PureState& s) {
    if (p.n != s.n) throw std::invalid_argument("pauli_apply: size mismatch");
    PureState out = s;
    // per basis state: X flips, Z contributes (-1)^bit, Y = i X Z
    int base = p.phase + std::popcount(p.x & p.z);  // i-exponent common to all
    for (std::uint64_t b = 0; b < s.dim(); ++b) {
        if (s.amps[b].is_zero()) {
            out.amps[b ^ p.x] = RingAmplitude::zero();
            continue;
        }
        int e = base + 2 * std::popcount(std::uint32_t(b) & p.z);
        out.amps[b ^ p.x] = s.amps[b].mul_omega(2 * (e & 3));
    }
    return out;
}

PauliSubgroup pauli_stabilizers(const PureState& s) {
    if (s.n > 8) throw std::invalid_argument("pauli_stabilizers: n > 8 not supported");
    PauliSubgroup g;
    g.n = s.n;
    g.group_order = std::uint64_t(1) << (2 * s.n);
    std::uint32_t top = std::uint32_t(1) << s.n;
    for (std::uint32_t x = 0; x < top; ++x) {
        for (std::uint32_t z = 0; z < top; ++z) {
            PauliString rep{s.n, x, z, 0};
            PureState t = pauli_apply(rep, s);
            int m = 0;
            if (!equal_up_to_phase(s, t, &m)) continue;
            // rep|psi> = w^m|psi>; the exact stabilizer is w^{-m} * rep, and
            // for Pauli strings that phase is always a power of i
            if (m & 1) throw std::logic_error("pauli_stabilizers: non-i stabilizing phase");
            rep.phase = (4 - m / 2) & 3;
            g.elements.push_back(rep);
        }
    }
    return g;
}

bool closed_under_product(const PauliSubgroup& g) {
    auto in_set = [&](std::uint32_t x, std::uint32_t z) {
        for (const auto& e : g.elements)
            if (e.x == x && e.z == z) return true;
        return false;
    };
    for (const auto& a : g.elements)
        for (const auto& b : g.elements)
            if (!in_set(a.x ^ b.x, a.z ^ b.z)) return false;
    return true;
}

BigInt stabilizer_state_count(int n) {
    if (n < 1) throw std::invalid_argument("stabilizer_state_count: bad n");
    BigInt r = BigInt(1) << n;
    for (int k = 0; k < n; ++k) r *= (BigInt(1) << (n - k)) + 1;
    return r;
}

}  // namespace dicke
