#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dicke/clifford.hpp"
#include "dicke/entropy.hpp"
#include "dicke/pauli.hpp"
#include "dicke/state.hpp"

using namespace dicke;

namespace {

PureState random_state(int n, int moves, std::mt19937& rng) {
    PureState s = PureState::basis(n, 0);
    std::uniform_int_distribution<int> gate(0, 5), qubit(1, n);
    for (int i = 0; i < moves; ++i) {
        int g = gate(rng), a = qubit(rng);
        if (g == 5 && n > 1) {
            int b = qubit(rng);
            while (b == a) b = qubit(rng);
            apply_cnot(s, a, b);
        } else {
            apply_gate(s, Gate(g % 5), a);
        }
    }
    return s;
}

PauliString make_p(int n, std::uint32_t x, std::uint32_t z, int phase = 0) {
    PauliString p;
    p.n = n;
    p.x = x;
    p.z = z;
    p.phase = phase;
    return p;
}

}  // namespace

TEST_CASE("single-qubit product phase table") {
    auto X = make_p(1, 1, 0), Z = make_p(1, 0, 1), Y = make_p(1, 1, 1);
    auto XZ = pauli_mul(X, Z);
    CHECK(XZ.x == 1);
    CHECK(XZ.z == 1);
    CHECK(XZ.phase == 3);  // XZ = -iY, and Y carries i*XZ
    auto ZX = pauli_mul(Z, X);
    CHECK(ZX.phase == 1);  // ZX = +iY
    CHECK(pauli_mul(X, X) == make_p(1, 0, 0, 0));
    CHECK(pauli_mul(Y, Y) == make_p(1, 0, 0, 0));
    CHECK(pauli_mul(Z, Z) == make_p(1, 0, 0, 0));
    // disjoint supports commute with no phase
    auto a = make_p(2, 0b01, 0), b = make_p(2, 0, 0b10);
    CHECK(pauli_mul(a, b) == pauli_mul(b, a));
    CHECK(pauli_mul(a, b).phase == 0);
}

TEST_CASE("string action on basis states") {
    auto s0 = PureState::basis(1, 0);
    PureState sx = pauli_apply(make_p(1, 1, 0), s0);
    CHECK(sx.amps == PureState::basis(1, 1).amps);
    PureState sz = pauli_apply(make_p(1, 0, 1), PureState::basis(1, 1));
    CHECK(sz.amps[1] == -RingAmplitude::one());
    PureState sy = pauli_apply(make_p(1, 1, 1), s0);  // Y|0> = i|1>
    CHECK(sy.amps[1] == RingAmplitude::omega(2));
    CHECK(sy.amps[0].is_zero());
}

TEST_CASE("product action equals composed action") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> bits(0, 15);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = make_p(2, bits(rng) & 3u, (bits(rng) >> 2) & 3u, bits(rng) & 3);
        auto b = make_p(2, bits(rng) & 3u, (bits(rng) >> 2) & 3u, bits(rng) & 3);
        PureState s = random_state(2, 12, rng);
        PureState lhs = pauli_apply(pauli_mul(a, b), s);
        PureState rhs = pauli_apply(a, pauli_apply(b, s));
        CHECK(lhs.amps == rhs.amps);
        CHECK(lhs.denom_exp == rhs.denom_exp);
    }
}

TEST_CASE("signed string rendering") {
    CHECK(make_p(3, 0b001, 0b100).str() == "+X1 Z3");
    CHECK(make_p(3, 0, 0b111, 2).str() == "-Z1 Z2 Z3");
    CHECK(make_p(2, 0, 0).str() == "1");
    CHECK(make_p(1, 1, 1).str() == "+Y1");
    CHECK(make_p(1, 1, 0, 2).str() == "-X1");
}

TEST_CASE("Dicke Pauli stabilizers match the known subgroups") {
    auto g31 = pauli_stabilizers(make_dicke(3, 1));
    REQUIRE(g31.order() == 2);
    CHECK(g31.group_order == 64);  // 4^3 projective classes
    CHECK(g31.elements[0].is_identity_class());
    CHECK(g31.elements[1].str() == "-Z1 Z2 Z3");
    CHECK(closed_under_product(g31));

    auto g52 = pauli_stabilizers(make_dicke(5, 2));
    REQUIRE(g52.order() == 2);
    CHECK(g52.elements[1].str() == "+Z1 Z2 Z3 Z4 Z5");

    auto g42 = pauli_stabilizers(make_dicke(4, 2));
    REQUIRE(g42.order() == 4);
    std::set<std::string> strs;
    for (auto& e : g42.elements) strs.insert(e.str());
    CHECK(strs == std::set<std::string>{"1", "+Z1 Z2 Z3 Z4", "+X1 X2 X3 X4",
                                        "+Y1 Y2 Y3 Y4"});
    CHECK(closed_under_product(g42));
}

TEST_CASE("k = n Dicke states have the full diagonal stabilizer") {
    for (int n = 1; n <= 5; ++n) {
        auto g = pauli_stabilizers(make_dicke(n, n));
        CHECK(g.order() == (std::uint64_t(1) << n));
        for (auto& e : g.elements) CHECK(e.x == 0);
        CHECK(closed_under_product(g));
    }
}

TEST_CASE("recorded stabilizer elements fix the state on the nose") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {5, 2}, {4, 4}}) {
        PureState s = make_dicke(n, k);
        auto g = pauli_stabilizers(s);
        for (auto& e : g.elements) {
            PureState t = pauli_apply(e, s);
            CHECK(t.amps == s.amps);
            CHECK(t.denom_exp == s.denom_exp);
        }
    }
}

TEST_CASE("stabilizer state counts") {
    CHECK(stabilizer_state_count(1) == 6);
    CHECK(stabilizer_state_count(2) == 60);
    CHECK(stabilizer_state_count(3) == 1080);
    CHECK(stabilizer_state_count(4) == 36720);
}

TEST_CASE("gate matrices act like the direct gate routines") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        PureState s = random_state(3, 15, rng);
        PureState a = s, b = s;
        apply_matrix(a, h_matrix(1, 1), {2});
        apply_h(b, 2);
        CHECK(a.amps == b.amps);
        CHECK(a.denom_exp == b.denom_exp);
        a = s, b = s;
        apply_matrix(a, p_matrix(1, 1), {3});
        apply_p(b, 3);
        CHECK(a.amps == b.amps);
        a = s, b = s;
        apply_matrix(a, cnot_matrix(1, 2, 2), {1, 3});
        apply_cnot(b, 1, 3);
        CHECK(a.amps == b.amps);
        a = s, b = s;
        apply_matrix(a, cnot_matrix(2, 1, 2), {2, 3});
        apply_cnot(b, 3, 2);
        CHECK(a.amps == b.amps);
    }
}

TEST_CASE("matrix keys quotient global phase and spot involutions") {
    auto h = h_matrix(1, 1);
    CHECK(matrix_key(matmul(h, h)) == matrix_key(CliffordMatrix::identity(1)));
    auto p = p_matrix(1, 1);
    auto p2 = matmul(p, p);
    CHECK(matrix_key(matmul(p2, p2)) == matrix_key(CliffordMatrix::identity(1)));
    CHECK(matrix_key(p) != matrix_key(h));
    // w^k-scaled copies share a key
    auto scaled = h;
    for (auto& e : scaled.m) e = e.mul_omega(3);
    CHECK(matrix_key(scaled) == matrix_key(h));
}

TEST_CASE("group enumeration orders and word reconstruction") {
    auto c1 = enumerate_group(named_generators("c1"));
    CHECK(c1.order() == 24);
    CHECK(c1.words[0] == "1");
    auto hc12 = enumerate_group(named_generators("hc12"));
    CHECK(hc12.order() == 1152);
    CHECK_THROWS(named_generators("nope"));

    auto gens = named_generators("hc12");
    auto matrix_of = [&](const std::string& word) {
        CliffordMatrix acc = CliffordMatrix::identity(2);
        if (word == "1") return acc;
        std::size_t pos = 0;
        while (pos < word.size()) {
            auto dot = word.find('.', pos);
            if (dot == std::string::npos) dot = word.size();
            std::string tok = word.substr(pos, dot - pos);
            bool found = false;
            for (auto& [label, m] : gens)
                if (label == tok) {
                    acc = matmul(acc, m);  // rightmost factor acts first
                    found = true;
                }
            REQUIRE(found);
            pos = dot + 1;
        }
        return acc;
    };
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, hc12.order() - 1);
    for (int i = 0; i < 40; ++i) {
        std::size_t id = (i < 8) ? std::size_t(i) : pick(rng);
        CHECK(matrix_key(matrix_of(hc12.words[id])) == matrix_key(hc12.elements[id]));
    }
    // BFS emits shortest words first: gate counts are non-decreasing
    auto gate_count = [](const std::string& w) {
        if (w == "1") return 0;
        return int(std::count(w.begin(), w.end(), '.')) + 1;
    };
    for (std::size_t id = 1; id < hc12.order(); ++id)
        CHECK(gate_count(hc12.words[id - 1]) <= gate_count(hc12.words[id]));
    CHECK(hc12.index.size() == hc12.order());
    CHECK(hc12.index.at(matrix_key(hc12.elements[17])) == 17);
}

TEST_CASE("two-qubit Clifford stabilizers of Dicke states") {
    auto hc12 = enumerate_group(named_generators("hc12"));
    auto stab31 = clifford_stabilizers(make_dicke(3, 1), hc12, {1, 2});
    CHECK(stab31.order() == 4);
    CHECK(stab31.group_order == 1152);
    CHECK(stab31.words[0] == "1");

    auto stab42 = clifford_stabilizers(make_dicke(4, 2), hc12, {1, 2});
    REQUIRE(stab42.order() == 2);
    auto gens = named_generators("hc12");
    const CliffordMatrix* c12 = nullptr;
    const CliffordMatrix* c21 = nullptr;
    for (auto& [label, m] : gens) {
        if (label == "C12") c12 = &m;
        if (label == "C21") c21 = &m;
    }
    auto swap_m = matmul(*c12, matmul(*c21, *c12));
    CHECK(matrix_key(hc12.elements[std::size_t(stab42.element_ids[1])]) ==
          matrix_key(swap_m));

    // |D^n_n> restricted to two qubits is |11>, fixed by everything diagonal
    auto stabnn = clifford_stabilizers(make_dicke(4, 4), hc12, {1, 2});
    CHECK(stabnn.order() == 48);
}
