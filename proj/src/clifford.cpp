#include "dicke/clifford.hpp"

#include <deque>
#include <stdexcept>

namespace dicke {

CliffordMatrix CliffordMatrix::identity(int nq) {
    CliffordMatrix r;
    r.nq = nq;
    r.m.assign(std::size_t(r.dim()) * r.dim(), RingAmplitude::zero());
    for (int i = 0; i < r.dim(); ++i) r.m[i * r.dim() + i] = RingAmplitude::one();
    return r;
}

namespace {

void check_pos(int q, int nq) {
    if (q < 1 || q > nq) throw std::invalid_argument("gate qubit out of range");
}

void reduce_matrix(CliffordMatrix& a) {
    while (a.denom_exp > 0) {
        bool div = true;
        for (const auto& e : a.m)
            if (!e.is_zero() && !e.divisible_sqrt2()) {
                div = false;
                break;
            }
        if (!div) break;
        for (auto& e : a.m)
            if (!e.is_zero()) e = e.div_sqrt2();
        --a.denom_exp;
    }
}

}  // namespace

CliffordMatrix h_matrix(int q, int nq) {
    check_pos(q, nq);
    CliffordMatrix r = CliffordMatrix::identity(nq);
    r.denom_exp = 1;
    int bit = 1 << (q - 1);
    // build column-wise: H|0> = (|0>+|1>)/sqrt2, H|1> = (|0>-|1>)/sqrt2
    r.m.assign(r.m.size(), RingAmplitude::zero());
    for (int col = 0; col < r.dim(); ++col) {
        int b0 = col & ~bit, b1 = col | bit;
        if (col & bit) {
            r.m[b0 * r.dim() + col] = RingAmplitude::one();
            r.m[b1 * r.dim() + col] = -RingAmplitude::one();
        } else {
            r.m[b0 * r.dim() + col] = RingAmplitude::one();
            r.m[b1 * r.dim() + col] = RingAmplitude::one();
        }
    }
    return r;
}

CliffordMatrix p_matrix(int q, int nq) {
    check_pos(q, nq);
    CliffordMatrix r = CliffordMatrix::identity(nq);
    int bit = 1 << (q - 1);
    for (int i = 0; i < r.dim(); ++i)
        if (i & bit) r.m[i * r.dim() + i] = RingAmplitude::omega(2);
    return r;
}

CliffordMatrix cnot_matrix(int control, int target, int nq) {
    check_pos(control, nq);
    check_pos(target, nq);
    if (control == target) throw std::invalid_argument("cnot_matrix: control == target");
    CliffordMatrix r;
    r.nq = nq;
    r.m.assign(std::size_t(r.dim()) * r.dim(), RingAmplitude::zero());
    int mc = 1 << (control - 1), mt = 1 << (target - 1);
    for (int col = 0; col < r.dim(); ++col) {
        int row = (col & mc) ? (col ^ mt) : col;
        r.m[row * r.dim() + col] = RingAmplitude::one();
    }
    return r;
}

CliffordMatrix matmul(const CliffordMatrix& a, const CliffordMatrix& b) {
    if (a.nq != b.nq) throw std::invalid_argument("matmul: size mismatch");
    CliffordMatrix r;
    r.nq = a.nq;
    r.denom_exp = a.denom_exp + b.denom_exp;
    int d = a.dim();
    r.m.assign(std::size_t(d) * d, RingAmplitude::zero());
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            if (a.m[i * d + k].is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                if (b.m[k * d + j].is_zero()) continue;
                r.m[i * d + j] += a.m[i * d + k] * b.m[k * d + j];
            }
        }
    reduce_matrix(r);
    return r;
}

std::string matrix_key(const CliffordMatrix& a) {
    std::string best;
    for (int k = 0; k < 8; ++k) {
        std::string cand = std::to_string(a.nq) + "|" + std::to_string(a.denom_exp) + "|";
        for (const auto& e : a.m) e.mul_omega(k).append_key(cand);
        if (k == 0 || cand < best) best = std::move(cand);
    }
    return best;
}

void apply_matrix(PureState& s, const CliffordMatrix& m, const std::vector<int>& targets) {
    if (int(targets.size()) != m.nq) throw std::invalid_argument("apply_matrix: target count");
    std::uint64_t tmask = 0;
    for (int q : targets) {
        if (q < 1 || q > s.n) throw std::invalid_argument("apply_matrix: qubit out of range");
        std::uint64_t bit = std::uint64_t(1) << (q - 1);
        if (tmask & bit) throw std::invalid_argument("apply_matrix: repeated qubit");
        tmask |= bit;
    }
    int d = m.dim();
    std::vector<RingAmplitude> in(d), out(d);
    // iterate over assignments of the untouched qubits
    for (std::uint64_t rest = 0; rest < s.dim(); ++rest) {
        if (rest & tmask) continue;
        for (int v = 0; v < d; ++v) {
            std::uint64_t b = rest;
            for (std::size_t t = 0; t < targets.size(); ++t)
                if (v & (1 << t)) b |= std::uint64_t(1) << (targets[t] - 1);
            in[v] = s.amps[b];
        }
        for (int i = 0; i < d; ++i) {
            out[i] = RingAmplitude::zero();
            for (int j = 0; j < d; ++j) {
                if (m.m[i * d + j].is_zero() || in[j].is_zero()) continue;
                out[i] += m.m[i * d + j] * in[j];
            }
        }
        for (int v = 0; v < d; ++v) {
            std::uint64_t b = rest;
            for (std::size_t t = 0; t < targets.size(); ++t)
                if (v & (1 << t)) b |= std::uint64_t(1) << (targets[t] - 1);
            s.amps[b] = out[v];
        }
    }
    s.denom_exp += m.denom_exp;
    reduce(s);
}

std::vector<std::pair<std::string, CliffordMatrix>> named_generators(const std::string& name) {
    if (name == "c1") return {{"H1", h_matrix(1, 1)}, {"P1", p_matrix(1, 1)}};
    if (name == "c2")
        return {{"H1", h_matrix(1, 2)},       {"H2", h_matrix(2, 2)},
                {"P1", p_matrix(1, 2)},       {"P2", p_matrix(2, 2)},
                {"C12", cnot_matrix(1, 2, 2)}, {"C21", cnot_matrix(2, 1, 2)}};
    if (name == "hc12")
        return {{"H1", h_matrix(1, 2)},
                {"H2", h_matrix(2, 2)},
                {"C12", cnot_matrix(1, 2, 2)},
                {"C21", cnot_matrix(2, 1, 2)}};
    throw std::invalid_argument("named_generators: unknown set '" + name + "'");
}

CliffordGroup enumerate_group(const std::vector<std::pair<std::string, CliffordMatrix>>& gens,
                              std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("enumerate_group: no generators");
    CliffordGroup g;
    g.nq = gens[0].second.nq;
    for (const auto& [label, mat] : gens) {
        g.gen_labels.push_back(label);
        if (mat.nq != gens[0].second.nq)
            throw std::invalid_argument("enumerate_group: mixed generator sizes");
    }
    CliffordMatrix id = CliffordMatrix::identity(gens[0].second.nq);
    g.elements.push_back(id);
    g.words.push_back("1");
    g.index.emplace(matrix_key(id), 0);
    for (std::size_t head = 0; head < g.elements.size(); ++head) {
        for (const auto& [label, mat] : gens) {
            CliffordMatrix next = matmul(g.elements[head], mat);  // append rightmost factor
            std::string key = matrix_key(next);
            if (g.index.count(key)) continue;
            if (g.elements.size() >= cap)
                throw std::runtime_error("enumerate_group: cap exceeded");
            g.index.emplace(std::move(key), int(g.elements.size()));
            g.words.push_back(head == 0 ? label : g.words[head] + "." + label);
            g.elements.push_back(std::move(next));
        }
    }
    return g;
}

CliffordSubgroup clifford_stabilizers(const PureState& s, const CliffordGroup& group,
                                      const std::vector<int>& targets) {
    CliffordSubgroup out;
    out.group_order = group.order();
    for (std::size_t i = 0; i < group.elements.size(); ++i) {
        PureState t = s;
        apply_matrix(t, group.elements[i], targets);
        if (equal_up_to_phase(s, t)) {
            out.element_ids.push_back(int(i));
            out.words.push_back(group.words[i]);
        }
    }
    return out;
}

}  // namespace dicke
