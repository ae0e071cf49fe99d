#include "dicke/state.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "dicke/eigen.hpp"

namespace dicke {

namespace {

void check_qubit(const PureState& s, int q) {
    if (q < 1 || q > s.n) throw std::invalid_argument("qubit index out of range");
}

}  // namespace

PureState PureState::basis(int n, std::uint64_t b) {
    if (n < 1 || n > 24) throw std::invalid_argument("basis: qubit count out of range");
    if (b >> n) throw std::invalid_argument("basis: index out of range");
    PureState s;
    s.n = n;
    s.amps.resize(std::uint64_t(1) << n);
    s.amps[b] = RingAmplitude::one();
    return s;
}

std::vector<std::complex<double>> PureState::to_amplitudes() const {
    double scale = 1.0 / (std::pow(2.0, 0.5 * denom_exp) * std::sqrt(double(norm_square)));
    std::vector<std::complex<double>> out(amps.size());
    for (std::size_t b = 0; b < amps.size(); ++b) out[b] = amps[b].to_complex() * scale;
    return out;
}

bool is_reduced(const PureState& s) {
    if (s.denom_exp == 0) return true;
    for (const auto& a : s.amps)
        if (!a.is_zero() && !a.divisible_sqrt2()) return true;
    return false;
}

void reduce(PureState& s) {
    while (s.denom_exp > 0) {
        bool div = true;
        for (const auto& a : s.amps) {
            if (!a.is_zero() && !a.divisible_sqrt2()) {
                div = false;
                break;
            }
        }
        if (!div) break;
        for (auto& a : s.amps)
            if (!a.is_zero()) a = a.div_sqrt2();
        --s.denom_exp;
    }
}

bool norm_ok(const PureState& s) {
    Root2Int sum;
    for (const auto& a : s.amps) {
        Root2Int t = a.abs2();
        sum.a += t.a;
        sum.b += t.b;
    }
    BigInt want = BigInt(s.norm_square) << s.denom_exp;
    return sum.a == want && sum.b == 0;
}

void apply_h(PureState& s, int q) {
    check_qubit(s, q);
    std::uint64_t m = std::uint64_t(1) << (q - 1);
    for (std::uint64_t b = 0; b < s.dim(); ++b) {
        if (b & m) continue;
        RingAmplitude a0 = s.amps[b];
        RingAmplitude a1 = s.amps[b | m];
        s.amps[b] = a0 + a1;
        s.amps[b | m] = a0 - a1;
    }
    ++s.denom_exp;
    reduce(s);
}

void apply_p(PureState& s, int q) {
    check_qubit(s, q);
    std::uint64_t m = std::uint64_t(1) << (q - 1);
    for (std::uint64_t b = 0; b < s.dim(); ++b)
        if (b & m) s.amps[b] = s.amps[b].mul_omega(2);
}

void apply_x(PureState& s, int q) {
    check_qubit(s, q);
    std::uint64_t m = std::uint64_t(1) << (q - 1);
    for (std::uint64_t b = 0; b < s.dim(); ++b)
        if (!(b & m)) std::swap(s.amps[b], s.amps[b | m]);
}

void apply_y(PureState& s, int q) {
    check_qubit(s, q);
    // Y|0> = i|1>, Y|1> = -i|0>
    std::uint64_t m = std::uint64_t(1) << (q - 1);
    for (std::uint64_t b = 0; b < s.dim(); ++b) {
        if (b & m) continue;
        RingAmplitude a0 = s.amps[b];
        RingAmplitude a1 = s.amps[b | m];
        s.amps[b] = a1.mul_omega(6);     // -i * a1
        s.amps[b | m] = a0.mul_omega(2); // i * a0
    }
}

void apply_z(PureState& s, int q) {
    check_qubit(s, q);
    std::uint64_t m = std::uint64_t(1) << (q - 1);
    for (std::uint64_t b = 0; b < s.dim(); ++b)
        if (b & m) s.amps[b] = -s.amps[b];
}

void apply_cnot(PureState& s, int control, int target) {
    check_qubit(s, control);
    check_qubit(s, target);
    if (control == target) throw std::invalid_argument("cnot: control == target");
    std::uint64_t mc = std::uint64_t(1) << (control - 1);
    std::uint64_t mt = std::uint64_t(1) << (target - 1);
    for (std::uint64_t b = 0; b < s.dim(); ++b)
        if ((b & mc) && !(b & mt)) std::swap(s.amps[b], s.amps[b | mt]);
}

void apply_gate(PureState& s, Gate g, int a, int b) {
    switch (g) {
        case Gate::H: apply_h(s, a); return;
        case Gate::P: apply_p(s, a); return;
        case Gate::X: apply_x(s, a); return;
        case Gate::Y: apply_y(s, a); return;
        case Gate::Z: apply_z(s, a); return;
        case Gate::CNOT: apply_cnot(s, a, b); return;
    }
    throw std::invalid_argument("apply_gate: unknown gate");
}

void apply_word(PureState& s, const std::string& word) {
    std::size_t i = 0;
    while (i < word.size()) {
        std::size_t j = word.find('.', i);
        std::string tok = word.substr(i, j == std::string::npos ? j : j - i);
        i = (j == std::string::npos) ? word.size() : j + 1;
        if (tok.empty()) throw std::invalid_argument("apply_word: empty token");
        char g = std::toupper(tok[0]);
        std::string args = tok.substr(1);
        if (g == 'C') {
            if (args.size() != 2 || !std::isdigit(args[0]) || !std::isdigit(args[1]))
                throw std::invalid_argument("apply_word: bad CNOT token '" + tok + "'");
            apply_cnot(s, args[0] - '0', args[1] - '0');
            continue;
        }
        if (args.size() != 1 || !std::isdigit(args[0]))
            throw std::invalid_argument("apply_word: bad token '" + tok + "'");
        int q = args[0] - '0';
        switch (g) {
            case 'H': apply_h(s, q); break;
            case 'P': apply_p(s, q); break;
            case 'X': apply_x(s, q); break;
            case 'Y': apply_y(s, q); break;
            case 'Z': apply_z(s, q); break;
            default: throw std::invalid_argument("apply_word: bad token '" + tok + "'");
        }
    }
}

std::string canonical_key(const PureState& s) {
    std::string best;
    for (int k = 0; k < 8; ++k) {
        std::string cand = std::to_string(s.n) + "|" + std::to_string(s.denom_exp) + "|" +
                           std::to_string(s.norm_square) + "|";
        for (const auto& a : s.amps) a.mul_omega(k).append_key(cand);
        if (k == 0 || cand < best) best = std::move(cand);
    }
    return best;
}

bool equal_up_to_phase(const PureState& a, const PureState& b, int* m_out) {
    if (a.n != b.n || a.denom_exp != b.denom_exp || a.norm_square != b.norm_square)
        return false;
    std::uint64_t first = a.dim();
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        if (a.amps[i].is_zero() != b.amps[i].is_zero()) return false;
        if (first == a.dim() && !a.amps[i].is_zero()) first = i;
    }
    if (first == a.dim()) return false;  // null vector is not a state
    for (int m = 0; m < 8; ++m) {
        if (a.amps[first].mul_omega(m) != b.amps[first]) continue;
        bool all = true;
        for (std::uint64_t i = 0; i < a.dim() && all; ++i)
            all = a.amps[i].mul_omega(m) == b.amps[i];
        if (all) {
            if (m_out) *m_out = m;
            return true;
        }
    }
    return false;
}

std::string state_to_json(const PureState& s) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["denom_exp"] = s.denom_exp;
    j["norm_square"] = s.norm_square;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& a : s.amps) {
        auto e = nlohmann::ordered_json::array();
        for (int c = 0; c < 4; ++c) e.push_back(a.c[c].str());
        arr.push_back(std::move(e));
    }
    j["amps"] = std::move(arr);
    return j.dump();
}

PureState state_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PureState s;
    s.n = j.at("n").get<int>();
    s.denom_exp = j.at("denom_exp").get<int>();
    s.norm_square = j.at("norm_square").get<std::uint64_t>();
    const auto& arr = j.at("amps");
    if (arr.size() != (std::uint64_t(1) << s.n))
        throw std::invalid_argument("state_from_json: amp count mismatch");
    s.amps.resize(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (int c = 0; c < 4; ++c)
            s.amps[i].c[c] = BigInt(arr[i][c].get<std::string>());
    if (!norm_ok(s)) throw std::invalid_argument("state_from_json: norm invariant violated");
    return s;
}

namespace {

// scatter/gather helpers: compact the bits of b selected by mask
std::uint64_t extract_bits(std::uint64_t b, const std::vector<int>& bits) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (b & (std::uint64_t(1) << bits[i])) r |= std::uint64_t(1) << i;
    return r;
}

std::vector<int> bit_list(std::uint64_t mask, int n) {
    std::vector<int> bits;
    for (int i = 0; i < n; ++i)
        if (mask & (std::uint64_t(1) << i)) bits.push_back(i);
    return bits;
}

double spectrum_entropy(const std::vector<double>& ev, double base) {
    double s = 0.0;
    for (double v : ev) {
        if (v <= 0.0) {
            if (v < -1e-12) throw std::runtime_error("subsystem_entropy: negative eigenvalue");
            continue;  // clamp [-1e-12, 0] to 0; 0*log 0 := 0
        }
        s -= v * std::log(v);
    }
    return s / std::log(base);
}

}  // namespace

std::vector<std::complex<double>> reduced_density_matrix(const PureState& s,
                                                         std::uint64_t mask) {
    std::uint64_t full = s.dim() - 1;
    if (mask == 0 || (mask & ~full))
        throw std::invalid_argument("reduced_density_matrix: need a non-empty subsystem");
    std::vector<int> keep = bit_list(mask, s.n);
    std::vector<int> rest = bit_list(full & ~mask, s.n);
    std::uint64_t dim = std::uint64_t(1) << keep.size();

    // group the nonzero amplitudes by the traced-out bits; rho_exact[a][a'] =
    // sum over groups of amp(a,c) * conj(amp(a',c))
    struct Entry {
        std::uint64_t row;
        RingAmplitude a;
    };
    std::vector<std::vector<Entry>> groups(std::uint64_t(1) << rest.size());
    for (std::uint64_t b = 0; b < s.dim(); ++b) {
        if (s.amps[b].is_zero()) continue;
        groups[extract_bits(b, rest)].push_back({extract_bits(b, keep), s.amps[b]});
    }

    std::vector<RingAmplitude> rho(dim * dim);
    for (const auto& g : groups)
        for (const auto& e1 : g)
            for (const auto& e2 : g) rho[e1.row * dim + e2.row] += e1.a * e2.a.conj();

    double scale = 1.0 / (std::pow(2.0, s.denom_exp) * double(s.norm_square));
    std::vector<std::complex<double>> out(dim * dim);
    for (std::uint64_t i = 0; i < dim * dim; ++i) out[i] = rho[i].to_complex() * scale;
    return out;
}

double subsystem_entropy(const PureState& s, std::uint64_t mask, double base) {
    auto rho = reduced_density_matrix(s, mask);
    int dim = 1 << std::popcount(mask);
    return spectrum_entropy(hermitian_eigenvalues(std::move(rho), dim), base);
}

double subsystem_entropy_minside(const PureState& s, std::uint64_t mask, double base) {
    std::uint64_t full = s.dim() - 1;
    if (mask == 0 || mask == full) return 0.0;  // S of the empty/pure side
    std::uint64_t other = full & ~mask;
    std::uint64_t use = (std::popcount(other) < std::popcount(mask)) ? other : mask;
    return subsystem_entropy(s, use, base);
}

}  // namespace dicke
