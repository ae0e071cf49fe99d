#include "dicke/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dicke {

std::uint64_t binom(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = std::uint64_t(n - k + i);
        if (r > UINT64_MAX / num) throw std::overflow_error("binom: overflow");
        r = r * num / i;  // exact at every step: r*num is C(n-k+i, i) * i!-free
    }
    return r;
}

PureState make_dicke(int n, int k) {
    if (n < 1 || n > 24 || k < 0 || k > n) throw std::invalid_argument("make_dicke: bad (n,k)");
    PureState s;
    s.n = n;
    s.norm_square = binom(n, k);
    s.amps.resize(std::uint64_t(1) << n);
    for (std::uint64_t b = 0; b < s.dim(); ++b)
        if (std::popcount(b) == k) s.amps[b] = RingAmplitude::one();
    return s;
}

namespace {

void check_nkl(int n, int k, int l) {
    if (n < 1 || k < 0 || k > n || l < 0 || l > n)
        throw std::invalid_argument("dicke_entropy: bad (n,k,l)");
}

}  // namespace

double dicke_entropy(int n, int k, int l, double base) {
    check_nkl(n, k, l);
    double lognk = std::log(double(binom(n, k)));
    double invnk = 1.0 / double(binom(n, k));
    double s = 0.0;
    for (int i = 0; i <= std::min(l, k); ++i) {
        std::uint64_t c = binom(l, i) * binom(n - l, k - i);
        if (c == 0) continue;
        double p = double(c) * invnk;
        s -= p * (std::log(double(c)) - lognk);
    }
    return s / std::log(base);
}

double dicke_entropy_reduced_lgek(int n, int k, int l, double base) {
    check_nkl(n, k, l);
    if (l < k) throw std::invalid_argument("reduced_lgek: requires l >= k");
    double nk = double(binom(n, k));
    double s = std::log(nk);
    for (int i = 0; i <= k; ++i) {
        std::uint64_t c = binom(l, i) * binom(n - l, k - i);
        if (c == 0) continue;
        s -= double(c) / nk * std::log(double(c));
    }
    return s / std::log(base);
}

double dicke_entropy_reduced_lltk(int n, int k, int l, double base) {
    check_nkl(n, k, l);
    if (l >= k) throw std::invalid_argument("reduced_lltk: requires l < k");
    // the sum of the surviving hypergeometric coefficients is C(n,k) whether
    // it is truncated at l or at k (Vandermonde), so the decoupled log C(n,k)
    // term carries coefficient 1 here too
    double nk = double(binom(n, k));
    double s = std::log(nk);
    for (int i = 0; i <= l; ++i) {
        std::uint64_t c = binom(l, i) * binom(n - l, k - i);
        if (c == 0) continue;
        s -= double(c) / nk * std::log(double(c));
    }
    return s / std::log(base);
}

double wstate_entropy(int n, int l, double base) {
    check_nkl(n, 1, l);
    if (l == 0 || l == n) return 0.0;
    double s = double(l) / n * std::log(double(n) / l) +
               double(n - l) / n * std::log(double(n) / (n - l));
    return s / std::log(base);
}

double symmetrized_entropy(int n, int k, int l, double base) {
    check_nkl(n, k, l);
    double w1 = double(binom(n - 1, l)) * dicke_entropy(n, k, l, base);
    double w2 = double(binom(n - 1, n - l)) * dicke_entropy(n, k, n - l, base);
    return (w1 + w2) / double(binom(n, l));
}

std::vector<std::uint64_t> subsystem_masks(int n, VectorForm form) {
    if (n < 1) throw std::invalid_argument("subsystem_masks: bad n");
    if (form == VectorForm::Symmetrized)
        throw std::invalid_argument("subsystem_masks: symmetrized vectors index by l, not masks");
    int top = (form == VectorForm::Reduced) ? n - 1 : n;
    std::vector<std::uint64_t> out;
    for (int size = 1; size <= top; ++size) {
        // subsets of {1..top} of this size in lexicographic index order
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::uint64_t m = 0;
            for (int i : idx) m |= std::uint64_t(1) << i;
            out.push_back(m);
            int j = size - 1;
            while (j >= 0 && idx[j] == top - size + j) --j;
            if (j < 0) break;
            ++idx[j];
            for (int i = j + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return out;
}

std::string subset_label(std::uint64_t mask) {
    std::string s;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) {
            if (!s.empty()) s += ',';
            s += std::to_string(i + 1);
        }
    return s;
}

EntropyVector dicke_entropy_vector(int n, int k, double base, VectorForm form) {
    EntropyVector v;
    v.n = n;
    v.base = base;
    v.form = form;
    if (form == VectorForm::Symmetrized) {
        for (int l = 1; l <= n; ++l) v.entries.push_back(symmetrized_entropy(n, k, l, base));
        return v;
    }
    for (std::uint64_t m : subsystem_masks(n, form))
        v.entries.push_back(dicke_entropy(n, k, std::popcount(m), base));
    return v;
}

EntropyVector state_entropy_vector(const PureState& s, double base, VectorForm form,
                                   bool minside) {
    if (form == VectorForm::Symmetrized)
        throw std::invalid_argument("state_entropy_vector: symmetrized form is Dicke-specific");
    EntropyVector v;
    v.n = s.n;
    v.base = base;
    v.form = form;
    for (std::uint64_t m : subsystem_masks(s.n, form)) {
        if (m == s.dim() - 1) {
            v.entries.push_back(0.0);  // the whole pure state
            continue;
        }
        v.entries.push_back(minside ? subsystem_entropy_minside(s, m, base)
                                    : subsystem_entropy(s, m, base));
    }
    return v;
}

std::string entropy_vector_to_json(const EntropyVector& v) {
    nlohmann::ordered_json j;
    j["n"] = v.n;
    j["base"] = v.base;
    j["form"] = v.form == VectorForm::Full        ? "full"
                : v.form == VectorForm::Reduced   ? "reduced"
                                                  : "symmetrized";
    if (v.form == VectorForm::Symmetrized) {
        auto labels = nlohmann::ordered_json::array();
        for (int l = 1; l <= v.n; ++l) labels.push_back("l=" + std::to_string(l));
        j["labels"] = std::move(labels);
    } else {
        auto labels = nlohmann::ordered_json::array();
        for (std::uint64_t m : subsystem_masks(v.n, v.form)) labels.push_back(subset_label(m));
        j["labels"] = std::move(labels);
    }
    j["entries"] = v.entries;
    return j.dump();
}

std::string entropy_vector_to_csv(const EntropyVector& v) {
    std::string head, row;
    char buf[64];
    auto add = [&](const std::string& label, double val) {
        if (!head.empty()) {
            head += ',';
            row += ',';
        }
        head += "S_{" + label + "}";
        std::snprintf(buf, sizeof buf, "%.10g", val);
        row += buf;
    };
    if (v.form == VectorForm::Symmetrized) {
        for (int l = 1; l <= v.n; ++l) add("l=" + std::to_string(l), v.entries[l - 1]);
    } else {
        auto masks = subsystem_masks(v.n, v.form);
        for (std::size_t i = 0; i < masks.size(); ++i) {
            std::string lab = subset_label(masks[i]);
            std::replace(lab.begin(), lab.end(), ',', ' ');
            add(lab, v.entries[i]);
        }
    }
    return head + "\n" + row + "\n";
}

}  // namespace dicke
