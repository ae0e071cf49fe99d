#include "dicke/cones.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dicke {

namespace {

IneqStatus classify(double slack, double tol) {
    if (slack < -tol) return IneqStatus::Violated;
    if (slack <= tol) return IneqStatus::Saturated;
    return IneqStatus::Satisfied;
}

const char* status_name(IneqStatus st) {
    switch (st) {
        case IneqStatus::Satisfied: return "satisfied";
        case IneqStatus::Saturated: return "saturated";
        case IneqStatus::Violated: return "violated";
    }
    return "?";
}

// full-form entry lookup: mask -> position in canonical subsystem order
std::vector<double> by_mask(const EntropyVector& v) {
    if (v.form != VectorForm::Full)
        throw std::invalid_argument("cone check: full-form entropy vector required");
    auto masks = subsystem_masks(v.n, VectorForm::Full);
    if (masks.size() != v.entries.size())
        throw std::invalid_argument("cone check: entropy vector has missing entries");
    std::vector<double> s(std::uint64_t(1) << v.n, 0.0);
    for (std::size_t i = 0; i < masks.size(); ++i) s[masks[i]] = v.entries[i];
    return s;
}

std::string braces(std::uint64_t mask) { return "{" + subset_label(mask) + "}"; }

void add_instance(InequalityReport& r, std::string label, double slack) {
    r.instances.push_back({std::move(label), slack, classify(slack, r.tolerance)});
}

std::vector<double> symmetrized_with_zero(const EntropyVector& v) {
    if (v.form != VectorForm::Symmetrized)
        throw std::invalid_argument("cone check: symmetrized entropy vector required");
    if (v.entries.size() != static_cast<std::size_t>(v.n))
        throw std::invalid_argument("cone check: entropy vector has missing entries");
    std::vector<double> s(v.n + 1, 0.0);  // s[l], s[0] = 0
    for (int l = 1; l <= v.n; ++l) s[l] = v.entries[l - 1];
    return s;
}

}  // namespace

int InequalityReport::count(IneqStatus st) const {
    int c = 0;
    for (const auto& i : instances) c += (i.status == st);
    return c;
}

double InequalityReport::min_slack() const {
    double m = 0.0;
    bool first = true;
    for (const auto& i : instances) {
        if (first || i.slack < m) m = i.slack;
        first = false;
    }
    return m;
}

InequalityReport check_subadditivity(const EntropyVector& full, double tol) {
    InequalityReport r{"subadditivity", tol, {}};
    auto s = by_mask(full);
    std::uint64_t top = std::uint64_t(1) << full.n;
    for (std::uint64_t i = 1; i < top; ++i)
        for (std::uint64_t j = i + 1; j < top; ++j) {
            if (i & j) continue;
            add_instance(r, braces(i) + "+" + braces(j), s[i] + s[j] - s[i | j]);
        }
    return r;
}

InequalityReport check_mmi(const EntropyVector& full, double tol) {
    if (full.n < 3)
        throw std::invalid_argument("check_mmi: needs at least 3 parties including purifier");
    InequalityReport r{"mmi", tol, {}};
    auto s = by_mask(full);
    std::uint64_t top = std::uint64_t(1) << full.n;
    for (std::uint64_t i = 1; i < top; ++i)
        for (std::uint64_t j = i + 1; j < top; ++j) {
            if (i & j) continue;
            for (std::uint64_t k = j + 1; k < top; ++k) {
                if ((i & k) || (j & k)) continue;
                double slack = s[i | j] + s[i | k] + s[j | k] - s[i] - s[j] - s[k] - s[i | j | k];
                add_instance(r, braces(i) + "," + braces(j) + "," + braces(k), slack);
            }
        }
    return r;
}

InequalityReport check_sqec(const EntropyVector& symmetrized, double tol) {
    InequalityReport r{"sqec", tol, {}};
    auto s = symmetrized_with_zero(symmetrized);
    int n = symmetrized.n;
    for (int l = 1; l <= (n + 1) / 2; ++l) {
        double slack = -s[l - 1] + 2.0 * s[l] - s[l + 1];
        add_instance(r, "l=" + std::to_string(l), slack);
    }
    return r;
}

InequalityReport check_shec(const EntropyVector& symmetrized, double tol) {
    InequalityReport r{"shec", tol, {}};
    int n = symmetrized.n;
    if (n < 4) return r;  // l range [2, floor(n/2)] is empty
    auto s = symmetrized_with_zero(symmetrized);
    for (int l = 2; l <= n / 2; ++l) {
        double slack = -double(l) * (l + 1) * s[l - 1] + 2.0 * (l - 1) * (l + 1) * s[l] -
                       double(l) * (l - 1) * s[l + 1];
        add_instance(r, "l=" + std::to_string(l), slack);
    }
    return r;
}

std::string report_to_json(const InequalityReport& r) {
    nlohmann::ordered_json j;
    j["family"] = r.family;
    j["tolerance"] = r.tolerance;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& i : r.instances) {
        nlohmann::ordered_json e;
        e["label"] = i.label;
        e["slack"] = i.slack;
        e["status"] = status_name(i.status);
        arr.push_back(std::move(e));
    }
    j["instances"] = std::move(arr);
    j["satisfied"] = r.count(IneqStatus::Satisfied);
    j["saturated"] = r.count(IneqStatus::Saturated);
    j["violated"] = r.count(IneqStatus::Violated);
    return j.dump();
}

std::string report_to_text(const InequalityReport& r) {
    char tolbuf[32];
    std::snprintf(tolbuf, sizeof tolbuf, "%.10g", r.tolerance);
    std::string out = r.family + " (tol " + tolbuf + ")\n";
    char buf[160];
    for (const auto& i : r.instances) {
        std::snprintf(buf, sizeof buf, "  %-40s slack % .10g  %s\n", i.label.c_str(), i.slack,
                      status_name(i.status));
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "  => %d satisfied, %d saturated, %d violated\n",
                  r.count(IneqStatus::Satisfied), r.count(IneqStatus::Saturated),
                  r.count(IneqStatus::Violated));
    out += buf;
    return out;
}

}  // namespace dicke
