#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dicke/cones.hpp"
#include "dicke/entropy.hpp"

using namespace dicke;

namespace {

EntropyVector full_vec(int n, int k) { return dicke_entropy_vector(n, k, 2.0, VectorForm::Full); }
EntropyVector sym_vec(int n, int k) {
    return dicke_entropy_vector(n, k, 2.0, VectorForm::Symmetrized);
}

}  // namespace

TEST_CASE("subadditivity holds on Dicke vectors") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            auto r = check_subadditivity(full_vec(n, k));
            CHECK_FALSE(r.any_violated());
            CHECK(r.min_slack() >= -r.tolerance);
        }
}

TEST_CASE("subadditivity instance count: unordered disjoint non-empty pairs") {
    // (3^n - 2^{n+1} + 1) / 2
    CHECK(check_subadditivity(full_vec(2, 1)).instances.size() == 1);
    CHECK(check_subadditivity(full_vec(3, 1)).instances.size() == 6);
    CHECK(check_subadditivity(full_vec(4, 1)).instances.size() == 25);
}

TEST_CASE("MMI: saturated at N=3, violated at (4,1) and (4,2)") {
    for (int k = 1; k <= 3; ++k) {
        auto r = check_mmi(full_vec(3, k));
        CHECK(r.instances.size() == 1);
        CHECK(r.count(IneqStatus::Violated) == 0);
        CHECK(r.count(IneqStatus::Saturated) == 1);
    }
    auto r41 = check_mmi(full_vec(4, 1));
    CHECK(r41.instances.size() == 10);
    CHECK(r41.any_violated());
    CHECK(r41.count(IneqStatus::Violated) == 4);  // the four singleton triples
    auto r42 = check_mmi(full_vec(4, 2));
    CHECK(r42.any_violated());
    CHECK_THROWS(check_mmi(full_vec(2, 1)));
}

TEST_CASE("MMI instance labels name disjoint subsets") {
    auto r = check_mmi(full_vec(3, 1));
    CHECK(r.instances[0].label == "{1},{2},{3}");
}

TEST_CASE("SQEC satisfied for all Dicke vectors N <= 10") {
    for (int n = 2; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            auto r = check_sqec(sym_vec(n, k));
            CHECK(r.instances.size() == std::size_t((n + 1) / 2));
            CHECK_FALSE(r.any_violated());
        }
}

TEST_CASE("SHEC: empty below N=4, violated on proper Dicke states") {
    CHECK(check_shec(sym_vec(3, 1)).instances.empty());
    for (int n = 4; n <= 8; ++n)
        for (int k = 1; k < n; ++k) {
            auto r = check_shec(sym_vec(n, k));
            CHECK(r.instances.size() == std::size_t(n / 2 - 1));
            CHECK(r.any_violated());
        }
    // product states satisfy everything trivially (all-zero vector)
    CHECK_FALSE(check_shec(sym_vec(6, 0)).any_violated());
}

TEST_CASE("status boundaries around the tolerance") {
    EntropyVector v;
    v.n = 2;
    v.base = 2.0;
    v.form = VectorForm::Full;
    double tol = 1e-9;
    // masks {1},{2},{12}: slack = S1 + S2 - S12
    v.entries = {1.0, 1.0, 2.0 + tol / 2};  // |slack| inside tol -> saturated
    CHECK(check_subadditivity(v, tol).count(IneqStatus::Saturated) == 1);
    v.entries = {1.0, 1.0, 2.0 - tol / 2};  // small positive slack, still saturated
    CHECK(check_subadditivity(v, tol).count(IneqStatus::Saturated) == 1);
    v.entries = {1.0, 1.0, 2.0 + 3 * tol};  // beyond -> violated
    CHECK(check_subadditivity(v, tol).count(IneqStatus::Violated) == 1);
    v.entries = {1.0, 1.0, 1.0};  // positive slack -> satisfied
    CHECK(check_subadditivity(v, tol).count(IneqStatus::Satisfied) == 1);
}

TEST_CASE("reports serialize with family, tolerance and statuses") {
    auto r = check_mmi(full_vec(4, 1));
    std::string js = report_to_json(r);
    CHECK(js.find("\"mmi\"") != std::string::npos);
    CHECK(js.find("violated") != std::string::npos);
    std::string txt = report_to_text(r);
    CHECK(txt.find("violated") != std::string::npos);
    CHECK(txt.find("{1},{2},{3}") != std::string::npos);
}

TEST_CASE("form mismatches are rejected") {
    auto red = dicke_entropy_vector(4, 1, 2.0, VectorForm::Reduced);
    CHECK_THROWS(check_subadditivity(red));
    CHECK_THROWS(check_mmi(red));
    CHECK_THROWS(check_sqec(full_vec(4, 1)));
    CHECK_THROWS(check_shec(full_vec(4, 1)));
}
