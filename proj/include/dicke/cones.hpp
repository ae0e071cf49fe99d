// cones.hpp -- entropy-inequality checks over entropy vectors.
//
// Families:
//   subadditivity      S_I + S_J >= S_IJ            (disjoint non-empty I, J)
//   mmi                S_IJ + S_IK + S_JK >= S_I + S_J + S_K + S_IJK
//   sqec               -S_{l-1} + 2 S_l - S_{l+1} >= 0,  1 <= l <= ceil(N/2)
//   shec               -l(l+1) S_{l-1} + 2(l-1)(l+1) S_l - l(l-1) S_{l+1} >= 0,
//                      2 <= l <= floor(N/2)  (empty report for N < 4)
//
// Subadditivity and MMI run on full-form vectors, SQEC/SHEC on symmetrized
// ones (S_0 := 0).  Status per instance from the slack (lhs - rhs):
// slack > tol satisfied, |slack| <= tol saturated, slack < -tol violated.
#pragma once

#include <string>
#include <vector>

#include "dicke/entropy.hpp"

namespace dicke {

enum class IneqStatus { Satisfied, Saturated, Violated };

struct IneqInstance {
    std::string label;
    double slack = 0.0;
    IneqStatus status = IneqStatus::Satisfied;
};

struct InequalityReport {
    std::string family;
    double tolerance = 1e-9;
    std::vector<IneqInstance> instances;

    int count(IneqStatus st) const;
    bool any_violated() const { return count(IneqStatus::Violated) > 0; }
    double min_slack() const;
};

InequalityReport check_subadditivity(const EntropyVector& full, double tol = 1e-9);
InequalityReport check_mmi(const EntropyVector& full, double tol = 1e-9);
InequalityReport check_sqec(const EntropyVector& symmetrized, double tol = 1e-9);
InequalityReport check_shec(const EntropyVector& symmetrized, double tol = 1e-9);

std::string report_to_json(const InequalityReport& r);
// human-readable table, one instance per line
std::string report_to_text(const InequalityReport& r);

}  // namespace dicke
