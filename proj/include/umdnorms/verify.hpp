#pragma once

#include "umdnorms/ideal_norms.hpp"

#include <string>
#include <vector>

namespace umdnorms {

// identity: exact algebraic identity, residual below a hard tolerance.
// constructive: inequality valid for every input, asserted with tiny slack.
// estimate: compares two heuristic lower bounds against a sup-level constant;
//   monitored with documented slack rather than hard-asserted semantics.
// informational: recorded, never fails the suite.
enum class CheckClass { identity, constructive, estimate, informational };

enum class Verdict { pass, fail, informational };

struct CheckResult {
    std::string id;
    std::string instance;
    double lhs = 0.0;
    double rhs = 0.0;
    double constant = 1.0;
    double ratio = 0.0;
    double tolerance = 0.0;
    CheckClass cls = CheckClass::constructive;
    Verdict verdict = Verdict::pass;
};

// Builds a result with the uniform pass rule:
// lhs <= constant * rhs * (1 + slack) + abs_tol.
CheckResult make_check(std::string id, std::string instance, double lhs, double rhs,
                       double constant, double slack, double abs_tol, CheckClass cls);

// Summation rearrangement identities (pointwise), conjugation symmetry and
// tensor symmetry as norm equalities.
std::vector<CheckResult> check_identities(int trials, std::uint64_t seed);

// Constructive inequalities that hold for every tuple/function.
std::vector<CheckResult> check_tuple_inequalities(int trials,
                                                  const std::vector<NormedSpace>& spaces,
                                                  int n_max, std::uint64_t seed);

// Constant chain at the estimate level, plus exact-side forms on Hilbert
// spaces.
std::vector<CheckResult> check_constant_chain(const std::vector<NormedSpace>& spaces,
                                              const std::vector<int>& n_list,
                                              const OptimizerConfig& cfg);

std::vector<CheckResult> check_duality_and_injectivity(const OptimizerConfig& cfg);

bool all_passed(const std::vector<CheckResult>& results);

// (2/pi * integral over [lo,hi) of ||sum_k y_k cos kt||^2 dt)^{1/2} by
// composite Simpson, refined until two levels agree to 1e-9 relative.
double cosine_subinterval_norm(const NormedSpace& space, const std::vector<Vec>& ys,
                               double lo, double hi);

}  // namespace umdnorms
