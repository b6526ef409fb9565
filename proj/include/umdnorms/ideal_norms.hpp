#pragma once

#include "umdnorms/norms.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace umdnorms {

struct OptimizerConfig {
    int restarts = 32;
    int max_iterations = 500;
    double grad_tol = 1e-9;
    std::uint64_t seed = 0;
    // Skip the Hilbert closed form and run the iterative path; used by tests
    // that cross-check the optimizer against the singular value.
    bool force_iterative = false;
    // 0 = use UMDNORMS_THREADS or hardware concurrency.
    int threads = 0;
};

// Certified lower bound together with the point attaining it.
struct IdealNormEstimate {
    double value = 0.0;
    bool exact = false;
    int restarts_used = 0;
    long iterations = 0;
    std::vector<double> best_per_restart;
    std::optional<VectorTuple> certificate_tuple;
    std::optional<GridFunction> certificate_function;
    // For mu: the two branch values (rho(C,S), rho(S,C)).
    std::optional<std::pair<double, double>> branches;
};

// Lower bound for rho(T | B_n, A_n): maximizes ||(T x_k)|B|| over tuples with
// ||(x_k)|A|| = 1 by projected gradient ascent with random restarts. Exact
// closed form (largest singular value) when both spaces are Hilbert.
IdealNormEstimate rho_estimate(const LinearOperator& T, const TrigSystem& to_system,
                               const TrigSystem& from_system, const QuadratureGrid& grid,
                               const OptimizerConfig& cfg);

// Lower bound for delta(T | B_n, A_n): maximizes ||(T <f, conj a_k>)|B|| over
// grid functions with unit L2 norm. One restart is seeded with the rho
// certificate embedded as f = sum x_k a_k, so delta >= rho - 1e-9 always.
// Requires grid N >= 4n.
IdealNormEstimate delta_estimate(const LinearOperator& T, const TrigSystem& to_system,
                                 const TrigSystem& from_system, const QuadratureGrid& grid,
                                 const OptimizerConfig& cfg,
                                 const GridFunction* warm_start = nullptr);

// max{ rho(T|C_n,S_n), rho(T|S_n,C_n) } with the winning certificate.
IdealNormEstimate mu_estimate(const LinearOperator& T, int n, const QuadratureGrid& grid,
                              const OptimizerConfig& cfg);

// Independent oracle: dense net on the unit sphere of the tuple space plus
// derivative-free compass-search polish. Limited to <= 6 real degrees of
// freedom.
double brute_force_rho(const LinearOperator& T, const TrigSystem& to_system,
                       const TrigSystem& from_system, const QuadratureGrid& grid,
                       double net_resolution);

// |delta(T|B,A) - delta(T'|conj A, conj B)| with matched configs; diagnostic
// only, both sides are lower bounds.
double duality_gap(const LinearOperator& T, const TrigSystem& to_system,
                   const TrigSystem& from_system, const QuadratureGrid& grid,
                   const OptimizerConfig& cfg);

// Ratio evaluations used to re-check certificates.
double rho_ratio(const LinearOperator& T, const TrigSystem& to_system,
                 const TrigSystem& from_system, const QuadratureGrid& grid,
                 const VectorTuple& xs);
double delta_ratio(const LinearOperator& T, const TrigSystem& to_system,
                   const TrigSystem& from_system, const QuadratureGrid& grid,
                   const GridFunction& f);

int resolve_threads(int requested);

}  // namespace umdnorms
