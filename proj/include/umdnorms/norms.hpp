#pragma once

#include "umdnorms/spaces.hpp"
#include "umdnorms/systems.hpp"

#include <vector>

namespace umdnorms {

// (x_1,...,x_n) in X^n.
struct VectorTuple {
    NormedSpace space;
    std::vector<Vec> entries;

    VectorTuple(NormedSpace s, std::vector<Vec> xs);

    int size() const { return static_cast<int>(entries.size()); }

    // dim x n matrix with the entries as columns
    Mat as_matrix() const;
    static VectorTuple from_matrix(NormedSpace s, const Mat& m);
};

// X-valued function sampled on a grid; identified with its trigonometric
// interpolant of degree < N/2.
struct GridFunction {
    NormedSpace space;
    QuadratureGrid grid;
    std::vector<Vec> values;

    GridFunction(NormedSpace s, QuadratureGrid g, std::vector<Vec> vals);

    Mat as_matrix() const;  // dim x N
    static GridFunction from_matrix(NormedSpace s, QuadratureGrid g, const Mat& m);
};

// ( sum_nodes ||sum_k x_k a_k(t)||^2 weight )^{1/2}
double system_norm(const VectorTuple& xs, const TrigSystem& system, const QuadratureGrid& grid);
double system_norm(const VectorTuple& xs, const TensorSystem& system, const QuadratureGrid& grid);

// Relative difference between the norm on the given grid and on the doubled
// grid; monitors quadrature error of ||.||^2 for non-quadratic norms.
double doubling_residual(const VectorTuple& xs, const TrigSystem& system,
                         const QuadratureGrid& grid);

double l2_norm(const GridFunction& f);

// k-th entry is sum_nodes f(t_j) conj(a_k(t_j)) weight. Throws "aliasing"
// when the system's maximal frequency exceeds the grid's Nyquist limit.
VectorTuple fourier_coefficients(const GridFunction& f, const TrigSystem& system);

// Pointwise multiplication by e_l(t); preserves the L2 norm.
GridFunction modulate(const GridFunction& f, int l);

// Subtracts the frequency component c e_l, c = <f, e_l>, so the discrete
// l-th Fourier coefficient becomes zero. Contracts the L2 norm when the
// space is Hilbert; in general the norm may grow slightly.
GridFunction remove_frequency(const GridFunction& f, int l);

}  // namespace umdnorms
