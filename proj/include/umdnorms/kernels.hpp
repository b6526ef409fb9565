#pragma once

#include "umdnorms/norms.hpp"

namespace umdnorms {

struct KernelSpec {
    enum class Kind { dirichlet, vallee_poussin };
    Kind kind;
    int order;  // k for Dirichlet, m for de la Vallee Poussin

    static KernelSpec dirichlet(int k);
    static KernelSpec vallee_poussin(int m);

    int degree_bound() const {
        return kind == Kind::dirichlet ? order : 2 * order - 1;
    }
};

// D_k(t) = sum_{|l|<=k} exp(ilt); V_m(t) = (1/m) sum_{k=m}^{2m-1} D_k(t).
// Direct summation; the imaginary part cancels and is asserted below 1e-12.
double kernel_eval(const KernelSpec& spec, double t);

// Fourier coefficient of V_m: 1 on |k| <= m, (2m-|k|)/m for m < |k| < 2m,
// 0 beyond.
double vp_coefficient(int m, int k);

// (1/2pi) integral of |V_m|; bounded by 3.
double vp_l1_norm(int m, const QuadratureGrid& grid);

// Frequency-domain application of the V_m smoothing operator.
GridFunction vp_apply(int m, const GridFunction& f);

}  // namespace umdnorms
