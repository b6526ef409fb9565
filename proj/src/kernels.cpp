#include "umdnorms/kernels.hpp"

namespace umdnorms {

KernelSpec KernelSpec::dirichlet(int k) {
    if (k <= 0) throw std::invalid_argument("invalid kernel");
    return KernelSpec{Kind::dirichlet, k};
}

KernelSpec KernelSpec::vallee_poussin(int m) {
    if (m <= 0) throw std::invalid_argument("invalid kernel");
    return KernelSpec{Kind::vallee_poussin, m};
}

namespace {

Complex dirichlet_sum(int k, double t) {
    Complex acc(0.0, 0.0);
    for (int l = -k; l <= k; ++l) acc += Complex(std::cos(l * t), std::sin(l * t));
    return acc;
}

}  // namespace

double kernel_eval(const KernelSpec& spec, double t) {
    Complex v(0.0, 0.0);
    if (spec.kind == KernelSpec::Kind::dirichlet) {
        v = dirichlet_sum(spec.order, t);
    } else {
        int m = spec.order;
        for (int k = m; k <= 2 * m - 1; ++k) v += dirichlet_sum(k, t);
        v /= static_cast<double>(m);
    }
    if (!(std::abs(v.imag()) < 1e-12 * std::max(1.0, std::abs(v.real()))))
        throw std::logic_error("kernel eval not real");
    return v.real();
}

double vp_coefficient(int m, int k) {
    int a = std::abs(k);
    if (a <= m) return 1.0;
    if (a >= 2 * m) return 0.0;
    return static_cast<double>(2 * m - a) / m;
}

double vp_l1_norm(int m, const QuadratureGrid& grid) {
    KernelSpec spec = KernelSpec::vallee_poussin(m);
    double acc = 0.0;
    for (int j = 0; j < grid.size(); ++j) acc += std::abs(kernel_eval(spec, grid.node(j)));
    return acc * grid.weight();
}

GridFunction vp_apply(int m, const GridFunction& f) {
    const int band = 2 * m - 1;
    if (2 * band + 1 > f.grid.size()) throw std::domain_error("aliasing");
    TrigSystem ext = TrigSystem::exponential_range(-band, band);
    VectorTuple coeffs = fourier_coefficients(f, ext);
    Mat a = evaluation_matrix(ext, f.grid);
    Mat c = coeffs.as_matrix();  // dim x (2*band+1)
    for (int k = 0; k < c.cols(); ++k) c.col(k) *= vp_coefficient(m, ext.lo() + k);
    return GridFunction::from_matrix(f.space, f.grid, c * a);
}

}  // namespace umdnorms
